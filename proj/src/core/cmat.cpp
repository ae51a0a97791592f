#include "core/cmat.hpp"

#include <algorithm>
#include <cmath>

namespace ewl {

Vec2 operator+(const Vec2& a, const Vec2& b) {
  return {{a.c[0] + b.c[0], a.c[1] + b.c[1]}};
}

Vec2 operator-(const Vec2& a, const Vec2& b) {
  return {{a.c[0] - b.c[0], a.c[1] - b.c[1]}};
}

Vec2 operator*(cplx s, const Vec2& v) { return {{s * v.c[0], s * v.c[1]}}; }

Vec4 operator+(const Vec4& a, const Vec4& b) {
  Vec4 out;
  for (int i = 0; i < 4; ++i) out[i] = a[i] + b[i];
  return out;
}

Vec4 operator-(const Vec4& a, const Vec4& b) {
  Vec4 out;
  for (int i = 0; i < 4; ++i) out[i] = a[i] - b[i];
  return out;
}

Vec4 operator*(cplx s, const Vec4& v) {
  Vec4 out;
  for (int i = 0; i < 4; ++i) out[i] = s * v[i];
  return out;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (std::size_t i = 0; i < 4; ++i) out.e[i] = a.e[i] + b.e[i];
  return out;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (std::size_t i = 0; i < 4; ++i) out.e[i] = a.e[i] - b.e[i];
  return out;
}

Mat2 operator*(cplx s, const Mat2& m) {
  Mat2 out;
  for (std::size_t i = 0; i < 4; ++i) out.e[i] = s * m.e[i];
  return out;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
  return out;
}

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return {{m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]}};
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 16; ++i) out.e[i] = a.e[i] + b.e[i];
  return out;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 16; ++i) out.e[i] = a.e[i] - b.e[i];
  return out;
}

Mat4 operator*(cplx s, const Mat4& m) {
  Mat4 out;
  for (std::size_t i = 0; i < 16; ++i) out.e[i] = s * m.e[i];
  return out;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      cplx acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

Vec4 operator*(const Mat4& m, const Vec4& v) {
  Vec4 out;
  for (int r = 0; r < 4; ++r) {
    cplx acc = 0.0;
    for (int c = 0; c < 4; ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Mat2 adjoint(const Mat2& m) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = std::conj(m(c, r));
  return out;
}

Mat4 adjoint(const Mat4& m) {
  Mat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = std::conj(m(c, r));
  return out;
}

Mat2 conj(const Mat2& m) {
  Mat2 out;
  for (std::size_t i = 0; i < 4; ++i) out.e[i] = std::conj(m.e[i]);
  return out;
}

Vec4 conj(const Vec4& v) {
  Vec4 out;
  for (int i = 0; i < 4; ++i) out[i] = std::conj(v[i]);
  return out;
}

cplx inner(const Vec2& a, const Vec2& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

cplx inner(const Vec4& a, const Vec4& b) {
  cplx acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(const Vec2& v) { return std::sqrt(std::real(inner(v, v))); }

double norm(const Vec4& v) { return std::sqrt(std::real(inner(v, v))); }

double max_abs(const Vec4& v) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(v[i]));
  return m;
}

double max_abs_diff(const Vec4& a, const Vec4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

double max_imag(const Vec4& v) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(std::imag(v[i])));
  return m;
}

double max_imag(const Mat4& m) {
  double out = 0.0;
  for (std::size_t i = 0; i < 16; ++i) out = std::max(out, std::abs(std::imag(m.e[i])));
  return out;
}

Vec4 tensor(const Vec2& a, const Vec2& b) {
  Vec4 out;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) out[i + 2 * j] = a[i] * b[j];
  return out;
}

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k) out(i + 2 * j, k + 2 * l) = a(i, k) * b(j, l);
  return out;
}

const Mat2& identity2() {
  static const Mat2 m = [] {
    Mat2 out;
    out(0, 0) = 1.0;
    out(1, 1) = 1.0;
    return out;
  }();
  return m;
}

const Mat4& identity4() {
  static const Mat4 m = [] {
    Mat4 out;
    for (int i = 0; i < 4; ++i) out(i, i) = 1.0;
    return out;
  }();
  return m;
}

const Mat2& sigma1() {
  static const Mat2 m = [] {
    Mat2 out;
    out(0, 1) = 1.0;
    out(1, 0) = 1.0;
    return out;
  }();
  return m;
}

const Mat2& sigma2() {
  static const Mat2 m = [] {
    Mat2 out;
    out(0, 1) = cplx(0.0, -1.0);
    out(1, 0) = cplx(0.0, 1.0);
    return out;
  }();
  return m;
}

const Mat2& sigma3() {
  static const Mat2 m = [] {
    Mat2 out;
    out(0, 0) = 1.0;
    out(1, 1) = -1.0;
    return out;
  }();
  return m;
}

const Mat2& defect_matrix() {
  static const Mat2 m = [] {
    Mat2 out;
    out(0, 1) = 1.0;
    out(1, 0) = -1.0;
    return out;
  }();
  return m;
}

Vec4 basis4(int k) {
  Vec4 out;
  out[k] = 1.0;
  return out;
}

}  // namespace ewl
