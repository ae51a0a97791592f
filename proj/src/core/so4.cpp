#include "core/so4.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace ewl {

RMat4 RMat4::identity() {
  RMat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

RMat4 operator*(const RMat4& a, const RMat4& b) {
  RMat4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      double acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

RMat4 operator-(const RMat4& a, const RMat4& b) {
  RMat4 out;
  for (std::size_t i = 0; i < 16; ++i) out.e[i] = a.e[i] - b.e[i];
  return out;
}

Vec4 operator*(const RMat4& m, const Vec4& v) {
  Vec4 out;
  for (int r = 0; r < 4; ++r) {
    cplx acc = 0.0;
    for (int c = 0; c < 4; ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::array<double, 4> operator*(const RMat4& m, const std::array<double, 4>& v) {
  std::array<double, 4> out{};
  for (int r = 0; r < 4; ++r) {
    double acc = 0.0;
    for (int c = 0; c < 4; ++c) acc += m(r, c) * v[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

RMat4 transpose(const RMat4& m) {
  RMat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = m(c, r);
  return out;
}

namespace {

double det3(double a, double b, double c, double d, double e, double f, double g,
            double h, double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

}  // namespace

double det(const RMat4& m) {
  double out = 0.0;
  for (int c = 0; c < 4; ++c) {
    double minor[9];
    int k = 0;
    for (int r = 1; r < 4; ++r) {
      for (int cc = 0; cc < 4; ++cc) {
        if (cc == c) continue;
        minor[k++] = m(r, cc);
      }
    }
    double cof = det3(minor[0], minor[1], minor[2], minor[3], minor[4], minor[5],
                      minor[6], minor[7], minor[8]);
    out += (c % 2 == 0 ? 1.0 : -1.0) * m(0, c) * cof;
  }
  return out;
}

double max_abs(const RMat4& m) {
  double out = 0.0;
  for (double x : m.e) out = std::max(out, std::abs(x));
  return out;
}

double max_abs_diff(const RMat4& a, const RMat4& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < 16; ++i) out = std::max(out, std::abs(a.e[i] - b.e[i]));
  return out;
}

namespace {

Frame make_bell_frame() {
  // Columns are the Bell-like states (|++> +/- phases |-->), (|-+> -/+ |+->)
  // up to the phases below; fixed once, verified against the reference basis
  // values in the test suite.
  const double rt = 1.0 / std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  Mat4 m;
  m(0, 0) = rt;
  m(0, 3) = -i * rt;
  m(1, 1) = -i * rt;
  m(1, 2) = -rt;
  m(2, 1) = -i * rt;
  m(2, 2) = rt;
  m(3, 0) = rt;
  m(3, 3) = i * rt;
  return {"bell", m};
}

RMat4 axis_rotation() {
  const double rt = 1.0 / std::sqrt(2.0);
  RMat4 p;
  p(0, 0) = rt;
  p(0, 3) = rt;
  p(1, 1) = rt;
  p(1, 2) = rt;
  p(2, 1) = -rt;
  p(2, 2) = rt;
  p(3, 0) = rt;
  p(3, 3) = -rt;
  return p;
}

Frame make_bell_alt_frame() {
  const Frame& base = bell_frame();
  RMat4 p = axis_rotation();
  Mat4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      cplx acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += base.m(r, k) * p(k, c);
      m(r, c) = acc;
    }
  return {"bell-alt", m};
}

}  // namespace

const Frame& bell_frame() {
  static const Frame f = make_bell_frame();
  return f;
}

const Frame& bell_alt_frame() {
  static const Frame f = make_bell_alt_frame();
  return f;
}

Vec4 to_frame(const Frame& f, const Vec4& v) { return adjoint(f.m) * v; }

RMat4 so4_image(const Frame& f, const SU2& alice, const SU2& bob) {
  Mat4 joint = tensor(alice.matrix(), bob.matrix());
  Mat4 s = adjoint(f.m) * (joint * f.m);
  double residue = max_imag(s);
  if (residue > 1e-9) {
    throw RealityError("frame image has imaginary residue " + std::to_string(residue));
  }
  RMat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = s(r, c).real();
  return out;
}

std::array<Vec4, 4> transformed_basis(const Frame& f) {
  Gate gate(std::numbers::pi / 2.0);
  std::array<Vec4, 4> out;
  for (int k = 0; k < 4; ++k) out[static_cast<std::size_t>(k)] = to_frame(f, gate.matrix() * basis4(k));
  return out;
}

Amplitudes amplitudes_from_rotation(const RMat4& s, const Frame& f) {
  auto basis = transformed_basis(f);
  Vec4 rotated = s * basis[0];
  return {inner(basis[0], rotated), inner(basis[1], rotated),
          inner(basis[2], rotated), inner(basis[3], rotated)};
}

}  // namespace ewl
