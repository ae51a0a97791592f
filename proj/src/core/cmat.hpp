#pragma once

#include <array>
#include <complex>

namespace ewl {

using cplx = std::complex<double>;

struct Vec2 {
  std::array<cplx, 2> c{};
  cplx& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
};

struct Vec4 {
  std::array<cplx, 4> c{};
  cplx& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
};

// Row-major dense 2x2 / 4x4 complex matrices. Fixed size on purpose: every
// object in this library is a qubit-pair operator, and the component
// conventions below are part of the artifact's contract.
struct Mat2 {
  std::array<cplx, 4> e{};
  cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(r * 2 + c)]; }
  const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(r * 2 + c)]; }
};

struct Mat4 {
  std::array<cplx, 16> e{};
  cplx& operator()(int r, int c) { return e[static_cast<std::size_t>(r * 4 + c)]; }
  const cplx& operator()(int r, int c) const { return e[static_cast<std::size_t>(r * 4 + c)]; }
};

Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator*(cplx s, const Vec2& v);
Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec4 operator*(cplx s, const Vec4& v);

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(cplx s, const Mat2& m);
Mat2 operator*(const Mat2& a, const Mat2& b);
Vec2 operator*(const Mat2& m, const Vec2& v);

Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(cplx s, const Mat4& m);
Mat4 operator*(const Mat4& a, const Mat4& b);
Vec4 operator*(const Mat4& m, const Vec4& v);

Mat2 adjoint(const Mat2& m);
Mat4 adjoint(const Mat4& m);
Mat2 conj(const Mat2& m);
Vec4 conj(const Vec4& v);

// Inner products are conjugate-linear in the first argument.
cplx inner(const Vec2& a, const Vec2& b);
cplx inner(const Vec4& a, const Vec4& b);
double norm(const Vec2& v);
double norm(const Vec4& v);

double max_abs(const Vec4& v);
double max_abs_diff(const Vec4& a, const Vec4& b);
double max_abs_diff(const Mat4& a, const Mat4& b);
double max_imag(const Vec4& v);
double max_imag(const Mat4& m);

// Component convention for product states: the FIRST factor's index varies
// fastest, (a,b)^T (x) (c,d)^T = (ac, bc, ad, bd)^T. Pair basis order is
// |++>, |-+>, |+->, |--> with the first symbol belonging to player one and
// |+> = (1,0)^T the cooperative move. Matrix version:
// T[(i+2j),(k+2l)] = A(i,k) * B(j,l).
Vec4 tensor(const Vec2& a, const Vec2& b);
Mat4 tensor(const Mat2& a, const Mat2& b);

const Mat2& identity2();
const Mat4& identity4();
const Mat2& sigma1();
const Mat2& sigma2();
const Mat2& sigma3();
// The classical defect move, i*sigma2 = [[0,1],[-1,0]].
const Mat2& defect_matrix();

Vec4 basis4(int k);

}  // namespace ewl
