#pragma once

#include <array>
#include <string>

#include "core/cmat.hpp"
#include "core/game.hpp"
#include "core/su2.hpp"

namespace ewl {

// Real 4x4 matrix, row-major.
struct RMat4 {
  std::array<double, 16> e{};
  double& operator()(int r, int c) { return e[static_cast<std::size_t>(r * 4 + c)]; }
  const double& operator()(int r, int c) const {
    return e[static_cast<std::size_t>(r * 4 + c)];
  }
  static RMat4 identity();
};

RMat4 operator*(const RMat4& a, const RMat4& b);
RMat4 operator-(const RMat4& a, const RMat4& b);
Vec4 operator*(const RMat4& m, const Vec4& v);
std::array<double, 4> operator*(const RMat4& m, const std::array<double, 4>& v);
RMat4 transpose(const RMat4& m);
// Cofactor expansion along the first row.
double det(const RMat4& m);
double max_abs(const RMat4& m);
double max_abs_diff(const RMat4& a, const RMat4& b);

// Unitary basis change under which joint strategies act as real rotations.
// Two built-in frames are provided; they differ by a fixed real orthogonal
// rotation, so all real-valued conclusions agree between them.
struct Frame {
  std::string name;
  Mat4 m;
};

// Columns are Bell-like entangled states.
const Frame& bell_frame();
// bell_frame composed with a fixed real rotation of the component axes.
const Frame& bell_alt_frame();

Vec4 to_frame(const Frame& f, const Vec4& v);

// F^+ (U_a (x) U_b) F truncated to its real part. Throws RealityError if any
// imaginary residue exceeds 1e-9 (the image is real only for exact SU(2)
// inputs and one of the frames above).
RMat4 so4_image(const Frame& f, const SU2& alice, const SU2& bob);

// Frame image of the four maximally entangled reference kets
// F^+ J(pi/2)|epsilon epsilon'>, in pair-basis order.
std::array<Vec4, 4> transformed_basis(const Frame& f);

// Amplitudes recovered from the rotation alone:
// A_k = <basis_k | S basis_0> with basis = transformed_basis(f).
Amplitudes amplitudes_from_rotation(const RMat4& s, const Frame& f);

}  // namespace ewl
