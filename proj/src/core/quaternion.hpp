#pragma once

#include "core/game.hpp"
#include "core/su2.hpp"

namespace ewl {

struct Quat {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quat one() { return {1.0, 0.0, 0.0, 0.0}; }
};

Quat operator*(const Quat& a, const Quat& b);
Quat conjugate(const Quat& q);
double norm(const Quat& q);
Quat inverse(const Quat& q);
double max_abs_diff(const Quat& a, const Quat& b);

// Coefficients of U over {1, -i sigma1, -i sigma2, -i sigma3}:
// U = w - i(x sigma1 + y sigma2 + z sigma3).
Quat pauli_quat(const SU2& u);
SU2 su2_from_pauli(const Quat& q);

// Player embeddings. Each is the pauli_quat image pushed through a fixed
// algebra automorphism (a signed permutation of the imaginary units); the
// two players use different automorphisms, which is what makes the joint
// action a two-sided quaternion rotation.
Quat first_player_quat(const SU2& u);   // (p_w, -p_z, p_y, p_x)
Quat second_player_quat(const SU2& u);  // (p_w, p_z, -p_x, -p_y)
SU2 su2_from_first_player(const Quat& q);

// q1 * r * q2^{-1}; NormError if any argument is off unit norm by >1e-9.
Quat rotate(const Quat& r, const Quat& q1, const Quat& q2);

// Amplitudes at maximal entanglement, computed without any 4x4 algebra:
// components (A++, A-+, A+-, A--) = (w, y, z, x) of
// first_player_quat(alice) * second_player_quat(bob)^{-1}.
Amplitudes amplitudes_from_quaternions(const SU2& alice, const SU2& bob);

}  // namespace ewl
