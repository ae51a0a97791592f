#include "core/quaternion.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace ewl {

Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat conjugate(const Quat& q) { return {q.w, -q.x, -q.y, -q.z}; }

double norm(const Quat& q) {
  return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

Quat inverse(const Quat& q) {
  double n2 = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
  Quat c = conjugate(q);
  return {c.w / n2, c.x / n2, c.y / n2, c.z / n2};
}

double max_abs_diff(const Quat& a, const Quat& b) {
  return std::max({std::abs(a.w - b.w), std::abs(a.x - b.x), std::abs(a.y - b.y),
                   std::abs(a.z - b.z)});
}

Quat pauli_quat(const SU2& u) {
  cplx a = u.alpha();
  cplx b = u.beta();
  return {a.real(), -b.imag(), -b.real(), -a.imag()};
}

SU2 su2_from_pauli(const Quat& q) {
  return SU2::from_params(cplx(q.w, -q.z), cplx(-q.y, -q.x));
}

Quat first_player_quat(const SU2& u) {
  Quat p = pauli_quat(u);
  return {p.w, -p.z, p.y, p.x};
}

Quat second_player_quat(const SU2& u) {
  Quat p = pauli_quat(u);
  return {p.w, p.z, -p.x, -p.y};
}

SU2 su2_from_first_player(const Quat& q) {
  return SU2::from_params(cplx(q.w, q.x), cplx(-q.y, -q.z));
}

Quat rotate(const Quat& r, const Quat& q1, const Quat& q2) {
  if (std::abs(norm(r) - 1.0) > 1e-9 || std::abs(norm(q1) - 1.0) > 1e-9 ||
      std::abs(norm(q2) - 1.0) > 1e-9) {
    throw NormError("rotation arguments must be unit quaternions");
  }
  return q1 * r * inverse(q2);
}

Amplitudes amplitudes_from_quaternions(const SU2& alice, const SU2& bob) {
  Quat q = first_player_quat(alice) * inverse(second_player_quat(bob));
  return {q.w, q.y, q.z, q.x};
}

}  // namespace ewl
