#include "core/su2.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace ewl {

SU2 SU2::from_params(cplx alpha, cplx beta) {
  double n2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw NormError("strategy components are not normalized: |alpha|^2+|beta|^2 = " +
                    std::to_string(n2));
  }
  double inv = 1.0 / std::sqrt(n2);
  return SU2(alpha * inv, beta * inv);
}

SU2 SU2::from_angles(double theta, double phi, double psi) {
  double c = std::cos(theta / 2.0);
  double s = std::sin(theta / 2.0);
  return SU2(c * std::polar(1.0, phi), s * std::polar(1.0, psi));
}

SU2 SU2::haar(Rng& rng) {
  double a = rng.gaussian();
  double b = rng.gaussian();
  double c = rng.gaussian();
  double d = rng.gaussian();
  double n = std::sqrt(a * a + b * b + c * c + d * d);
  return SU2(cplx(a / n, b / n), cplx(c / n, d / n));
}

Mat2 SU2::matrix() const {
  Mat2 m;
  m(0, 0) = alpha_;
  m(0, 1) = beta_;
  m(1, 0) = -std::conj(beta_);
  m(1, 1) = std::conj(alpha_);
  return m;
}

SU2 SU2::operator*(const SU2& rhs) const {
  // Top row of the matrix product, closed form.
  cplx a = alpha_ * rhs.alpha_ - beta_ * std::conj(rhs.beta_);
  cplx b = alpha_ * rhs.beta_ + beta_ * std::conj(rhs.alpha_);
  return SU2(a, b);
}

std::array<double, 3> SU2::to_angles() const {
  double ca = std::abs(alpha_);
  double sb = std::abs(beta_);
  double theta = 2.0 * std::atan2(sb, ca);
  double phi = ca > 1e-15 ? std::arg(alpha_) : 0.0;
  double psi = sb > 1e-15 ? std::arg(beta_) : 0.0;
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (psi < 0.0) psi += 2.0 * std::numbers::pi;
  return {theta, phi, psi};
}

SU2 exp_sigma(int axis, double angle) {
  double c = std::cos(angle);
  double s = std::sin(angle);
  switch (axis) {
    case 1:
      return SU2::from_params(c, cplx(0.0, s));
    case 2:
      return SU2::from_params(c, s);
    case 3:
      return SU2::from_params(std::polar(1.0, angle), 0.0);
    default:
      throw RangeError("pauli axis must be 1, 2 or 3");
  }
}

}  // namespace ewl
