#pragma once

#include <array>

#include "core/cmat.hpp"
#include "core/rng.hpp"

namespace ewl {

// SU(2) strategy, stored as the top row (alpha, beta) of
// [[alpha, beta], [-conj(beta), conj(alpha)]].
class SU2 {
 public:
  SU2() : alpha_(1.0), beta_(0.0) {}

  // Throws NormError if |alpha|^2 + |beta|^2 deviates from 1 by more than
  // 1e-9; smaller deviations are renormalized.
  static SU2 from_params(cplx alpha, cplx beta);

  // alpha = cos(theta/2) e^{i phi}, beta = sin(theta/2) e^{i psi},
  // theta in [0, pi], phi and psi in [0, 2 pi).
  static SU2 from_angles(double theta, double phi, double psi);

  // Haar-uniform draw: a 4-component Gaussian vector, normalized.
  static SU2 haar(Rng& rng);

  static SU2 identity() { return SU2(); }
  // The classical defect move i*sigma2.
  static SU2 defect() { return SU2(0.0, 1.0); }

  cplx alpha() const { return alpha_; }
  cplx beta() const { return beta_; }
  Mat2 matrix() const;

  SU2 dagger() const { return SU2(std::conj(alpha_), -beta_); }
  SU2 operator*(const SU2& rhs) const;

  // Recovered (theta, phi, psi); phases at a parametrization pole
  // (sin or cos of theta/2 vanishing) are set to 0.
  std::array<double, 3> to_angles() const;

  Vec2 column0() const { return {{alpha_, -std::conj(beta_)}}; }

 private:
  SU2(cplx a, cplx b) : alpha_(a), beta_(b) {}
  cplx alpha_;
  cplx beta_;
};

// exp(i * angle * sigma_axis), axis in {1,2,3}.
SU2 exp_sigma(int axis, double angle);

}  // namespace ewl
