#include "core/stability.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/game.hpp"

namespace ewl {

namespace {

double fixing_residual(const Vec4& state, const SU2& a, const SU2& b) {
  Vec4 moved = tensor(a.matrix(), b.matrix()) * state;
  return max_abs_diff(moved, state);
}

}  // namespace

Conjugator derive_conjugator() {
  Gate gate(std::numbers::pi / 2.0);
  Vec4 psi = gate.initial_state();

  // Coefficient matrix of the state: M(i,j) = psi[i + 2j].
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = psi[i + 2 * j];

  Mat2 w = m * sigma2();
  cplx detw = w(0, 0) * w(1, 1) - w(0, 1) * w(1, 0);
  double scale = std::sqrt(std::abs(detw));
  if (scale < 1e-12) {
    throw ConvergenceError("state coefficient matrix is singular");
  }
  Mat2 wu = (1.0 / scale) * w;
  cplx detu = wu(0, 0) * wu(1, 1) - wu(0, 1) * wu(1, 0);
  cplx root = cplx(1.0, 0.0) / std::sqrt(detu);
  Mat2 u0m = root * wu;

  // Canonical sign: first nonzero entry in reading order gets a positive
  // real part.
  for (const cplx& entry : u0m.e) {
    if (std::abs(entry) > 1e-12) {
      if (entry.real() < 0.0) u0m = cplx(-1.0, 0.0) * u0m;
      break;
    }
  }

  Conjugator c{SU2::from_params(u0m(0, 0), u0m(0, 1))};

  Rng rng(0x57ab1e5eedull);
  for (int i = 0; i < 100; ++i) {
    SU2 u = SU2::haar(rng);
    auto [a, b] = stability_element(u, c);
    if (fixing_residual(psi, a, b) > 1e-10) {
      throw ConvergenceError("conjugator fails to stabilize the entangled state");
    }
  }
  return c;
}

std::pair<SU2, SU2> stability_element(const SU2& u, const Conjugator& c) {
  return {u, c.u0 * u * c.u0.dagger()};
}

SU2 counterstrategy(const SU2& target_alice, const SU2& target_bob,
                    const SU2& first_move, const Conjugator& c) {
  return target_bob * c.u0 * target_alice.dagger() * first_move * c.u0.dagger();
}

SU2 counterstrategy_first(const SU2& target_alice, const SU2& target_bob,
                          const SU2& second_move, const Conjugator& c) {
  return target_alice * c.u0.dagger() * target_bob.dagger() * second_move * c.u0;
}

std::pair<SU2, SU2> partial_entanglement_stabilizer(double delta, double gamma) {
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi / 2.0)) {
    throw RangeError("entanglement parameter must lie in [0, pi/2]");
  }
  return {exp_sigma(3, delta), exp_sigma(3, -delta)};
}

}  // namespace ewl
