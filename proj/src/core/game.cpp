#include "core/game.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace ewl {

double PayoffTable::max_entry() const { return std::max({r, s, t, p}); }

double PayoffTable::min_entry() const { return std::min({r, s, t, p}); }

Gate::Gate(double gamma) : gamma_(gamma) {
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi / 2.0)) {
    throw RangeError("entanglement parameter must lie in [0, pi/2]");
  }
  double c = std::cos(gamma / 2.0);
  double s = std::sin(gamma / 2.0);
  Mat4 dd = tensor(defect_matrix(), defect_matrix());
  m_ = c * identity4() + cplx(0.0, s) * dd;
  mdag_ = adjoint(m_);
}

Vec4 Gate::initial_state() const { return m_ * basis4(0); }

GameState::GameState(const Vec4& vec) : v(vec) {
  double n = norm(vec);
  if (std::abs(n - 1.0) > 1e-9) {
    throw NormError("game state is not unit norm: |v| = " + std::to_string(n));
  }
}

std::array<double, 4> Amplitudes::probabilities() const {
  return {std::norm(pp), std::norm(mp), std::norm(pm), std::norm(mm)};
}

double Amplitudes::largest_imag() const {
  return std::max({std::abs(pp.imag()), std::abs(mp.imag()),
                   std::abs(pm.imag()), std::abs(mm.imag())});
}

GameState final_state(const Gate& gate, const SU2& alice, const SU2& bob) {
  Mat4 moves = tensor(alice.matrix(), bob.matrix());
  Vec4 out = gate.matrix_dagger() * (moves * gate.initial_state());
  return GameState(out);
}

Amplitudes amplitudes(const GameState& state) {
  return {state.v[0], state.v[1], state.v[2], state.v[3]};
}

Payoffs expected_payoffs(const Amplitudes& a, const PayoffTable& table) {
  auto pr = a.probabilities();
  double alice = table.r * pr[0] + table.t * pr[1] + table.s * pr[2] + table.p * pr[3];
  double bob = table.r * pr[0] + table.s * pr[1] + table.t * pr[2] + table.p * pr[3];
  return {alice, bob};
}

Payoffs evaluate(const Gate& gate, const SU2& alice, const SU2& bob,
                 const PayoffTable& table) {
  return expected_payoffs(amplitudes(final_state(gate, alice, bob)), table);
}

}  // namespace ewl
