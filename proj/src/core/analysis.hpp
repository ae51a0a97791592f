#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/game.hpp"
#include "core/rng.hpp"
#include "core/su2.hpp"

namespace ewl {

struct GammaScanRow {
  double gamma;
  double max_imag;       // largest |Im A| over the sampled strategy pairs
  int jacobian_rank;     // local strategy-manifold rank at a random point
  int sample_count;
};

// For each gamma: draw `samples` Haar strategy pairs, record the largest
// imaginary amplitude component, and compute the manifold rank at a random
// interior point. Deterministic for a given (seed, gammas, samples),
// independent of row evaluation order.
std::vector<GammaScanRow> reality_scan(const std::vector<double>& gammas,
                                       int samples, std::uint64_t seed);

// Angle parameters (theta, phi, psi) per player.
struct StrategyPoint {
  std::array<double, 3> alice;
  std::array<double, 3> bob;
};

// Uniform draw re-sampled until both thetas are at least 1e-3 away from the
// parametrization poles 0 and pi.
StrategyPoint random_interior_point(Rng& rng);

// Rank of the 8x6 Jacobian of (Re A, Im A) with respect to the six angles,
// by central differences with the given step (clamped contract: step in
// [1e-7, 1e-3], RangeError otherwise). Singular values below 1e-4 of the
// largest are treated as zero; DegeneratePointError if the largest singular
// value is below 1e-10.
int strategy_manifold_rank(double gamma, const StrategyPoint& point, double step);

// Strategy pair reproducing a real unit amplitude vector (A++, A-+, A+-, A--)
// exactly at maximal entanglement; second player plays the identity.
// NormError if the target is off unit norm by more than 1e-9.
std::pair<SU2, SU2> achieve_amplitudes(const std::array<double, 4>& target);

enum class Player { first, second };

struct BestResponse {
  SU2 strategy;
  double payoff;
};

// Payoff-maximizing reply at maximal entanglement, built from the
// counterstrategy identity (targets the responder's temptation outcome).
BestResponse best_response(const SU2& opponent, Player responder,
                           const PayoffTable& table);

struct NashCandidate {
  StrategyPoint point;
  double payoff_alice;
  double payoff_bob;
  double max_gain;  // largest unilateral grid improvement either player has
};

struct EquilibriumReport {
  double gamma;
  int grid_per_axis;
  double epsilon;
  std::string certification;  // "counterstrategy-certified" | "grid-certified"
  bool vacuous;               // epsilon swallows the whole payoff range
  std::vector<NashCandidate> candidates;
};

inline constexpr std::uint64_t kDefaultNashBudget = 20'000'000;

// Exhaustive epsilon-equilibrium search over the angle grid
// theta_i = pi i/(G-1), phi_j = 2 pi j/G, psi_k = 2 pi k/G (G = grid_per_axis,
// both players). Deviations are grid-restricted except at maximal
// entanglement, where the exact counterstrategy bound (payoff t) certifies
// against all of SU(2). Gain comparisons carry an absolute 1e-12 slack so
// ulp noise cannot split exact ties. BudgetError if G^6 exceeds budget_cap;
// RangeError for G < 4 or epsilon < 0.
EquilibriumReport pure_nash_search(double gamma, int grid_per_axis, double epsilon,
                                   const PayoffTable& table,
                                   std::uint64_t budget_cap = kDefaultNashBudget);

}  // namespace ewl
