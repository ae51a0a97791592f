#include "core/analysis.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "core/errors.hpp"
#include "core/stability.hpp"

namespace ewl {

namespace {

constexpr double kPi = std::numbers::pi;

std::array<double, 8> amplitude_coords(double gamma, const std::array<double, 6>& a) {
  Gate gate(gamma);
  SU2 ua = SU2::from_angles(a[0], a[1], a[2]);
  SU2 ub = SU2::from_angles(a[3], a[4], a[5]);
  auto amp = amplitudes(final_state(gate, ua, ub)).as_array();
  std::array<double, 8> out{};
  for (int k = 0; k < 4; ++k) {
    out[static_cast<std::size_t>(2 * k)] = amp[static_cast<std::size_t>(k)].real();
    out[static_cast<std::size_t>(2 * k + 1)] = amp[static_cast<std::size_t>(k)].imag();
  }
  return out;
}

const Conjugator& cached_conjugator() {
  static const Conjugator c = derive_conjugator();
  return c;
}

}  // namespace

StrategyPoint random_interior_point(Rng& rng) {
  auto draw_theta = [&rng] {
    double theta = rng.uniform(0.0, kPi);
    while (std::min(theta, kPi - theta) < 1e-3) theta = rng.uniform(0.0, kPi);
    return theta;
  };
  StrategyPoint p;
  p.alice = {draw_theta(), rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, 2.0 * kPi)};
  p.bob = {draw_theta(), rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, 2.0 * kPi)};
  return p;
}

int strategy_manifold_rank(double gamma, const StrategyPoint& point, double step) {
  if (!(step >= 1e-7 && step <= 1e-3)) {
    throw RangeError("finite-difference step must lie in [1e-7, 1e-3]");
  }
  std::array<double, 6> x = {point.alice[0], point.alice[1], point.alice[2],
                             point.bob[0], point.bob[1], point.bob[2]};
  Eigen::Matrix<double, 8, 6> jac;
  for (int i = 0; i < 6; ++i) {
    std::array<double, 6> hi = x;
    std::array<double, 6> lo = x;
    hi[static_cast<std::size_t>(i)] += step;
    lo[static_cast<std::size_t>(i)] -= step;
    auto fhi = amplitude_coords(gamma, hi);
    auto flo = amplitude_coords(gamma, lo);
    for (int r = 0; r < 8; ++r) {
      jac(r, i) = (fhi[static_cast<std::size_t>(r)] - flo[static_cast<std::size_t>(r)]) /
                  (2.0 * step);
    }
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 8, 6>> svd(jac);
  const auto& sv = svd.singularValues();
  double top = sv(0);
  if (top < 1e-10) {
    throw DegeneratePointError("jacobian vanishes at the requested point");
  }
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-4 * top) ++rank;
  }
  return rank;
}

std::vector<GammaScanRow> reality_scan(const std::vector<double>& gammas,
                                       int samples, std::uint64_t seed) {
  if (samples < 1) throw RangeError("sample count must be positive");
  std::vector<GammaScanRow> rows;
  rows.reserve(gammas.size());
  for (std::size_t idx = 0; idx < gammas.size(); ++idx) {
    double gamma = gammas[idx];
    Gate gate(gamma);
    Rng rng = Rng::child(seed, idx);
    double worst = 0.0;
    for (int n = 0; n < samples; ++n) {
      SU2 ua = SU2::haar(rng);
      SU2 ub = SU2::haar(rng);
      worst = std::max(worst,
                       amplitudes(final_state(gate, ua, ub)).largest_imag());
    }
    int rank = -1;
    for (int attempt = 0; attempt < 32 && rank < 0; ++attempt) {
      StrategyPoint p = random_interior_point(rng);
      try {
        rank = strategy_manifold_rank(gamma, p, 1e-5);
      } catch (const DegeneratePointError&) {
        // fully degenerate sample point; draw another
      }
    }
    if (rank < 0) throw DegeneratePointError("no non-degenerate point found");
    rows.push_back({gamma, worst, rank, samples});
  }
  return rows;
}

std::pair<SU2, SU2> achieve_amplitudes(const std::array<double, 4>& target) {
  double n2 = 0.0;
  for (double t : target) n2 += t * t;
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw NormError("target amplitude vector is not unit norm");
  }
  double inv = 1.0 / std::sqrt(n2);
  double a0 = target[0] * inv;
  double a1 = target[1] * inv;
  double a2 = target[2] * inv;
  double a3 = target[3] * inv;
  // Invert the quaternion picture with the second player at the identity:
  // the pair's rotation quaternion is then the first player's own, whose
  // coordinates carry (A++, A--, A-+, A+-) in (w, x, y, z) order.
  SU2 ua = SU2::from_params(cplx(a0, a3), cplx(-a1, -a2));
  return {ua, SU2::identity()};
}

BestResponse best_response(const SU2& opponent, Player responder,
                           const PayoffTable& table) {
  const Conjugator& c = cached_conjugator();
  Gate gate(kPi / 2.0);
  if (responder == Player::second) {
    SU2 reply = counterstrategy(SU2::identity(), SU2::defect(), opponent, c);
    return {reply, evaluate(gate, opponent, reply, table).bob};
  }
  SU2 reply = counterstrategy_first(SU2::defect(), SU2::identity(), opponent, c);
  return {reply, evaluate(gate, reply, opponent, table).alice};
}

namespace {

struct GridStrategy {
  // Columns of the SU(2) matrix, cached for fast joint evaluation.
  Vec2 col0;
  Vec2 col1;
  std::array<double, 3> angles;
};

// Final-state amplitudes for one ordered pair, written for speed: the gate
// image of |++> has only components 0 and 3, and J^+ acts in closed form.
std::array<cplx, 4> pair_amplitudes(const GridStrategy& a, const GridStrategy& b,
                                    double cos_half, double sin_half) {
  cplx v[4];
  // (Ua (x) Ub)(cos|++> + i sin|-->)
  const cplx ia = cplx(0.0, 1.0) * sin_half;
  v[0] = cos_half * a.col0[0] * b.col0[0] + ia * a.col1[0] * b.col1[0];
  v[1] = cos_half * a.col0[1] * b.col0[0] + ia * a.col1[1] * b.col1[0];
  v[2] = cos_half * a.col0[0] * b.col0[1] + ia * a.col1[0] * b.col1[1];
  v[3] = cos_half * a.col0[1] * b.col0[1] + ia * a.col1[1] * b.col1[1];
  // J^+ = cos - i sin (D (x) D); D (x) D maps (v0,v1,v2,v3) -> (v3,-v2,-v1,v0).
  const cplx mi = cplx(0.0, -1.0) * sin_half;
  return {cos_half * v[0] + mi * v[3], cos_half * v[1] - mi * v[2],
          cos_half * v[2] - mi * v[1], cos_half * v[3] + mi * v[0]};
}

}  // namespace

EquilibriumReport pure_nash_search(double gamma, int grid_per_axis, double epsilon,
                                   const PayoffTable& table,
                                   std::uint64_t budget_cap) {
  if (grid_per_axis < 4) throw RangeError("grid resolution must be at least 4");
  if (epsilon < 0.0) throw RangeError("tolerance must be non-negative");
  Gate gate(gamma);  // validates gamma

  const std::uint64_t g = static_cast<std::uint64_t>(grid_per_axis);
  const std::uint64_t per_player = g * g * g;
  const std::uint64_t profiles = per_player * per_player;
  if (profiles > budget_cap) {
    throw BudgetError("grid would require " + std::to_string(profiles) +
                      " profile evaluations (cap " + std::to_string(budget_cap) + ")");
  }

  const int gi = grid_per_axis;
  std::vector<GridStrategy> moves;
  moves.reserve(per_player);
  for (int i = 0; i < gi; ++i) {
    double theta = kPi * i / (gi - 1);
    for (int j = 0; j < gi; ++j) {
      double phi = 2.0 * kPi * j / gi;
      for (int k = 0; k < gi; ++k) {
        double psi = 2.0 * kPi * k / gi;
        SU2 u = SU2::from_angles(theta, phi, psi);
        Mat2 m = u.matrix();
        moves.push_back({{{m(0, 0), m(1, 0)}}, {{m(0, 1), m(1, 1)}}, {theta, phi, psi}});
      }
    }
  }

  const double cos_half = std::cos(gamma / 2.0);
  const double sin_half = std::sin(gamma / 2.0);
  auto payoff_pair = [&](std::size_t a, std::size_t b) {
    auto amp = pair_amplitudes(moves[a], moves[b], cos_half, sin_half);
    double pr0 = std::norm(amp[0]);
    double pr1 = std::norm(amp[1]);
    double pr2 = std::norm(amp[2]);
    double pr3 = std::norm(amp[3]);
    return Payoffs{table.r * pr0 + table.t * pr1 + table.s * pr2 + table.p * pr3,
                   table.r * pr0 + table.s * pr1 + table.t * pr2 + table.p * pr3};
  };

  EquilibriumReport report;
  report.gamma = gamma;
  report.grid_per_axis = grid_per_axis;
  report.epsilon = epsilon;
  report.vacuous = epsilon >= (table.max_entry() - table.min_entry());

  const std::size_t n = moves.size();
  std::vector<double> best_first(n);   // best first-player payoff vs fixed second move
  std::vector<double> best_second(n);  // best second-player payoff vs fixed first move

  const bool max_entangled = std::abs(gamma - kPi / 2.0) <= 1e-12;
  if (max_entangled) {
    // The counterstrategy construction reaches the temptation payoff against
    // any opponent, so the deviation bound is exact over all of SU(2), not
    // just the grid.
    report.certification = "counterstrategy-certified";
    std::fill(best_first.begin(), best_first.end(), table.t);
    std::fill(best_second.begin(), best_second.end(), table.t);
  } else {
    report.certification = "grid-certified";
    std::fill(best_first.begin(), best_first.end(),
              -std::numeric_limits<double>::infinity());
    std::fill(best_second.begin(), best_second.end(),
              -std::numeric_limits<double>::infinity());
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Payoffs pay = payoff_pair(a, b);
        best_first[b] = std::max(best_first[b], pay.alice);
        best_second[a] = std::max(best_second[a], pay.bob);
      }
    }
  }

  // Absolute slack so bitwise-equal ties (e.g. pole-equivalent grid points)
  // survive an epsilon of exactly zero; a gain that small is a rounding
  // artifact and is reported as zero so candidates never exceed epsilon.
  const double slack = 1e-12;
  const double admit = std::max(epsilon, slack);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Payoffs pay = payoff_pair(a, b);
      double gain_first = best_first[b] - pay.alice;
      double gain_second = best_second[a] - pay.bob;
      if (gain_first <= admit && gain_second <= admit) {
        double gain = std::max({gain_first, gain_second, 0.0});
        if (gain <= slack) gain = 0.0;
        report.candidates.push_back(
            {{moves[a].angles, moves[b].angles}, pay.alice, pay.bob, gain});
      }
    }
  }
  return report;
}

}  // namespace ewl
