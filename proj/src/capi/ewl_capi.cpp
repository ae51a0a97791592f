#include "ewl/ewl.h"

#include <cmath>
#include <cstring>
#include <new>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/analysis.hpp"
#include "core/errors.hpp"
#include "core/game.hpp"
#include "core/stability.hpp"
#include "core/verify.hpp"

using namespace ewl;

struct ewl_game {
  Gate gate;
  PayoffTable table;
};

struct ewl_nash_report {
  EquilibriumReport report;
};

namespace {

template <typename F>
ewl_status guarded(F&& body) noexcept {
  try {
    return body();
  } catch (const NormError&) {
    return EWL_ERR_NORM;
  } catch (const RangeError&) {
    return EWL_ERR_RANGE;
  } catch (const RealityError&) {
    return EWL_ERR_REALITY;
  } catch (const ConvergenceError&) {
    return EWL_ERR_CONVERGENCE;
  } catch (const DegeneratePointError&) {
    return EWL_ERR_DEGENERATE;
  } catch (const BudgetError&) {
    return EWL_ERR_BUDGET;
  } catch (const std::invalid_argument&) {
    return EWL_ERR_INVALID_ARGUMENT;
  } catch (...) {
    return EWL_ERR_INTERNAL;
  }
}

SU2 to_su2(const ewl_strategy& s) {
  return SU2::from_params(cplx(s.re_alpha, s.im_alpha), cplx(s.re_beta, s.im_beta));
}

ewl_strategy from_su2(const SU2& u) {
  return {u.alpha().real(), u.alpha().imag(), u.beta().real(), u.beta().imag()};
}

bool at_max_entanglement(const Gate& gate) {
  return std::abs(gate.gamma() - std::numbers::pi / 2.0) <= 1e-12;
}

}  // namespace

extern "C" {

const char* ewl_status_message(ewl_status status) {
  switch (status) {
    case EWL_OK:
      return "ok";
    case EWL_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case EWL_ERR_NORM:
      return "input is not normalized";
    case EWL_ERR_RANGE:
      return "parameter out of range";
    case EWL_ERR_REALITY:
      return "frame image is not real";
    case EWL_ERR_CONVERGENCE:
      return "derived constant failed its residual check";
    case EWL_ERR_DEGENERATE:
      return "degenerate point: jacobian vanishes";
    case EWL_ERR_THEOREM_SCOPE:
      return "operation requires maximal entanglement (gamma = pi/2)";
    case EWL_ERR_BUDGET:
      return "grid exceeds the evaluation budget";
    case EWL_ERR_VERIFY_FAILED:
      return "verification suite reported failures";
    case EWL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* ewl_version(void) { return "1.0.0"; }

ewl_status ewl_strategy_from_components(double re_alpha, double im_alpha,
                                        double re_beta, double im_beta,
                                        ewl_strategy* out) {
  if (!out) return EWL_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = from_su2(SU2::from_params(cplx(re_alpha, im_alpha), cplx(re_beta, im_beta)));
    return EWL_OK;
  });
}

ewl_status ewl_strategy_from_angles(double theta, double phi, double psi,
                                    ewl_strategy* out) {
  if (!out) return EWL_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = from_su2(SU2::from_angles(theta, phi, psi));
    return EWL_OK;
  });
}

ewl_status ewl_strategy_random(uint64_t seed, uint64_t index, ewl_strategy* out) {
  if (!out) return EWL_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    Rng rng = Rng::child(seed, index);
    *out = from_su2(SU2::haar(rng));
    return EWL_OK;
  });
}

ewl_status ewl_strategy_to_angles(const ewl_strategy* s, double* theta, double* phi,
                                  double* psi) {
  if (!s || !theta || !phi || !psi) return EWL_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto angles = to_su2(*s).to_angles();
    *theta = angles[0];
    *phi = angles[1];
    *psi = angles[2];
    return EWL_OK;
  });
}

ewl_status ewl_strategy_identity(ewl_strategy* out) {
  if (!out) return EWL_ERR_INVALID_ARGUMENT;
  *out = from_su2(SU2::identity());
  return EWL_OK;
}

ewl_status ewl_strategy_defect(ewl_strategy* out) {
  if (!out) return EWL_ERR_INVALID_ARGUMENT;
  *out = from_su2(SU2::defect());
  return EWL_OK;
}

ewl_status ewl_game_create(double gamma, double r, double s, double t, double p,
                           ewl_game** out) {
  if (!out) return EWL_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    *out = new ewl_game{Gate(gamma), PayoffTable{r, s, t, p}};
    return EWL_OK;
  });
}

void ewl_game_destroy(ewl_game* game) { delete game; }

ewl_status ewl_game_eval(const ewl_game* game, const ewl_strategy* alice,
                         const ewl_strategy* bob, ewl_amplitudes* amps,
                         double probabilities[4], ewl_payoffs* payoffs) {
  if (!game || !alice || !bob) return EWL_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    Amplitudes a = amplitudes(final_state(game->gate, to_su2(*alice), to_su2(*bob)));
    if (amps) {
      auto arr = a.as_array();
      for (std::size_t k = 0; k < 4; ++k) {
        amps->re[k] = arr[k].real();
        amps->im[k] = arr[k].imag();
      }
    }
    if (probabilities) {
      auto pr = a.probabilities();
      for (std::size_t k = 0; k < 4; ++k) probabilities[k] = pr[k];
    }
    if (payoffs) {
      Payoffs pay = expected_payoffs(a, game->table);
      payoffs->alice = pay.alice;
      payoffs->bob = pay.bob;
    }
    return EWL_OK;
  });
}

ewl_status ewl_game_counterstrategy(const ewl_game* game,
                                    const ewl_strategy* target_alice,
                                    const ewl_strategy* target_bob,
                                    const ewl_strategy* alice_move,
                                    ewl_strategy* reply) {
  if (!game || !target_alice || !target_bob || !alice_move || !reply) {
    return EWL_ERR_INVALID_ARGUMENT;
  }
  if (!at_max_entanglement(game->gate)) return EWL_ERR_THEOREM_SCOPE;
  return guarded([&] {
    static const Conjugator conj = derive_conjugator();
    SU2 v2 = counterstrategy(to_su2(*target_alice), to_su2(*target_bob),
                             to_su2(*alice_move), conj);
    *reply = from_su2(v2);
    return EWL_OK;
  });
}

ewl_status ewl_game_best_response(const ewl_game* game, const ewl_strategy* opponent,
                                  int responder, ewl_strategy* reply, double* payoff) {
  if (!game || !opponent || !reply) return EWL_ERR_INVALID_ARGUMENT;
  if (responder != 0 && responder != 1) return EWL_ERR_INVALID_ARGUMENT;
  if (!at_max_entanglement(game->gate)) return EWL_ERR_THEOREM_SCOPE;
  return guarded([&] {
    BestResponse br = best_response(to_su2(*opponent),
                                    responder == 0 ? Player::first : Player::second,
                                    game->table);
    *reply = from_su2(br.strategy);
    if (payoff) *payoff = br.payoff;
    return EWL_OK;
  });
}

ewl_status ewl_achieve_amplitudes(const double target[4], ewl_strategy* alice,
                                  ewl_strategy* bob) {
  if (!target || !alice || !bob) return EWL_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto [ua, ub] = achieve_amplitudes({target[0], target[1], target[2], target[3]});
    *alice = from_su2(ua);
    *bob = from_su2(ub);
    return EWL_OK;
  });
}

ewl_status ewl_reality_scan(const double* gammas, size_t gamma_count, int32_t samples,
                            uint64_t seed, ewl_scan_row* rows) {
  if (!gammas || !rows || gamma_count == 0) return EWL_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<double> grid(gammas, gammas + gamma_count);
    auto result = reality_scan(grid, samples, seed);
    for (std::size_t i = 0; i < result.size(); ++i) {
      rows[i] = {result[i].gamma, result[i].max_imag,
                 static_cast<int32_t>(result[i].jacobian_rank),
                 static_cast<int32_t>(result[i].sample_count)};
    }
    return EWL_OK;
  });
}

ewl_status ewl_nash_search(const ewl_game* game, int32_t grid_per_axis, double epsilon,
                           uint64_t budget_cap, ewl_nash_report** out) {
  if (!game || !out) return EWL_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    std::uint64_t cap = budget_cap == 0 ? kDefaultNashBudget : budget_cap;
    auto report = pure_nash_search(game->gate.gamma(), grid_per_axis, epsilon,
                                   game->table, cap);
    *out = new ewl_nash_report{std::move(report)};
    return EWL_OK;
  });
}

void ewl_nash_report_destroy(ewl_nash_report* report) { delete report; }

ewl_status ewl_nash_report_size(const ewl_nash_report* report, size_t* count) {
  if (!report || !count) return EWL_ERR_INVALID_ARGUMENT;
  *count = report->report.candidates.size();
  return EWL_OK;
}

ewl_status ewl_nash_report_certification(const ewl_nash_report* report,
                                         const char** label) {
  if (!report || !label) return EWL_ERR_INVALID_ARGUMENT;
  *label = report->report.certification.c_str();
  return EWL_OK;
}

ewl_status ewl_nash_report_vacuous(const ewl_nash_report* report, int* vacuous) {
  if (!report || !vacuous) return EWL_ERR_INVALID_ARGUMENT;
  *vacuous = report->report.vacuous ? 1 : 0;
  return EWL_OK;
}

ewl_status ewl_nash_report_candidate(const ewl_nash_report* report, size_t index,
                                     ewl_nash_candidate* out) {
  if (!report || !out) return EWL_ERR_INVALID_ARGUMENT;
  if (index >= report->report.candidates.size()) return EWL_ERR_RANGE;
  const NashCandidate& c = report->report.candidates[index];
  for (std::size_t k = 0; k < 3; ++k) {
    out->alice_angles[k] = c.point.alice[k];
    out->bob_angles[k] = c.point.bob[k];
  }
  out->payoff_alice = c.payoff_alice;
  out->payoff_bob = c.payoff_bob;
  out->max_gain = c.max_gain;
  return EWL_OK;
}

ewl_status ewl_verify_run(const char* suite, uint64_t seed, int inject_frame_fault,
                          ewl_check_callback callback, void* user) {
  if (!suite) return EWL_ERR_INVALID_ARGUMENT;
  return guarded([&]() -> ewl_status {
    VerifyOptions options;
    options.seed = seed;
    options.inject_frame_fault = inject_frame_fault != 0;
    CheckSink sink;
    if (callback) {
      sink = [callback, user](const CheckResult& r) {
        ewl_check_result out;
        out.suite = r.suite.c_str();
        out.name = r.name.c_str();
        out.residual = r.residual;
        out.bound = r.bound;
        out.passed = r.passed ? 1 : 0;
        out.require_floor = r.require_floor ? 1 : 0;
        callback(&out, user);
      };
    }
    bool ok = run_suite(suite, options, sink);
    return ok ? EWL_OK : EWL_ERR_VERIFY_FAILED;
  });
}

}  // extern "C"
