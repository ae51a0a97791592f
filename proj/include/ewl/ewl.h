/* C interface to the entangled two-player game engine.
 *
 * All functions return ewl_status; results are written through out
 * parameters. Objects created by *_create / *_search must be released with
 * the matching *_destroy. Handles are not thread-safe individually, but
 * distinct handles may be used from distinct threads.
 */
#ifndef EWL_H
#define EWL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EWL_API __declspec(dllexport)
#else
#define EWL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ewl_status {
  EWL_OK = 0,
  EWL_ERR_INVALID_ARGUMENT = 1,
  EWL_ERR_NORM = 2,           /* input off unit norm beyond 1e-9 */
  EWL_ERR_RANGE = 3,          /* parameter outside its documented range */
  EWL_ERR_REALITY = 4,        /* frame image not real: convention bug */
  EWL_ERR_CONVERGENCE = 5,    /* derived constant failed its residual check */
  EWL_ERR_DEGENERATE = 6,     /* Jacobian vanishes at the requested point */
  EWL_ERR_THEOREM_SCOPE = 7,  /* operation only valid at maximal entanglement */
  EWL_ERR_BUDGET = 8,         /* requested grid exceeds the evaluation cap */
  EWL_ERR_VERIFY_FAILED = 9,  /* one or more self-checks failed */
  EWL_ERR_INTERNAL = 99
} ewl_status;

/* Static description of a status code. */
EWL_API const char* ewl_status_message(ewl_status status);

/* Library version as "major.minor.patch". */
EWL_API const char* ewl_version(void);

/* ---- strategies ------------------------------------------------------- */

/* SU(2) move [[alpha, beta], [-conj(beta), conj(alpha)]]. */
typedef struct ewl_strategy {
  double re_alpha;
  double im_alpha;
  double re_beta;
  double im_beta;
} ewl_strategy;

/* Builds a strategy from components; EWL_ERR_NORM if |alpha|^2+|beta|^2
 * deviates from 1 by more than 1e-9 (smaller deviations renormalized). */
EWL_API ewl_status ewl_strategy_from_components(double re_alpha, double im_alpha,
                                                double re_beta, double im_beta,
                                                ewl_strategy* out);

/* alpha = cos(theta/2) e^{i phi}, beta = sin(theta/2) e^{i psi}. */
EWL_API ewl_status ewl_strategy_from_angles(double theta, double phi, double psi,
                                            ewl_strategy* out);

/* Haar-uniform strategy; deterministic for a given (seed, index). */
EWL_API ewl_status ewl_strategy_random(uint64_t seed, uint64_t index,
                                       ewl_strategy* out);

/* Recovers (theta, phi, psi); phases at parametrization poles are 0. */
EWL_API ewl_status ewl_strategy_to_angles(const ewl_strategy* s, double* theta,
                                          double* phi, double* psi);

EWL_API ewl_status ewl_strategy_identity(ewl_strategy* out);
/* The classical defect move [[0,1],[-1,0]]. */
EWL_API ewl_status ewl_strategy_defect(ewl_strategy* out);

/* ---- game ------------------------------------------------------------- */

/* Amplitudes in basis order ++, -+, +-, --. */
typedef struct ewl_amplitudes {
  double re[4];
  double im[4];
} ewl_amplitudes;

typedef struct ewl_payoffs {
  double alice;
  double bob;
} ewl_payoffs;

typedef struct ewl_game ewl_game;

/* Game context: entangling parameter gamma in [0, pi/2] (EWL_ERR_RANGE
 * otherwise) and payoff table entries (r, s, t, p). */
EWL_API ewl_status ewl_game_create(double gamma, double r, double s, double t,
                                   double p, ewl_game** out);
EWL_API void ewl_game_destroy(ewl_game* game);

/* Evaluates one round. Any of the out pointers may be NULL. */
EWL_API ewl_status ewl_game_eval(const ewl_game* game, const ewl_strategy* alice,
                                 const ewl_strategy* bob, ewl_amplitudes* amps,
                                 double probabilities[4], ewl_payoffs* payoffs);

/* Second-player reply making (alice_move, reply) reproduce the amplitudes of
 * (target_alice, target_bob). EWL_ERR_THEOREM_SCOPE unless the game is at
 * maximal entanglement (gamma = pi/2). */
EWL_API ewl_status ewl_game_counterstrategy(const ewl_game* game,
                                            const ewl_strategy* target_alice,
                                            const ewl_strategy* target_bob,
                                            const ewl_strategy* alice_move,
                                            ewl_strategy* reply);

/* Payoff-maximizing reply for one player (0 = first/Alice, 1 = second/Bob);
 * gamma = pi/2 only. */
EWL_API ewl_status ewl_game_best_response(const ewl_game* game,
                                          const ewl_strategy* opponent,
                                          int responder, ewl_strategy* reply,
                                          double* payoff);

/* Strategy pair reproducing a real unit amplitude target (++, -+, +-, --)
 * at maximal entanglement; second player is the identity. */
EWL_API ewl_status ewl_achieve_amplitudes(const double target[4],
                                          ewl_strategy* alice,
                                          ewl_strategy* bob);

/* ---- scans ------------------------------------------------------------ */

typedef struct ewl_scan_row {
  double gamma;
  double max_imag;
  int32_t jacobian_rank;
  int32_t sample_count;
} ewl_scan_row;

/* For each gamma: largest |Im amplitude| over `samples` Haar pairs plus the
 * local strategy-manifold rank at a random interior point. `rows` must hold
 * `gamma_count` entries. */
EWL_API ewl_status ewl_reality_scan(const double* gammas, size_t gamma_count,
                                    int32_t samples, uint64_t seed,
                                    ewl_scan_row* rows);

/* ---- equilibrium search ------------------------------------------------ */

typedef struct ewl_nash_report ewl_nash_report;

typedef struct ewl_nash_candidate {
  double alice_angles[3]; /* theta, phi, psi */
  double bob_angles[3];
  double payoff_alice;
  double payoff_bob;
  double max_gain;
} ewl_nash_candidate;

/* Exhaustive epsilon-equilibrium search on the angle grid; grid_per_axis >= 4.
 * budget_cap = 0 selects the built-in default cap (2e7 profile evaluations);
 * EWL_ERR_BUDGET if grid_per_axis^6 exceeds the cap. */
EWL_API ewl_status ewl_nash_search(const ewl_game* game, int32_t grid_per_axis,
                                   double epsilon, uint64_t budget_cap,
                                   ewl_nash_report** out);
EWL_API void ewl_nash_report_destroy(ewl_nash_report* report);

EWL_API ewl_status ewl_nash_report_size(const ewl_nash_report* report,
                                        size_t* count);
/* "counterstrategy-certified" at maximal entanglement, else "grid-certified".
 * The pointer stays valid while the report lives. */
EWL_API ewl_status ewl_nash_report_certification(const ewl_nash_report* report,
                                                 const char** label);
/* 1 when epsilon covers the whole payoff range (every profile survives). */
EWL_API ewl_status ewl_nash_report_vacuous(const ewl_nash_report* report,
                                           int* vacuous);
EWL_API ewl_status ewl_nash_report_candidate(const ewl_nash_report* report,
                                             size_t index,
                                             ewl_nash_candidate* out);

/* ---- self-verification -------------------------------------------------- */

typedef struct ewl_check_result {
  const char* suite;
  const char* name;
  double residual;
  double bound;
  int passed;         /* 1 pass, 0 fail */
  int require_floor;  /* 0: pass means residual <= bound; 1: residual >= bound */
} ewl_check_result;

typedef void (*ewl_check_callback)(const ewl_check_result* result, void* user);

/* Runs a named invariant suite: "reality", "so4", "quaternion", "stability"
 * or "all". The callback (may be NULL) receives every check as it finishes.
 * Returns EWL_OK if all checks passed, EWL_ERR_VERIFY_FAILED otherwise.
 * inject_frame_fault != 0 deliberately corrupts the isomorphism frame first
 * (negative control for the verifier itself). */
EWL_API ewl_status ewl_verify_run(const char* suite, uint64_t seed,
                                  int inject_frame_fault,
                                  ewl_check_callback callback, void* user);

#ifdef __cplusplus
}
#endif

#endif /* EWL_H */
