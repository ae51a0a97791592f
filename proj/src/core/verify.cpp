#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "core/antiunitary.hpp"
#include "core/errors.hpp"
#include "core/game.hpp"
#include "core/quaternion.hpp"
#include "core/rng.hpp"
#include "core/so4.hpp"
#include "core/stability.hpp"
#include "core/su2.hpp"

namespace ewl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Reporter {
  const CheckSink& sink;
  std::string suite;
  bool all_ok = true;

  void ceiling(const std::string& name, double residual, double bound) {
    bool ok = residual <= bound;
    all_ok = all_ok && ok;
    if (sink) sink({suite, name, residual, bound, ok, false});
  }
  void floor(const std::string& name, double residual, double bound) {
    bool ok = residual >= bound;
    all_ok = all_ok && ok;
    if (sink) sink({suite, name, residual, bound, ok, true});
  }
};

Vec2 random_vec2(Rng& rng) {
  return {{cplx(rng.gaussian(), rng.gaussian()), cplx(rng.gaussian(), rng.gaussian())}};
}

Vec4 random_vec4(Rng& rng) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) v[i] = cplx(rng.gaussian(), rng.gaussian());
  return v;
}

double vec2_diff(const Vec2& a, const Vec2& b) {
  return std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
}

bool reality_suite(Rng& rng, Reporter& rep) {
  // Classical embedding: at every gamma the {I,D}x{I,D} profiles reproduce
  // the payoff table because D (x) D commutes with the gate.
  {
    PayoffTable table;
    SU2 moves[2] = {SU2::identity(), SU2::defect()};
    double expect_a[2][2] = {{table.r, table.s}, {table.t, table.p}};
    double expect_b[2][2] = {{table.r, table.t}, {table.s, table.p}};
    double worst = 0.0;
    for (int gi = 0; gi <= 10; ++gi) {
      Gate gate(kPi / 2.0 * gi / 10.0);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          Payoffs pay = evaluate(gate, moves[a], moves[b], table);
          worst = std::max({worst, std::abs(pay.alice - expect_a[a][b]),
                            std::abs(pay.bob - expect_b[a][b])});
        }
      }
    }
    rep.ceiling("classical-embedding", worst, 1e-12);
  }

  // Probability normalization across the gamma range.
  {
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      Gate gate(rng.uniform(0.0, kPi / 2.0));
      SU2 ua = SU2::haar(rng);
      SU2 ub = SU2::haar(rng);
      auto pr = amplitudes(final_state(gate, ua, ub)).probabilities();
      worst = std::max(worst, std::abs(pr[0] + pr[1] + pr[2] + pr[3] - 1.0));
    }
    rep.ceiling("probability-normalization", worst, 1e-12);
  }

  // Amplitudes are real at maximal entanglement...
  {
    Gate gate(kPi / 2.0);
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
      SU2 ua = SU2::haar(rng);
      SU2 ub = SU2::haar(rng);
      worst = std::max(worst, amplitudes(final_state(gate, ua, ub)).largest_imag());
    }
    rep.ceiling("max-entanglement-reality", worst, 1e-12);
  }
  // ...and measurably complex below it.
  {
    Gate gate(kPi / 4.0);
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
      SU2 ua = SU2::haar(rng);
      SU2 ub = SU2::haar(rng);
      worst = std::max(worst, amplitudes(final_state(gate, ua, ub)).largest_imag());
    }
    rep.floor("partial-entanglement-imag", worst, 0.1);
  }

  // The gate at maximal entanglement equals sqrt(2) times the real projector
  // built from the antiunitary pair (eta_a = i, eta_b = -1).
  {
    Gate gate(kPi / 2.0);
    AntiUnitary ca{cplx(0.0, 1.0)};
    AntiUnitary cb{cplx(-1.0, 0.0)};
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
      Vec4 lhs = gate.matrix() * basis4(k);
      Vec4 rhs = std::sqrt(2.0) * real_project(ca, cb, basis4(k));
      worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    rep.ceiling("projector-gate-identity", worst, 1e-14);
  }

  // C(eta)^2 = -1 on a single factor, (C (x) C)^2 = +1 on the pair.
  {
    double worst_single = 0.0;
    double worst_pair = 0.0;
    for (int n = 0; n < 50; ++n) {
      AntiUnitary ca{std::polar(1.0, rng.uniform(0.0, 2.0 * kPi))};
      AntiUnitary cb{std::polar(1.0, rng.uniform(0.0, 2.0 * kPi))};
      Vec2 v = random_vec2(rng);
      Vec2 twice = ca.apply(ca.apply(v));
      worst_single = std::max(worst_single, vec2_diff(twice, cplx(-1.0, 0.0) * v));
      Vec4 w = random_vec4(rng);
      Vec4 twice4 = apply_pair(ca, cb, apply_pair(ca, cb, w));
      worst_pair = std::max(worst_pair, max_abs_diff(twice4, w));
    }
    rep.ceiling("antiunitary-involution", worst_single, 1e-12);
    rep.ceiling("pair-antiunitary-identity", worst_pair, 1e-12);
  }

  // Pseudoreality: C(eta) commutes with every SU(2) element.
  {
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      AntiUnitary c{std::polar(1.0, rng.uniform(0.0, 2.0 * kPi))};
      SU2 u = SU2::haar(rng);
      Vec2 v = random_vec2(rng);
      Vec2 lhs = u.matrix() * c.apply(v);
      Vec2 rhs = c.apply(u.matrix() * v);
      worst = std::max(worst, vec2_diff(lhs, rhs));
    }
    rep.ceiling("pseudoreality-commutation", worst, 1e-12);
  }
  return rep.all_ok;
}

double orthogonality_residual(const RMat4& s) {
  return max_abs_diff(transpose(s) * s, RMat4::identity());
}

bool so4_suite(Rng& rng, const Frame& frame, Reporter& rep) {
  const Frame& alt = bell_alt_frame();

  {
    Mat4 gram = adjoint(frame.m) * frame.m;
    Mat4 gram_alt = adjoint(alt.m) * alt.m;
    double worst = std::max(max_abs_diff(gram, identity4()),
                            max_abs_diff(gram_alt, identity4()));
    rep.ceiling("frame-unitarity", worst, 1e-12);
  }

  // Reference kets of the primary frame, frozen componentwise.
  {
    const cplx ph(0.5, 0.5);
    Vec4 expected[4] = {{{ph, 0.0, 0.0, ph}},
                        {{0.0, ph, -ph, 0.0}},
                        {{0.0, ph, ph, 0.0}},
                        {{ph, 0.0, 0.0, -ph}}};
    auto basis = transformed_basis(frame);
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
      worst = std::max(worst, max_abs_diff(basis[static_cast<std::size_t>(k)],
                                           expected[k]));
    }
    rep.ceiling("reference-basis-values", worst, 1e-14);
  }

  {
    double worst_orth = 0.0;
    double worst_det = 0.0;
    for (int n = 0; n < 100; ++n) {
      SU2 ua = SU2::haar(rng);
      SU2 ub = SU2::haar(rng);
      try {
        RMat4 s = so4_image(frame, ua, ub);
        worst_orth = std::max(worst_orth, orthogonality_residual(s));
        worst_det = std::max(worst_det, std::abs(det(s) - 1.0));
      } catch (const RealityError&) {
        worst_orth = kInf;
        worst_det = kInf;
      }
    }
    rep.ceiling("image-orthogonality", worst_orth, 1e-12);
    rep.ceiling("image-determinant", worst_det, 1e-12);
  }

  {
    double worst = kInf;
    try {
      SU2 minus = SU2::from_params(-1.0, 0.0);
      RMat4 s_id = so4_image(frame, SU2::identity(), SU2::identity());
      RMat4 s_mm = so4_image(frame, minus, minus);
      worst = std::max(max_abs_diff(s_id, RMat4::identity()),
                       max_abs_diff(s_mm, RMat4::identity()));
    } catch (const RealityError&) {
    }
    rep.ceiling("double-cover-kernel", worst, 1e-12);
  }

  {
    double worst = kInf;
    try {
      worst = 0.0;
      for (int n = 0; n < 50; ++n) {
        SU2 u1 = SU2::haar(rng);
        SU2 u2 = SU2::haar(rng);
        SU2 v1 = SU2::haar(rng);
        SU2 v2 = SU2::haar(rng);
        RMat4 lhs = so4_image(frame, u1 * u2, v1 * v2);
        RMat4 rhs = so4_image(frame, u1, v1) * so4_image(frame, u2, v2);
        worst = std::max(worst, max_abs_diff(lhs, rhs));
      }
    } catch (const RealityError&) {
      worst = kInf;
    }
    rep.ceiling("homomorphism", worst, 1e-12);
  }

  // Amplitude reconstruction through the rotation matches the direct game
  // evaluation, for both frames.
  {
    Gate gate(kPi / 2.0);
    double worst_direct = kInf;
    double worst_frames = kInf;
    try {
      worst_direct = 0.0;
      worst_frames = 0.0;
      for (int n = 0; n < 100; ++n) {
        SU2 ua = SU2::haar(rng);
        SU2 ub = SU2::haar(rng);
        auto direct = amplitudes(final_state(gate, ua, ub)).as_array();
        auto via_frame = amplitudes_from_rotation(so4_image(frame, ua, ub), frame).as_array();
        auto via_alt = amplitudes_from_rotation(so4_image(alt, ua, ub), alt).as_array();
        for (int k = 0; k < 4; ++k) {
          auto ks = static_cast<std::size_t>(k);
          worst_direct = std::max(worst_direct, std::abs(via_frame[ks] - direct[ks]));
          worst_frames = std::max(worst_frames, std::abs(via_alt[ks] - via_frame[ks]));
        }
      }
    } catch (const RealityError&) {
      worst_direct = kInf;
      worst_frames = kInf;
    }
    rep.ceiling("rotation-amplitude-agreement", worst_direct, 1e-10);
    rep.ceiling("frame-independence", worst_frames, 1e-12);
  }

  // In the alternative frame the reference kets collapse onto the plain
  // basis vectors times one common phase.
  {
    auto basis = transformed_basis(alt);
    cplx phase = basis[0][0];
    double worst = std::abs(std::abs(phase) - 1.0);
    for (int k = 0; k < 4; ++k) {
      Vec4 expected = phase * basis4(k);
      worst = std::max(worst, max_abs_diff(basis[static_cast<std::size_t>(k)], expected));
    }
    rep.ceiling("alt-frame-reference-kets", worst, 1e-12);
  }
  return rep.all_ok;
}

Quat random_unit_quat(Rng& rng) {
  double a = rng.gaussian();
  double b = rng.gaussian();
  double c = rng.gaussian();
  double d = rng.gaussian();
  double n = std::sqrt(a * a + b * b + c * c + d * d);
  return {a / n, b / n, c / n, d / n};
}

bool quaternion_suite(Rng& rng, Reporter& rep) {
  {
    Quat i{0.0, 1.0, 0.0, 0.0};
    Quat j{0.0, 0.0, 1.0, 0.0};
    Quat k{0.0, 0.0, 0.0, 1.0};
    Quat minus_one{-1.0, 0.0, 0.0, 0.0};
    double worst = std::max({max_abs_diff(i * j, k), max_abs_diff(j * k, i),
                             max_abs_diff(k * i, j), max_abs_diff(i * i, minus_one),
                             max_abs_diff(j * j, minus_one),
                             max_abs_diff(k * k, minus_one)});
    rep.ceiling("hamilton-relations", worst, 0.0);
  }

  {
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
      Quat a{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
      Quat b{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
      worst = std::max(worst, std::abs(norm(a * b) - norm(a) * norm(b)));
    }
    rep.ceiling("norm-multiplicativity", worst, 1e-12);
  }

  {
    Quat one = Quat::one();
    Quat minus_j{0.0, 0.0, -1.0, 0.0};
    Quat k{0.0, 0.0, 0.0, 1.0};
    double worst = std::max({max_abs_diff(first_player_quat(SU2::identity()), one),
                             max_abs_diff(second_player_quat(SU2::identity()), one),
                             max_abs_diff(first_player_quat(SU2::defect()), minus_j),
                             max_abs_diff(second_player_quat(SU2::defect()), k)});
    rep.ceiling("player-map-units", worst, 0.0);
  }

  {
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      SU2 u = SU2::haar(rng);
      worst = std::max({worst, std::abs(norm(first_player_quat(u)) - 1.0),
                        std::abs(norm(second_player_quat(u)) - 1.0)});
    }
    rep.ceiling("player-map-norms", worst, 1e-12);
  }

  // Both player maps respect group multiplication.
  {
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
      SU2 u = SU2::haar(rng);
      SU2 v = SU2::haar(rng);
      worst = std::max(worst, max_abs_diff(first_player_quat(u * v),
                                           first_player_quat(u) * first_player_quat(v)));
      worst = std::max(worst, max_abs_diff(second_player_quat(u * v),
                                           second_player_quat(u) * second_player_quat(v)));
    }
    rep.ceiling("player-map-homomorphism", worst, 1e-12);
  }

  // The two-sided action r -> q1 r q2^{-1} is a rotation: orthogonal, det +1.
  {
    double worst_orth = 0.0;
    double worst_det = 0.0;
    Quat units[4] = {Quat::one(), {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int n = 0; n < 20; ++n) {
      Quat q1 = random_unit_quat(rng);
      Quat q2 = random_unit_quat(rng);
      RMat4 m;
      for (int c = 0; c < 4; ++c) {
        Quat img = rotate(units[c], q1, q2);
        m(0, c) = img.w;
        m(1, c) = img.x;
        m(2, c) = img.y;
        m(3, c) = img.z;
      }
      worst_orth = std::max(worst_orth, orthogonality_residual(m));
      worst_det = std::max(worst_det, std::abs(det(m) - 1.0));
    }
    rep.ceiling("rotation-orthogonality", worst_orth, 1e-12);
    rep.ceiling("rotation-determinant", worst_det, 1e-12);
  }

  {
    Gate gate(kPi / 2.0);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      SU2 ua = SU2::haar(rng);
      SU2 ub = SU2::haar(rng);
      auto direct = amplitudes(final_state(gate, ua, ub)).as_array();
      auto via_quat = amplitudes_from_quaternions(ua, ub).as_array();
      for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(via_quat[k] - direct[k]));
      }
    }
    rep.ceiling("quaternion-amplitude-agreement", worst, 1e-10);
  }

  // Right-multiplying both player quaternions by a common unit factor leaves
  // the pair rotation unchanged.
  {
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      SU2 ua = SU2::haar(rng);
      SU2 ub = SU2::haar(rng);
      Quat s = random_unit_quat(rng);
      Quat q = first_player_quat(ua) * inverse(second_player_quat(ub));
      Quat gauged = (first_player_quat(ua) * s) * inverse(second_player_quat(ub) * s);
      worst = std::max(worst, max_abs_diff(q, gauged));
    }
    rep.ceiling("gauge-invariance", worst, 1e-12);
  }

  // The player maps differ from the Pauli identification exactly by fixed
  // signed permutations of the imaginary units.
  {
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
      SU2 u = SU2::haar(rng);
      Quat p = pauli_quat(u);
      Quat expected_first{p.w, -p.z, p.y, p.x};
      Quat expected_second{p.w, p.z, -p.x, -p.y};
      worst = std::max({worst, max_abs_diff(first_player_quat(u), expected_first),
                        max_abs_diff(second_player_quat(u), expected_second)});
      Mat2 rebuilt;
      rebuilt(0, 0) = cplx(p.w, -p.z);
      rebuilt(0, 1) = cplx(-p.y, -p.x);
      rebuilt(1, 0) = cplx(p.y, -p.x);
      rebuilt(1, 1) = cplx(p.w, p.z);
      Mat2 m = u.matrix();
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          worst = std::max(worst, std::abs(rebuilt(i, j) - m(i, j)));
        }
      }
    }
    rep.ceiling("pauli-identification", worst, 0.0);
  }
  return rep.all_ok;
}

bool stability_suite(Rng& rng, Reporter& rep) {
  Gate gate(kPi / 2.0);
  Vec4 psi = gate.initial_state();
  Conjugator conj = derive_conjugator();

  {
    // Frozen canonical value: alpha = 0, beta = (1 - i)/sqrt(2).
    const double rt = 1.0 / std::sqrt(2.0);
    double worst = std::max(std::abs(conj.u0.alpha() - cplx(0.0, 0.0)),
                            std::abs(conj.u0.beta() - cplx(rt, -rt)));
    rep.ceiling("conjugator-canonical-value", worst, 1e-12);
  }

  auto pair_residual = [&psi](const SU2& a, const SU2& b) {
    Vec4 moved = tensor(a.matrix(), b.matrix()) * psi;
    return max_abs_diff(moved, psi);
  };

  {
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      auto [a, b] = stability_element(SU2::haar(rng), conj);
      worst = std::max(worst, pair_residual(a, b));
    }
    rep.ceiling("state-fixing", worst, 1e-10);
  }

  // A generic conjugator in place of the derived one does not fix the state.
  {
    double least = kInf;
    for (int n = 0; n < 20; ++n) {
      SU2 v = SU2::haar(rng);
      SU2 u = SU2::haar(rng);
      least = std::min(least, pair_residual(u, v * u * v.dagger()));
    }
    rep.floor("generic-conjugator-fails", least, 1e-3);
  }

  {
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
      auto [a1, b1] = stability_element(SU2::haar(rng), conj);
      auto [a2, b2] = stability_element(SU2::haar(rng), conj);
      worst = std::max(worst, pair_residual(a1 * a2, b1 * b2));
    }
    rep.ceiling("closure", worst, 1e-10);
  }

  // The rotation image of a stability element fixes the transformed initial
  // ket.
  {
    const Frame& frame = bell_frame();
    Vec4 tilde0 = transformed_basis(frame)[0];
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
      auto [a, b] = stability_element(SU2::haar(rng), conj);
      RMat4 s = so4_image(frame, a, b);
      worst = std::max(worst, max_abs_diff(s * tilde0, tilde0));
    }
    rep.ceiling("rotation-fixes-reference-ket", worst, 1e-10);
  }

  // Counterstrategy: the reply reproduces the target amplitudes whatever the
  // first player does.
  {
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
      SU2 t1 = SU2::haar(rng);
      SU2 t2 = SU2::haar(rng);
      SU2 v1 = SU2::haar(rng);
      SU2 v2 = counterstrategy(t1, t2, v1, conj);
      auto target = amplitudes(final_state(gate, t1, t2)).as_array();
      auto played = amplitudes(final_state(gate, v1, v2)).as_array();
      for (std::size_t k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(played[k] - target[k]));
      }
    }
    rep.ceiling("counterstrategy-amplitudes", worst, 1e-10);
  }

  {
    SU2 t1 = SU2::haar(rng);
    SU2 t2 = SU2::haar(rng);
    SU2 v2 = counterstrategy(t1, t2, t1, conj);
    double worst = std::max(std::abs(v2.alpha() - t2.alpha()),
                            std::abs(v2.beta() - t2.beta()));
    rep.ceiling("counterstrategy-identity-case", worst, 1e-12);
  }

  // Below maximal entanglement the opposed-phase family still fixes the
  // state...
  {
    double worst = 0.0;
    for (double gamma : {0.3, 0.8, 1.2}) {
      Gate g(gamma);
      Vec4 state = g.initial_state();
      for (int n = 0; n < 20; ++n) {
        auto [a, b] = partial_entanglement_stabilizer(rng.uniform(0.0, 2.0 * kPi), gamma);
        Vec4 moved = tensor(a.matrix(), b.matrix()) * state;
        worst = std::max(worst, max_abs_diff(moved, state));
      }
    }
    rep.ceiling("opposed-phase-family-fixing", worst, 1e-12);
  }
  // ...and perturbations off the family do not.
  {
    Gate g(0.8);
    Vec4 state = g.initial_state();
    double least = kInf;
    for (int n = 0; n < 20; ++n) {
      auto [a, b] = partial_entanglement_stabilizer(rng.uniform(0.0, 2.0 * kPi), 0.8);
      SU2 kick = exp_sigma(1, 0.05);
      Vec4 moved = tensor((a * kick).matrix(), b.matrix()) * state;
      least = std::min(least, max_abs_diff(moved, state));
    }
    rep.floor("off-family-perturbation-fails", least, 1e-3);
  }

  // Tangent directions of the three stabilizer generators at maximal
  // entanglement are linearly independent (3-parameter family).
  {
    const Frame& frame = bell_frame();
    const double h = 1e-3;
    RMat4 tangents[3];
    for (int axis = 1; axis <= 3; ++axis) {
      auto [a, b] = stability_element(exp_sigma(axis, h), conj);
      RMat4 s = so4_image(frame, a, b);
      RMat4 diff = s - RMat4::identity();
      for (std::size_t i = 0; i < 16; ++i) diff.e[i] /= h;
      tangents[axis - 1] = diff;
    }
    double gram[3][3];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < 16; ++k) acc += tangents[i].e[k] * tangents[j].e[k];
        gram[i][j] = acc;
      }
    }
    double ni = std::sqrt(gram[0][0] * gram[1][1] * gram[2][2]);
    double detg = gram[0][0] * (gram[1][1] * gram[2][2] - gram[1][2] * gram[2][1]) -
                  gram[0][1] * (gram[1][0] * gram[2][2] - gram[1][2] * gram[2][0]) +
                  gram[0][2] * (gram[1][0] * gram[2][1] - gram[1][1] * gram[2][0]);
    rep.floor("generator-tangent-independence", detg / (ni * ni), 1e-2);
  }
  return rep.all_ok;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"reality", "so4", "quaternion",
                                                 "stability", "all"};
  return names;
}

bool run_suite(const std::string& suite, const VerifyOptions& options,
               const CheckSink& sink) {
  Frame frame = bell_frame();
  if (options.inject_frame_fault) frame.m(0, 0) += 1e-3;

  bool ok = true;
  bool matched = false;
  auto want = [&suite](const char* name) { return suite == name || suite == "all"; };

  if (want("reality")) {
    matched = true;
    Rng rng = Rng::child(options.seed, 1);
    Reporter rep{sink, "reality"};
    ok = reality_suite(rng, rep) && ok;
  }
  if (want("so4")) {
    matched = true;
    Rng rng = Rng::child(options.seed, 2);
    Reporter rep{sink, "so4"};
    ok = so4_suite(rng, frame, rep) && ok;
  }
  if (want("quaternion")) {
    matched = true;
    Rng rng = Rng::child(options.seed, 3);
    Reporter rep{sink, "quaternion"};
    ok = quaternion_suite(rng, rep) && ok;
  }
  if (want("stability")) {
    matched = true;
    Rng rng = Rng::child(options.seed, 4);
    Reporter rep{sink, "stability"};
    ok = stability_suite(rng, rep) && ok;
  }
  if (!matched) {
    throw std::invalid_argument("unknown verification suite: " + suite);
  }
  return ok;
}

}  // namespace ewl
