#pragma once

#include <array>

#include "core/cmat.hpp"
#include "core/su2.hpp"

namespace ewl {

struct PayoffTable {
  double r = 3.0;
  double s = 0.0;
  double t = 5.0;
  double p = 1.0;

  // Dilemma ordering t > r > p > s.
  bool dilemma_ordered() const { return t > r && r > p && p > s; }
  double max_entry() const;
  double min_entry() const;
};

// Entangling gate J(gamma) = cos(gamma/2) I + i sin(gamma/2) D(x)D with
// D = i*sigma2. Valid for gamma in [0, pi/2]; gamma = 0 is the classical
// embedding, gamma = pi/2 maximal entanglement.
class Gate {
 public:
  explicit Gate(double gamma);  // RangeError outside [0, pi/2]

  double gamma() const { return gamma_; }
  const Mat4& matrix() const { return m_; }
  const Mat4& matrix_dagger() const { return mdag_; }

  // J(gamma)|++> = cos(gamma/2)|++> + i sin(gamma/2)|-->.
  Vec4 initial_state() const;

 private:
  double gamma_;
  Mat4 m_;
  Mat4 mdag_;
};

// Unit-norm two-qubit state in the |++>,|-+>,|+->,|--> component order.
struct GameState {
  Vec4 v;
  explicit GameState(const Vec4& vec);  // NormError if off unit norm by >1e-9
};

struct Amplitudes {
  cplx pp;  // A_{++}
  cplx mp;  // A_{-+}
  cplx pm;  // A_{+-}
  cplx mm;  // A_{--}

  std::array<cplx, 4> as_array() const { return {pp, mp, pm, mm}; }
  std::array<double, 4> probabilities() const;
  double largest_imag() const;
};

struct Payoffs {
  double alice;
  double bob;
};

// J(gamma)^+ (U_a (x) U_b) J(gamma) |++>.
GameState final_state(const Gate& gate, const SU2& alice, const SU2& bob);

Amplitudes amplitudes(const GameState& state);

// alice = r P++ + p P-- + t P-+ + s P+-;  bob swaps t and s.
Payoffs expected_payoffs(const Amplitudes& a, const PayoffTable& table);

Payoffs evaluate(const Gate& gate, const SU2& alice, const SU2& bob,
                 const PayoffTable& table);

}  // namespace ewl
