#pragma once

#include <utility>

#include "core/su2.hpp"

namespace ewl {

// Conjugator U0 of the maximally entangled initial state: the pairs
// (U, U0 U U0^+) leave J(pi/2)|++> invariant for every SU(2) U.
struct Conjugator {
  SU2 u0;
};

// Derives U0 from the state itself: reshape J(pi/2)|++> into its 2x2
// coefficient matrix M (M[i][j] = component (i + 2j)), form W = M sigma2,
// rescale W to unit determinant, and fix the sign of the square root so the
// first nonzero entry in reading order has positive real part. The result is
// validated against 100 Haar-random pairs; ConvergenceError if any fixing
// residual exceeds 1e-10.
Conjugator derive_conjugator();

// (u, u0 u u0^+).
std::pair<SU2, SU2> stability_element(const SU2& u, const Conjugator& c);

// Second-player move w that makes (first_move, w) produce the same final
// state as the target pair: w = tb u0 ta^+ first_move u0^+ for targets
// (ta, tb). Valid at maximal entanglement.
SU2 counterstrategy(const SU2& target_alice, const SU2& target_bob,
                    const SU2& first_move, const Conjugator& c);

// First-player mirror image: w = ta u0^+ tb^+ second_move u0.
SU2 counterstrategy_first(const SU2& target_alice, const SU2& target_bob,
                          const SU2& second_move, const Conjugator& c);

// Family e^{i delta sigma3} (x) e^{-i delta sigma3} fixing J(gamma)|++> at
// every gamma; the only product stabilizers below maximal entanglement.
// RangeError for gamma outside [0, pi/2].
std::pair<SU2, SU2> partial_entanglement_stabilizer(double delta, double gamma);

}  // namespace ewl
