#pragma once

#include <array>
#include <map>

#include "casson/exterior.hpp"
#include "casson/words.hpp"

namespace casson {

/// Coefficients of v on triples lying entirely in H+ (the x's), keyed by
/// 1-based (i, j, k) with 1 <= i < j < k <= g. Mixed triples are ignored.
std::map<std::array<int, 3>, Int> extract_x_coeffs(const TriVector& v);

/// Coefficients of v on triples lying entirely in H- (the y's), same keys.
std::map<std::array<int, 3>, Int> extract_y_coeffs(const TriVector& v);

/// Morita's pairing: sum over pure triples of (y-coefficient of tau_phi)
/// times (x-coefficient of tau_psi). Asymmetric in its arguments.
Int delta_f(const TriVector& tau_phi, const TriVector& tau_psi, const Splitting& s);

/// Composition law: lambda(phi psi) = lambda(phi) + lambda(psi)
/// + 2 delta_f(phi, psi).
Int compose_lambda(const Int& lam_phi, const Int& lam_psi, const TriVector& tau_phi,
                   const TriVector& tau_psi, const Splitting& s);

/// Lambda value of a signed letter. For an inverse letter the value is
/// forced by the composition law on s s^-1 = id:
/// lambda(s^-1) = -lambda(s) + 2 delta_f(tau(s), tau(s)).
Int letter_lambda(const GeneratorTable& t, const Letter& letter, const Splitting& s);

/// Telescoped lambda of a word: sum of letter lambdas plus twice the sum of
/// delta_f(letter_i, suffix after i). Recomputes every suffix image from
/// scratch; reference oracle, quadratic in the word length.
Int accumulate_naive(const Word& w, const GeneratorTable& t, const Splitting& s);

/// Same value as accumulate_naive on every input, via a single right-to-left
/// pass that maintains the running suffix image. Linear in the word length.
Int accumulate_fast(const Word& w, const GeneratorTable& t, const Splitting& s);

/// Whether delta_f is unchanged when both arguments are pushed through the
/// induced action of M. Requires M symplectic and splitting-preserving.
bool splitting_invariance_check(const TriVector& tau_phi, const TriVector& tau_psi,
                                const IntMatrix& m, const Splitting& s);

}  // namespace casson
