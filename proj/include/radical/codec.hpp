#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "radical/interval.hpp"
#include "radical/rational.hpp"
#include "radical/sign_word.hpp"

namespace radical {

// Sign word of 2*cos(q*pi) for reduced q in (0, 1/2).
//
// With den(q) = 2^k * s (s odd): s = 1 yields a Finite word of k-2 signs
// (q = beta/2^k names a terminating radical); s >= 3 yields a preamble of k+1
// signs -- k quadrant signs plus the bridging sign chosen so the residual
// angle t0/s lands in (0, s/2) -- followed by the period-p block of
// 2*cos(t0*pi/s), p = semi_order(s).p. k = 0 gives a totally periodic word
// with no preamble.
SignWord encode_rational(const Rational& q);

// Exact inverse: q with value 2*cos(q*pi), via q = (1 - sum delta_i/2^i)/4,
// the periodic tail closed by a geometric series with denominator 2^p -+ 1.
// Works for any well-formed word; rejects words spelling a set-A sequence.
// decode(encode_rational(q)) == q exactly.
Rational decode(const SignWord& w);

// Block length of encode_rational(q) = semi-order of 2 modulo den(q).
// Requires q in (0, 1/2) reduced with odd denominator >= 3.
unsigned long minimal_period(const Rational& q);

// The unique signs e_1..e_k in {+-1}^k with sum 2^(i-1) e_i = alpha.
// Requires alpha odd, |alpha| <= 2^k - 1.
std::vector<Sign> odd_decomposition(const Int& alpha, std::size_t k);

// Value of the depth-k finite radical: 2*cos(beta*pi / 2^(k+2)), beta odd,
// 1 <= beta <= 2^(k+1) - 1.
struct FiniteClosedForm {
  Int beta;
  std::size_t k;
};
FiniteClosedForm finite_closed_form(const std::vector<Sign>& signs);

// Inverse direction: the sign list whose finite radical equals
// 2*cos(beta*pi / 2^(k+2)).
std::vector<Sign> finite_signs(const Int& beta, std::size_t k);

// Sign extraction from a numeric enclosure of x = 2*cos(phi), phi in (0, pi):
// iterates y_{n+1} = y_n^2 - 2 (so y_n encloses 2*cos(2^n phi)) with outward
// rounding and emits sign(y_n) while the enclosure excludes 0. Stops with the
// first undecidable index instead of guessing (precision exhausted or
// cos(2^n phi) = 0 exactly).
struct EncodeRealResult {
  std::vector<Sign> signs;
  std::optional<std::size_t> failed_index;  // 1-based
};
EncodeRealResult encode_real(const DyadicInterval& x, std::size_t count, mpfr_prec_t precision);

}  // namespace radical
