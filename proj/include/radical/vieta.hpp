#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "radical/interval.hpp"
#include "radical/rational.hpp"
#include "radical/sign_word.hpp"

namespace radical {

// The nested-radical driver of the generalized Vieta product:
// s_0 = sqrt(2), s_{pn+i} = sqrt(2 + e_{p+1-i} s_{pn+i-1}) -- the block signs
// are consumed in reversed order (innermost-first). Returns s_0..s_{n_max}.
// Requires q in (0, 1/2) with odd denominator.
std::vector<DyadicInterval> s_sequence(const Rational& q, std::size_t n_max,
                                       mpfr_prec_t precision);

// Rigorous enclosure of the product's value:
// 2cos(2q*pi) / ((1 - 4q) * pi * sin(q*pi)).
DyadicInterval vieta_target(const Rational& q, mpfr_prec_t precision);

// One stream factor (|2cos(2^(p-j) q pi)| + s_{p i + j})/2, in (0, 2).
// For delta_p = -1 the magnitudes still repeat with period p since
// |2cos(2^(2p-j) q pi)| = |2cos(2^(p-j) q pi)|.
struct VietaFactor {
  std::size_t rep;        // block repetition index i, from 0
  std::size_t pos;        // j in 1..p
  std::size_t s_index;    // p*i + j
  Rational cosine_angle;  // (2^(p-j) q) mod 2; the magnitude term is |2cos(a*pi)|
  DyadicInterval value;
};

struct VietaFactors {
  DyadicInterval leading;  // (2cos(q*pi) + sqrt(2)) / 2
  std::vector<VietaFactor> stream;
};

VietaFactors vieta_factors(const Rational& q, std::size_t count, mpfr_prec_t precision);

// Partial products against the target. partials[k] is the leading factor
// times the first k stream factors, so partials.size() == factor_count + 1.
// The product converges to the target along complete blocks only (a cut in
// the middle of a block sits near a different accumulation point), so the
// certified comparison is taken at aligned_index, the largest multiple of p
// not exceeding factor_count.
struct ProductReport {
  Rational q;
  std::size_t factor_count;
  std::size_t aligned_index;
  DyadicInterval target;
  std::vector<DyadicInterval> partials;
  std::vector<double> distances;  // upper bounds on |partial_k - target|
  Rational tolerance;
  bool final_within_tolerance;  // rigorous: |partial_aligned - target| <= tolerance
  bool precision_ok;            // all partial widths <= tolerance
};

ProductReport verify_product(const Rational& q, std::size_t factor_count, mpfr_prec_t precision,
                             const Rational& tolerance = Rational(Int(1), Int(10000000000L)));

// LaTeX rendering of the identity with the target and the leading factor plus
// the first factor_count stream factors, radicals fully expanded, surds only
// (closed target forms for q = 1/3 and q = 1/5, generic form otherwise).
std::string render_latex(const Rational& q, std::size_t factor_count);

}  // namespace radical
