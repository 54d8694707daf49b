#pragma once

#include <cstddef>
#include <vector>

#include "radical/interval.hpp"
#include "radical/rational.hpp"
#include "radical/sign_word.hpp"

namespace radical {

// Finite nested radical r_n(c) = sqrt(2 + e_1 sqrt(2 + ... + e_n sqrt(2 + c)))
// with signs listed outermost-first and rational tail c in [-2, 2] (default 0).
// The value is real for every sign choice and every such tail.
struct RadicalTower {
  std::vector<Sign> signs;
  Rational tail = Rational(0);
};

// Rigorous enclosure, evaluated innermost-out (the reverse of the sign list's
// notation order) with outward-rounded square roots.
DyadicInterval eval_tower(const RadicalTower& tower, mpfr_prec_t precision);

// u_n = 2^n (r_inf - r_n) for n = 1..n_max, with r_inf = 2cos(q*pi) from the
// decoded word. The subtraction cancels about n bits, so evaluation runs at
// precision + n_max + guard bits internally; precision_ok reports whether the
// entry's width stayed within 2^-precision.
struct USequenceEntry {
  DyadicInterval u;
  bool precision_ok;
};

std::vector<USequenceEntry> u_sequence(const SignWord& word, std::size_t n_max,
                                       mpfr_prec_t precision);

// Exact angle of an iterate of a totally periodic word: the rational a with
// r_n = 2cos(a*pi/4) at n = m*P + j, where P is the delta-period (p for
// delta_p = +1, 2p for delta_p = -1) and 0 <= j <= P-1.
Rational iterate_angle(const SignWord& word, unsigned long m, unsigned long j);

}  // namespace radical
