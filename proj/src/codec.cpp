#include "radical/codec.hpp"

#include <algorithm>
#include <stdexcept>

#include "radical/angle.hpp"
#include "radical/modular.hpp"

namespace radical {

namespace {

void require_open_unit_half(const Rational& q) {
  if (q <= Rational(0) || q >= Rational(1, 2))
    throw std::domain_error("q must lie strictly between 0 and 1/2, got " + q.str());
}

// Quadrant signs e_i = cos_sign(2^i q) for i = 1..n; all guaranteed nonzero
// as long as 2^i q never reduces to an odd multiple of 1/2.
std::vector<Sign> quadrant_signs(const Rational& q, std::size_t n) {
  std::vector<Sign> out;
  out.reserve(n);
  Rational a = q;
  for (std::size_t i = 0; i < n; ++i) {
    a = a.mul_pow2(1).mod2();
    const int s = cos_sign(a);
    if (s == 0) throw std::logic_error("quadrant_signs: cosine vanished unexpectedly");
    out.push_back(s);
  }
  return out;
}

}  // namespace

SignWord encode_rational(const Rational& q) {
  require_open_unit_half(q);
  const auto [k, s] = q.split_denominator();

  if (s == 1) {
    // q = t/2^k with t odd and 0 < q < 1/2 forces k >= 2; the radical
    // terminates with k-2 signs (the cosine vanishes at level k-1).
    return SignWord{quadrant_signs(q, k - 2), {}};
  }

  const unsigned long p = semi_order(s).p;
  SignWord w;

  Rational residual = q;  // angle whose block is spelled next
  if (k > 0) {
    w.preamble = quadrant_signs(q, k);
    // Bridge: 2cos(2^(k+1) q pi) = e_{k+1} * 2cos(t0 pi / s) with
    // 0 < t0 < s/2. Here 2^(k+1) q = 2t/s mod 2, numerator u below.
    const Int u = (q.num() << 1) % (s << 1);
    Int folded = u <= s ? u : Int((s << 1) - u);
    Sign bridge = +1;
    if (2 * folded > s) {
      folded = s - folded;
      bridge = -1;
    }
    w.preamble.push_back(bridge);
    residual = Rational(folded, s);
  }

  w.block = quadrant_signs(residual, p);

  // The semi-order is the minimal period; the block must not repeat early.
  for (unsigned long d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (unsigned long i = d; i < p && repeats; ++i) repeats = w.block[i] == w.block[i % d];
    if (repeats) throw std::logic_error("encode_rational: block shorter than the semi-order");
  }
  return w;
}

Rational decode(const SignWord& w) {
  if (spells_set_a_tail(w))
    throw std::domain_error("decode: word spells a set-A sequence (non-canonical); "
                            "use its finite equivalent");
  for (Sign e : w.preamble)
    if (e != 1 && e != -1) throw std::domain_error("decode: signs must be +-1");
  for (Sign e : w.block)
    if (e != 1 && e != -1) throw std::domain_error("decode: signs must be +-1");

  // S = sum_{i>=1} delta_i / 2^i with delta_i = e_1...e_i.
  Rational s_sum(0);
  int delta = 1;
  long i = 1;
  for (Sign e : w.preamble) {
    delta *= e;
    s_sum += Rational(delta).mul_pow2(-i);
    ++i;
  }
  if (!w.block.empty()) {
    // Geometric closure over the repeating block: the relative products d_j
    // contribute sigma_hat = sum d_j/2^j once, scaled by 2^p/(2^p - d_p).
    const long p = static_cast<long>(w.block.size());
    Rational sigma_hat(0);
    int d = 1;
    for (long j = 0; j < p; ++j) {
      d *= w.block[static_cast<std::size_t>(j)];
      sigma_hat += Rational(d).mul_pow2(-(j + 1));
    }
    const Rational scale = Rational(Int(1) << p, (Int(1) << p) - d);
    s_sum += Rational(delta).mul_pow2(-(i - 1)) * sigma_hat * scale;
  }
  return (Rational(1) - s_sum).mul_pow2(-2);
}

unsigned long minimal_period(const Rational& q) {
  require_open_unit_half(q);
  if (mpz_even_p(q.den().get_mpz_t()))
    throw std::domain_error("minimal_period: denominator must be odd, got " + q.str());
  return semi_order(q.den()).p;
}

std::vector<Sign> odd_decomposition(const Int& alpha, std::size_t k) {
  if (k == 0 || mpz_even_p(alpha.get_mpz_t()))
    throw std::domain_error("odd_decomposition: alpha must be odd, k >= 1");
  if (Rational(alpha).abs() > Rational((Int(1) << k) - 1))
    throw std::domain_error("odd_decomposition: |alpha| exceeds 2^k - 1");

  std::vector<Sign> signs(k);
  Int a = alpha;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    // (a - e)/2 must stay odd, which pins e by a mod 4.
    const unsigned long m4 = mpz_fdiv_ui(a.get_mpz_t(), 4);
    const Sign e = (m4 == 3) ? +1 : -1;
    signs[i] = e;
    a = (a - e) >> 1;
  }
  if (a != 1 && a != -1) throw std::logic_error("odd_decomposition: residue not a unit");
  signs[k - 1] = static_cast<Sign>(a.get_si());
  return signs;
}

FiniteClosedForm finite_closed_form(const std::vector<Sign>& signs) {
  const std::size_t k = signs.size();
  if (k == 0) return {Int(1), 0};  // bare sqrt(2) = 2cos(pi/4)
  Int alpha(0);
  int delta = 1;
  for (std::size_t i = 0; i < k; ++i) {
    delta *= signs[i];
    alpha += Int(delta) << (k - 1 - i);
  }
  return {(Int(1) << k) - alpha, k};
}

std::vector<Sign> finite_signs(const Int& beta, std::size_t k) {
  if (mpz_even_p(beta.get_mpz_t()) || beta < 1 || beta > (Int(1) << (k + 1)) - 1)
    throw std::domain_error("finite_signs: beta must be odd in [1, 2^(k+1)-1]");
  if (k == 0) return {};
  const Int alpha = (Int(1) << k) - beta;
  // odd_decomposition yields the coefficient of 2^(i-1); delta_i is the
  // coefficient of 2^(k-i), and e_r = delta_r * delta_{r-1}.
  const auto coeff = odd_decomposition(alpha, k);
  std::vector<Sign> signs(k);
  int prev = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const Sign delta_i = coeff[k - 1 - i];
    signs[i] = delta_i * prev;
    prev = delta_i;
  }
  return signs;
}

EncodeRealResult encode_real(const DyadicInterval& x, std::size_t count, mpfr_prec_t precision) {
  if (!(x.is_strictly_positive() && x.hi_rational() < Rational(2)))
    throw std::domain_error("encode_real: enclosure must lie strictly inside (0, 2)");
  EncodeRealResult res;
  const mpfr_prec_t work = std::max(precision, x.precision());
  const DyadicInterval two = DyadicInterval::exact(2, work);
  DyadicInterval y = DyadicInterval::exact(0, work) + x;
  for (std::size_t n = 1; n <= count; ++n) {
    y = square(y) - two;
    if (y.is_strictly_positive())
      res.signs.push_back(+1);
    else if (y.is_strictly_negative())
      res.signs.push_back(-1);
    else {
      res.failed_index = n;
      break;
    }
  }
  return res;
}

}  // namespace radical
