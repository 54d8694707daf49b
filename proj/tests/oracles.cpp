#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

QInterval add(const QInterval& a, const QInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

QInterval sub(const QInterval& a, const QInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

QInterval mul(const QInterval& a, const QInterval& b) {
  const Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})};
}

QInterval div(const QInterval& a, const QInterval& b) {
  if (b.lo <= Rational(0) && Rational(0) <= b.hi)
    throw std::domain_error("oracle::div: divisor interval contains 0");
  const Rational c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return {std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})};
}

QInterval neg(const QInterval& a) { return {-a.hi, -a.lo}; }

QInterval scale(const QInterval& a, const Rational& c) {
  return c.sign() >= 0 ? QInterval{a.lo * c, a.hi * c} : QInterval{a.hi * c, a.lo * c};
}

namespace {

// floor(sqrt(n/d * 4^F)) / 2^F <= sqrt(n/d); one ulp up is an upper bound.
Rational sqrt_down(const Rational& x, unsigned long frac_bits) {
  Int scaled = (x.num() << (2 * frac_bits)) / x.den();
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return Rational(root, Int(1) << frac_bits);
}

Rational sqrt_up(const Rational& x, unsigned long frac_bits) {
  Int scaled = (x.num() << (2 * frac_bits)) / x.den() + 1;
  Int root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return Rational(root + 1, Int(1) << frac_bits);
}

}  // namespace

QInterval sqrt_interval(const QInterval& x, unsigned long frac_bits) {
  if (x.lo.sign() < 0) throw std::domain_error("oracle::sqrt_interval: negative radicand");
  return {sqrt_down(x.lo, frac_bits), sqrt_up(x.hi, frac_bits)};
}

QInterval bbp_pi(unsigned terms) {
  // pi = sum_k 16^-k (120k^2+151k+47)/(512k^4+1024k^3+712k^2+194k+15);
  // every term is positive and term_k < 16^-k * 4, so the tail after T terms
  // is below 16^(1-T) for T >= 1.
  Rational sum(0);
  for (unsigned k = 0; k < terms; ++k) {
    const Int kk(k);
    const Int num = 120 * kk * kk + 151 * kk + 47;
    const Int den = (((512 * kk + 1024) * kk + 712) * kk + 194) * kk + 15;
    sum += Rational(num, den << (4 * k));
  }
  return {sum, sum + Rational(Int(1), Int(1) << (4 * (terms - 1)))};
}

namespace {

// cos on [0, pi/2 + eps] via the Taylor polynomial with alternating remainder
// bound |R| <= x^(2N)/(2N)!.
QInterval cos_taylor(const Rational& x, unsigned terms) {
  Rational sum(1);
  Rational term(1);
  const Rational x2 = x * x;
  for (unsigned k = 1; k < terms; ++k) {
    term = term * x2 / Rational(Int(2 * k - 1) * Int(2 * k));
    sum += (k % 2 == 1) ? -term : term;
  }
  Rational bound = term * x2 / Rational(Int(2 * terms - 1) * Int(2 * terms));
  if (bound.sign() < 0) bound = -bound;
  return {sum - bound, sum + bound};
}

}  // namespace

QInterval cos_pi(const Rational& a, unsigned terms, unsigned pi_terms) {
  Rational r = a.mod2();                       // [0, 2)
  if (r > Rational(1)) r = Rational(2) - r;    // [0, 1]
  int sign = 1;
  if (r > Rational(1, 2)) {                    // [0, 1/2]
    r = Rational(1) - r;
    sign = -1;
  }
  if (r == Rational(1, 2)) return {Rational(0), Rational(0)};
  if (r.is_zero()) return {Rational(sign), Rational(sign)};

  const QInterval theta = scale(bbp_pi(pi_terms), r);
  // cos decreases on [0, pi/2 + eps], so evaluate at the swapped endpoints.
  const QInterval at_hi = cos_taylor(theta.hi, terms);
  const QInterval at_lo = cos_taylor(theta.lo, terms);
  QInterval out{at_hi.lo, at_lo.hi};
  if (sign < 0) out = neg(out);
  return out;
}

QInterval sin_pi(const Rational& a, unsigned terms, unsigned pi_terms) {
  return cos_pi(a - Rational(1, 2), terms, pi_terms);
}

bool overlaps(const QInterval& a, const radical::DyadicInterval& b) {
  return a.lo <= b.hi_rational() && b.lo_rational() <= a.hi;
}

bool envelops(const QInterval& outer, const radical::DyadicInterval& inner) {
  return outer.lo <= inner.lo_rational() && inner.hi_rational() <= outer.hi;
}

bool dist_leq(const QInterval& a, const radical::DyadicInterval& b, const Rational& tol) {
  const Rational d1 = a.hi - b.lo_rational();
  const Rational d2 = b.hi_rational() - a.lo;
  return (d1 < d2 ? d2 : d1) <= tol;
}

}  // namespace oracle
