#include "radical/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace radical {

namespace {

mpfr_prec_t join(const DyadicInterval& a, const DyadicInterval& b) {
  return std::max(a.precision(), b.precision());
}

// Rational -> mpfr with an explicit direction.
void set_q(mpfr_t out, const Rational& q, mpfr_rnd_t rnd) {
  mpq_class t(q.num(), q.den());
  t.canonicalize();
  mpfr_set_q(out, t.get_mpq_t(), rnd);
}

}  // namespace

void DyadicInterval::init(mpfr_prec_t precision) {
  precision_ = precision;
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
}

DyadicInterval::DyadicInterval(mpfr_prec_t precision) {
  init(precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

DyadicInterval::DyadicInterval(const DyadicInterval& o) {
  init(o.precision_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

DyadicInterval::DyadicInterval(DyadicInterval&& o) noexcept : precision_(o.precision_) {
  mpfr_init2(lo_, o.precision_);
  mpfr_init2(hi_, o.precision_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

DyadicInterval& DyadicInterval::operator=(const DyadicInterval& o) {
  if (this == &o) return *this;
  mpfr_set_prec(lo_, o.precision_);
  mpfr_set_prec(hi_, o.precision_);
  precision_ = o.precision_;
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

DyadicInterval& DyadicInterval::operator=(DyadicInterval&& o) noexcept {
  if (this == &o) return *this;
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(precision_, o.precision_);
  return *this;
}

DyadicInterval::~DyadicInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

DyadicInterval DyadicInterval::exact(long v, mpfr_prec_t precision) {
  DyadicInterval r(precision);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

DyadicInterval DyadicInterval::from_rational(const Rational& q, mpfr_prec_t precision) {
  DyadicInterval r(precision);
  set_q(r.lo_, q, MPFR_RNDD);
  set_q(r.hi_, q, MPFR_RNDU);
  return r;
}

DyadicInterval DyadicInterval::pi(mpfr_prec_t precision) {
  DyadicInterval r(precision);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  DyadicInterval r(join(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
  DyadicInterval r(join(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  DyadicInterval r(join(a, b));
  mpfr_t t;
  mpfr_init2(t, r.precision_);
  const mpfr_srcptr av[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bv[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : av)
    for (auto y : bv) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b) {
  if (b.contains_zero()) throw std::domain_error("DyadicInterval: division by interval containing 0");
  DyadicInterval r(join(a, b));
  mpfr_t t;
  mpfr_init2(t, r.precision_);
  const mpfr_srcptr av[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bv[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : av)
    for (auto y : bv) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

DyadicInterval DyadicInterval::operator-() const {
  DyadicInterval r(precision_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

DyadicInterval DyadicInterval::mul_pow2(long e) const {
  DyadicInterval r(precision_);
  mpfr_mul_2si(r.lo_, lo_, e, MPFR_RNDD);
  mpfr_mul_2si(r.hi_, hi_, e, MPFR_RNDU);
  return r;
}

bool DyadicInterval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool DyadicInterval::is_strictly_positive() const { return mpfr_sgn(lo_) > 0; }

bool DyadicInterval::is_strictly_negative() const { return mpfr_sgn(hi_) < 0; }

bool DyadicInterval::contains(const Rational& q) const {
  mpq_class t(q.num(), q.den());
  t.canonicalize();
  return mpfr_cmp_q(lo_, t.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, t.get_mpq_t()) >= 0;
}

bool DyadicInterval::overlaps(const DyadicInterval& o) const {
  return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

bool DyadicInterval::contained_in(const DyadicInterval& o) const {
  return mpfr_cmp(o.lo_, lo_) <= 0 && mpfr_cmp(hi_, o.hi_) <= 0;
}

namespace {

Rational mpfr_to_rational(mpfr_srcptr v) {
  if (!mpfr_number_p(v)) throw std::domain_error("DyadicInterval: non-finite endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v);
  return Rational(Int(q.get_num()), Int(q.get_den()));
}

}  // namespace

Rational DyadicInterval::lo_rational() const { return mpfr_to_rational(lo_); }
Rational DyadicInterval::hi_rational() const { return mpfr_to_rational(hi_); }

bool DyadicInterval::width_leq_pow2(long e) const {
  // Upper bound on the width compared against 2^e; conservative direction.
  mpfr_t w;
  mpfr_init2(w, 2 * precision_ + 4);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_t bound;
  mpfr_init2(bound, 8);
  mpfr_set_si_2exp(bound, 1, e, MPFR_RNDN);
  const bool ok = mpfr_cmp(w, bound) <= 0;
  mpfr_clear(bound);
  mpfr_clear(w);
  return ok;
}

bool DyadicInterval::width_leq(const Rational& tol) const {
  return (hi_rational() - lo_rational()) <= tol;
}

double DyadicInterval::width_upper() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

double DyadicInterval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, 64);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

DyadicInterval sqrt(const DyadicInterval& x) {
  if (mpfr_sgn(x.hi_) < 0)
    throw std::domain_error("sqrt: radicand interval entirely below 0 (inconsistent tower)");
  DyadicInterval r(x.precision_);
  if (mpfr_sgn(x.lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

DyadicInterval square(const DyadicInterval& x) {
  DyadicInterval r(x.precision_);
  if (mpfr_sgn(x.lo_) >= 0) {
    mpfr_sqr(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, x.hi_, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi_) <= 0) {
    mpfr_sqr(r.lo_, x.hi_, MPFR_RNDD);
    mpfr_sqr(r.hi_, x.lo_, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, x.precision_);
    mpfr_sqr(t, x.lo_, MPFR_RNDU);
    mpfr_sqr(r.hi_, x.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
  }
  return r;
}

DyadicInterval abs(const DyadicInterval& x) {
  DyadicInterval r(x.precision_);
  if (mpfr_sgn(x.lo_) >= 0) return x;
  if (mpfr_sgn(x.hi_) <= 0) return -x;
  mpfr_set_zero(r.lo_, 1);
  mpfr_t t;
  mpfr_init2(t, x.precision_);
  mpfr_neg(t, x.lo_, MPFR_RNDU);
  if (mpfr_cmp(t, x.hi_) > 0)
    mpfr_set(r.hi_, t, MPFR_RNDU);
  else
    mpfr_set(r.hi_, x.hi_, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

DyadicInterval cos_pi(const Rational& angle, mpfr_prec_t precision) {
  Rational a = angle.mod2();          // [0, 2)
  if (a > Rational(1)) a = Rational(2) - a;  // cos((2-a)pi) = cos(a*pi); now [0, 1]

  DyadicInterval r(precision);
  if (a.is_zero()) return DyadicInterval::exact(1, precision);
  if (a == Rational(1)) return DyadicInterval::exact(-1, precision);
  if (a == Rational(1, 2)) return DyadicInterval(precision);  // [0, 0]

  // theta = a*pi with a in (0, 1); cos is decreasing on [0, pi].
  mpfr_t pi_lo, pi_hi, th_lo, th_hi, t;
  mpfr_init2(pi_lo, precision);
  mpfr_init2(pi_hi, precision);
  mpfr_init2(th_lo, precision);
  mpfr_init2(th_hi, precision);
  mpfr_init2(t, precision);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  set_q(t, a, MPFR_RNDD);
  mpfr_mul(th_lo, t, pi_lo, MPFR_RNDD);
  set_q(t, a, MPFR_RNDU);
  mpfr_mul(th_hi, t, pi_hi, MPFR_RNDU);

  mpfr_cos(r.hi_, th_lo, MPFR_RNDU);
  if (mpfr_cmp(th_hi, pi_lo) < 0) {
    mpfr_cos(r.lo_, th_hi, MPFR_RNDD);
  } else {
    // theta's enclosure may reach pi, where the monotone branch ends.
    mpfr_set_si(r.lo_, -1, MPFR_RNDD);
  }
  if (mpfr_cmp_si(r.hi_, 1) > 0) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
  if (mpfr_cmp_si(r.lo_, -1) < 0) mpfr_set_si(r.lo_, -1, MPFR_RNDD);

  mpfr_clear(pi_lo);
  mpfr_clear(pi_hi);
  mpfr_clear(th_lo);
  mpfr_clear(th_hi);
  mpfr_clear(t);
  return r;
}

DyadicInterval sin_pi(const Rational& angle, mpfr_prec_t precision) {
  return cos_pi(angle - Rational(1, 2), precision);
}

bool dist_leq(const DyadicInterval& a, const DyadicInterval& b, const Rational& tol) {
  // sup |x - y| = max(a.hi - b.lo, b.hi - a.lo), exact in rational arithmetic.
  const Rational d1 = a.hi_rational() - b.lo_rational();
  const Rational d2 = b.hi_rational() - a.lo_rational();
  const Rational d = d1 < d2 ? d2 : d1;
  return d <= tol;
}

double dist_upper(const DyadicInterval& a, const DyadicInterval& b) {
  mpfr_t d1, d2;
  mpfr_init2(d1, 64);
  mpfr_init2(d2, 64);
  mpfr_sub(d1, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_sub(d2, b.hi_, a.lo_, MPFR_RNDU);
  if (mpfr_cmp(d2, d1) > 0) mpfr_swap(d1, d2);
  double d = mpfr_get_d(d1, MPFR_RNDU);
  mpfr_clear(d1);
  mpfr_clear(d2);
  return d < 0 ? 0.0 : d;
}

DyadicInterval::Display DyadicInterval::display(std::size_t max_digits) const {
  mpfr_t rad, mid;
  mpfr_init2(rad, 64);
  mpfr_init2(mid, precision_ + 8);
  mpfr_sub(rad, hi_, lo_, MPFR_RNDU);
  mpfr_div_2ui(rad, rad, 1, MPFR_RNDU);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);

  Display d;
  d.exact = mpfr_zero_p(rad) != 0;
  long digits = static_cast<long>(max_digits);
  if (!d.exact) {
    mpfr_t lg;
    mpfr_init2(lg, 64);
    mpfr_log10(lg, rad, MPFR_RNDU);
    mpfr_neg(lg, lg, MPFR_RNDD);
    mpfr_floor(lg, lg);
    digits = mpfr_get_si(lg, MPFR_RNDD);
    mpfr_clear(lg);
  }
  d.guaranteed_digits = std::max(digits, 0L);
  digits = std::clamp(digits, 0L, static_cast<long>(max_digits));

  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rf", static_cast<int>(digits), mid);
  d.midpoint = s;
  mpfr_free_str(s);
  if (d.exact) {
    d.radius = "0";
  } else {
    mpfr_asprintf(&s, "%.2Re", rad);
    d.radius = s;
    mpfr_free_str(s);
  }
  mpfr_clear(rad);
  mpfr_clear(mid);
  return d;
}

std::string DyadicInterval::str(std::size_t max_digits) const {
  const Display d = display(max_digits);
  if (d.exact) return d.midpoint + " (exact)";
  return d.midpoint + " +/- " + d.radius;
}

}  // namespace radical
