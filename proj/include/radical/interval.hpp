#pragma once

#include <mpfr.h>

#include <string>

#include "radical/rational.hpp"

namespace radical {

// Closed interval [lo, hi] of dyadic rationals (MPFR floats, mantissa*2^exp at
// a fixed endpoint precision). Every operation rounds lo down and hi up, so
// an interval computed from inputs containing the true operands always
// contains the true value.
class DyadicInterval {
 public:
  explicit DyadicInterval(mpfr_prec_t precision);  // [0, 0]
  DyadicInterval(const DyadicInterval& o);
  DyadicInterval(DyadicInterval&& o) noexcept;
  DyadicInterval& operator=(const DyadicInterval& o);
  DyadicInterval& operator=(DyadicInterval&& o) noexcept;
  ~DyadicInterval();

  static DyadicInterval exact(long v, mpfr_prec_t precision);
  static DyadicInterval from_rational(const Rational& q, mpfr_prec_t precision);
  static DyadicInterval pi(mpfr_prec_t precision);

  mpfr_prec_t precision() const { return precision_; }

  friend DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b);
  friend DyadicInterval operator/(const DyadicInterval& a, const DyadicInterval& b);
  DyadicInterval operator-() const;

  // x * 2^e; exact (no rounding).
  DyadicInterval mul_pow2(long e) const;

  bool contains_zero() const;
  bool is_strictly_positive() const;
  bool is_strictly_negative() const;
  bool contains(const Rational& q) const;
  bool overlaps(const DyadicInterval& o) const;
  // Every point of *this lies in o (endpointwise o.lo <= lo and hi <= o.hi).
  bool contained_in(const DyadicInterval& o) const;

  // Exact endpoint values (every MPFR float is a rational).
  Rational lo_rational() const;
  Rational hi_rational() const;

  // True iff hi - lo <= 2^e, computed without rounding error.
  bool width_leq_pow2(long e) const;
  bool width_leq(const Rational& tol) const;
  // Upper bound on the width as a double (+inf if it overflows).
  double width_upper() const;

  // Midpoint as double, for display and diagnostics only.
  double mid_double() const;

  // Decimal rendering that prints only digits guaranteed by the width:
  // guaranteed_digits = floor(-log10(radius)), capped at max_digits.
  struct Display {
    std::string midpoint;
    std::string radius;  // "0" when the interval is a point
    long guaranteed_digits;
    bool exact;
  };
  Display display(std::size_t max_digits = 20) const;

  std::string str(std::size_t max_digits = 20) const;

 private:
  void init(mpfr_prec_t precision);

  mpfr_t lo_;
  mpfr_t hi_;
  mpfr_prec_t precision_ = 0;

  friend DyadicInterval sqrt(const DyadicInterval& x);
  friend DyadicInterval square(const DyadicInterval& x);
  friend DyadicInterval abs(const DyadicInterval& x);
  friend DyadicInterval cos_pi(const Rational& angle, mpfr_prec_t precision);
  friend bool dist_leq(const DyadicInterval& a, const DyadicInterval& b, const Rational& tol);
  friend double dist_upper(const DyadicInterval& a, const DyadicInterval& b);
};

// Square root with outward rounding. The radicand's lower endpoint is clamped
// to 0 when the interval merely dips below 0 (the true value is known real);
// an interval entirely below 0 signals a caller bug and throws
// std::domain_error.
DyadicInterval sqrt(const DyadicInterval& x);

// Tighter than x*x (uses |x| monotonicity).
DyadicInterval square(const DyadicInterval& x);

DyadicInterval abs(const DyadicInterval& x);

// Rigorous enclosure of cos(angle*pi) for an exact rational angle. The angle
// is reduced mod 2 exactly, folded onto [0, 1] where cos is monotone, and the
// endpoint cosines are rounded outward.
DyadicInterval cos_pi(const Rational& angle, mpfr_prec_t precision);

// sin(angle*pi) = cos((angle - 1/2)*pi).
DyadicInterval sin_pi(const Rational& angle, mpfr_prec_t precision);

// True iff |x - y| <= tol is guaranteed for all x in a, y in b.
bool dist_leq(const DyadicInterval& a, const DyadicInterval& b, const Rational& tol);

// Upper bound on sup |x - y| over x in a, y in b, as a double.
double dist_upper(const DyadicInterval& a, const DyadicInterval& b);

}  // namespace radical
