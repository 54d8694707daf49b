#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace radical {

using Int = mpz_class;

// Exact reduced fraction over arbitrary-precision integers.
//
// Invariants: gcd(|num|, den) = 1 and den >= 1; zero is 0/1. All arithmetic
// is exact. In most of this library a Rational q names an angle with the
// semantics "value is 2*cos(q*pi)".
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Int n) : num_(std::move(n)), den_(1) {}
  Rational(Int num, Int den);  // reduces; throws std::domain_error if den == 0
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  // den = 2^k * odd_part(den); returns k and the odd part.
  struct TwoAdicSplit {
    unsigned long k;
    Int odd;
  };
  TwoAdicSplit split_denominator() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Reduced forms are unique, so equality is componentwise.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // q * 2^k, exact; k may be negative.
  Rational mul_pow2(long k) const;

  // Representative of q modulo 2 in [0, 2).
  Rational mod2() const;

  // Parses "num/den" or "num"; throws std::invalid_argument on malformed text.
  static Rational from_string(const std::string& text);

  // Always renders as "num/den", e.g. "0/1", "-5/14".
  std::string str() const;

 private:
  void reduce();

  Int num_;
  Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline Rational pow2(long k) { return Rational(1).mul_pow2(k); }

}  // namespace radical
