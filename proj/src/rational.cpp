#include "radical/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace radical {

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational::TwoAdicSplit Rational::split_denominator() const {
  Int odd;
  const auto k = mpz_remove(odd.get_mpz_t(), den_.get_mpz_t(), Int(2).get_mpz_t());
  return {static_cast<unsigned long>(k), odd};
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

Rational Rational::mul_pow2(long k) const {
  if (k >= 0) return Rational(num_ << k, den_);
  return Rational(num_, den_ << -k);
}

Rational Rational::mod2() const {
  const Int two_den = den_ << 1;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), num_.get_mpz_t(), two_den.get_mpz_t());
  return Rational(std::move(r), den_);
}

Rational Rational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  const auto is_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(text, true)) throw std::invalid_argument("Rational: malformed '" + text + "'");
    return Rational(Int(text));
  }
  const std::string n = text.substr(0, slash);
  const std::string d = text.substr(slash + 1);
  if (!is_int(n, true) || !is_int(d, false))
    throw std::invalid_argument("Rational: malformed '" + text + "'");
  Int den(d);
  if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  return Rational(Int(n), std::move(den));
}

std::string Rational::str() const {
  return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace radical
