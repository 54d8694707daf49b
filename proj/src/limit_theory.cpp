#include "radical/limit_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace radical {

namespace {

bool all_plus(const std::vector<Sign>& block) {
  return std::all_of(block.begin(), block.end(), [](Sign s) { return s == +1; });
}

}  // namespace

Rational SigmaTable::sigma_limit() const {
  const long P = static_cast<long>(span());
  return sigma.back() * Rational(Int(1) << P, (Int(1) << P) - 1);
}

SigmaTable sigma_table(const std::vector<Sign>& block) {
  if (block.empty()) throw std::domain_error("sigma_table: empty block");
  for (Sign e : block)
    if (e != 1 && e != -1) throw std::domain_error("sigma_table: signs must be +-1");

  SigmaTable t;
  t.block = block;
  const std::size_t p = block.size();
  t.delta_p = 1;
  for (Sign e : block) t.delta_p *= e;
  const std::size_t span = t.delta_p == 1 ? p : 2 * p;

  t.delta.reserve(span + 1);
  t.sigma.reserve(span + 1);
  t.delta.push_back(0);
  t.sigma.push_back(Rational(0));
  int d = 1;
  for (std::size_t i = 1; i <= span; ++i) {
    d *= block[(i - 1) % p];
    t.delta.push_back(d);
    t.sigma.push_back(t.sigma.back() + Rational(d).mul_pow2(-static_cast<long>(i)));
  }
  return t;
}

Rational limit_value(const std::vector<Sign>& block) {
  if (block.empty()) throw std::domain_error("limit_value: empty block");
  if (all_plus(block)) return Rational(0);  // trivial constant-2 word
  const SigmaTable t = sigma_table(block);
  return (Rational(1) - t.sigma_limit()).mul_pow2(-2);
}

LimitPointSet limit_points(const std::vector<Sign>& block) {
  if (block.empty()) throw std::domain_error("limit_points: empty block");
  if (all_plus(block))
    throw std::domain_error("limit_points: trivial all-plus block has no limit points");

  const SigmaTable t = sigma_table(block);
  const Rational x = t.sigma_limit();
  LimitPointSet set;
  set.q = (Rational(1) - x).mul_pow2(-2);
  set.coefficients.reserve(t.span());
  for (std::size_t j = 0; j < t.span(); ++j)
    set.coefficients.push_back((x - t.sigma[j]).mul_pow2(static_cast<long>(j) - 1));
  return set;
}

Rational first_limit_coefficient(const Rational& q) {
  if (q <= Rational(0) || q >= Rational(1, 2) || mpz_even_p(q.den().get_mpz_t()))
    throw std::domain_error("first_limit_coefficient: q must be in (0, 1/2) with odd denominator");
  return (Rational(1) - q.mul_pow2(2)).mul_pow2(-1);
}

}  // namespace radical
