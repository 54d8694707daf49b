#include "radical/tower.hpp"

#include <algorithm>
#include <stdexcept>

#include "radical/codec.hpp"
#include "radical/limit_theory.hpp"

namespace radical {

DyadicInterval eval_tower(const RadicalTower& tower, mpfr_prec_t precision) {
  if (tower.tail < Rational(-2) || tower.tail > Rational(2))
    throw std::domain_error("eval_tower: tail must lie in [-2, 2]");
  for (Sign e : tower.signs)
    if (e != 1 && e != -1) throw std::domain_error("eval_tower: signs must be +-1");

  const DyadicInterval two = DyadicInterval::exact(2, precision);
  DyadicInterval acc = sqrt(two + DyadicInterval::from_rational(tower.tail, precision));
  for (auto it = tower.signs.rbegin(); it != tower.signs.rend(); ++it)
    acc = sqrt(two + (*it > 0 ? acc : -acc));
  return acc;
}

std::vector<USequenceEntry> u_sequence(const SignWord& word, std::size_t n_max,
                                       mpfr_prec_t precision) {
  if (word.kind() != WordKind::TotallyPeriodic)
    throw std::domain_error("u_sequence: word must be totally periodic");
  if (std::all_of(word.block.begin(), word.block.end(), [](Sign s) { return s == +1; }))
    throw std::domain_error("u_sequence: trivial constant-2 word excluded");
  if (n_max == 0) throw std::domain_error("u_sequence: n_max must be >= 1");

  const mpfr_prec_t work = precision + static_cast<mpfr_prec_t>(n_max) + 32;
  const Rational q = decode(word);
  const DyadicInterval r_inf = cos_pi(q, work).mul_pow2(1);

  std::vector<USequenceEntry> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    RadicalTower tower{spelled_prefix(word, n), Rational(0)};
    const DyadicInterval u = (r_inf - eval_tower(tower, work)).mul_pow2(static_cast<long>(n));
    const bool ok = u.width_leq_pow2(-static_cast<long>(precision));
    out.push_back({u, ok});
  }
  return out;
}

Rational iterate_angle(const SignWord& word, unsigned long m, unsigned long j) {
  if (word.kind() != WordKind::TotallyPeriodic)
    throw std::domain_error("iterate_angle: word must be totally periodic");
  const SigmaTable t = sigma_table(word.block);
  const unsigned long span = t.span();
  if (j >= span)
    throw std::domain_error("iterate_angle: j out of range (expected 0 <= j < " +
                            std::to_string(span) + ")");
  // a = 1 - X + (X - sigma_j)/2^(m*P) with X the sigma limit; n = m*P + j.
  const Rational x = t.sigma_limit();
  const long shift = -static_cast<long>(m * span);
  return Rational(1) - x + (x - t.sigma[j]).mul_pow2(shift);
}

}  // namespace radical
