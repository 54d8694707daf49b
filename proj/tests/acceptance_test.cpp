// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Reference values come from the independent oracle paths in
// oracles.{hpp,cpp} (BBP pi bounds, integer square roots, Taylor trig over
// exact rationals), never from the evaluation path under test.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "radical/codec.hpp"
#include "radical/limit_theory.hpp"
#include "radical/modular.hpp"
#include "radical/tower.hpp"
#include "radical/vieta.hpp"

using namespace radical;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

const Rational kTol8 = Rational(1, 100000000L);           // 1e-8
const Rational kTol10 = Rational(1, 10000000000L);        // 1e-10
const Rational kTol12 = Rational(1, Int("1000000000000"));  // 1e-12

Outcome criterion1_semi_order() {
  if (semi_order(17).p != 4) return {false, "semi_order(17) != 4"};
  for (long s = 3; s <= 9999; s += 2) {
    const auto so = semi_order(s);
    if (mod_pow(2, 2 * Int(so.p), s) != 1)
      return {false, "2^(2p) != 1 mod " + std::to_string(s)};
    if (mod_pow(2, so.p, s) != (so.sign == 1 ? Int(1) : Int(s - 1)))
      return {false, "sign mismatch at s = " + std::to_string(s)};
  }
  return {true, "semi_order(17) = 4; sweep of odd s in [3, 9999] consistent"};
}

Outcome criterion2_roundtrip() {
  long cases = 0;
  for (long s = 3; s <= 199; s += 2) {
    const unsigned long p = semi_order(s).p;
    for (long t = 1; 2 * t < s; ++t) {
      if (std::gcd(t, s) != 1) continue;
      const Rational q(t, s);
      const SignWord w = encode_rational(q);
      if (decode(w) != q) return {false, "decode(encode(q)) != q at q = " + q.str()};
      if (w.block.size() != p) return {false, "block length != semi-order at q = " + q.str()};
      ++cases;
    }
  }
  return {true, "exact round trip and block length over " + std::to_string(cases) + " rationals"};
}

Outcome criterion3_enumeration() {
  long cases = 0;
  for (std::size_t k = 1; k <= 12; ++k) {
    std::set<Int> betas;
    std::vector<Sign> signs(k);
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      for (std::size_t i = 0; i < k; ++i) signs[i] = (mask >> i) & 1 ? +1 : -1;
      const auto form = finite_closed_form(signs);
      if (mpz_even_p(form.beta.get_mpz_t()) || form.beta < 1 ||
          form.beta > (Int(1) << (k + 1)) - 1)
        return {false, "beta out of range at word " + render_signs(signs)};
      if (finite_signs(form.beta, k) != signs)
        return {false, "inverse mismatch at word " + render_signs(signs)};
      const auto value = eval_tower({signs, Rational(0)}, 256);
      const auto expected = cos_pi(Rational(form.beta, Int(1) << (k + 2)), 256).mul_pow2(1);
      const auto diff = value - expected;
      if (!diff.contains_zero() || !diff.width_leq_pow2(-100))
        return {false, "tower/closed-form gap at word " + render_signs(signs)};
      betas.insert(form.beta);
      ++cases;
    }
    if (betas.size() != (1UL << k))
      return {false, "bijection fails at k = " + std::to_string(k)};
  }
  return {true, std::to_string(cases) + " finite words map bijectively onto odd beta"};
}

// u_{mP+j} at m = 20 against the oracle-evaluated limit points.
Outcome limit_point_criterion(const char* block_text,
                              const std::vector<Rational>& expected_coefficients,
                              const Rational& tol) {
  const SignWord w = parse_word(block_text);
  const auto set = limit_points(w.block);
  if (set.coefficients != expected_coefficients)
    return {false, std::string("coefficients differ for block ") + block_text};

  const auto sin_q = oracle::sin_pi(set.q, 48, 48);
  const auto pi = oracle::bbp_pi(48);
  const unsigned long span = sigma_table(w.block).span();
  const auto entries = u_sequence(w, 20 * span + span - 1, 160);
  for (unsigned long j = 0; j < span; ++j) {
    const auto limit = oracle::scale(oracle::mul(pi, sin_q), set.coefficients[j]);
    const auto& u = entries[20 * span + j - 1].u;
    if (!entries[20 * span + j - 1].precision_ok)
      return {false, "u-entry flagged precision exhaustion at j = " + std::to_string(j)};
    if (!oracle::dist_leq(limit, u, tol))
      return {false, std::string("u too far from limit point, block ") + block_text +
                         ", j = " + std::to_string(j)};
  }
  return {true, std::string("block ") + block_text + ": exact coefficients, numeric match at m = 20"};
}

Outcome criterion4_block_mpm() {
  return limit_point_criterion("-+-", {Rational(-5, 14), Rational(-3, 14), Rational(1, 14)},
                               kTol8);
}

Outcome criterion5_block_m() {
  // u_40 within 1e-10 of -sqrt(3) pi / 12 and u_39 within 1e-10 of +sqrt(3) pi / 12
  const auto out = limit_point_criterion("-", {Rational(-1, 6), Rational(1, 6)}, kTol10);
  if (!out.ok) return out;
  const auto entries = u_sequence(parse_word("|-"), 40, 160);
  const auto s3pi12 = oracle::scale(
      oracle::mul(oracle::sqrt_interval({Rational(3), Rational(3)}, 200), oracle::bbp_pi(48)),
      Rational(1, 12));
  if (!oracle::dist_leq(oracle::neg(s3pi12), entries[39].u, kTol10))
    return {false, "u_40 misses -sqrt(3)pi/12"};
  if (!oracle::dist_leq(s3pi12, entries[38].u, kTol10))
    return {false, "u_39 misses +sqrt(3)pi/12"};
  return {true, "block -: u_40 and u_39 within 1e-10 of -+sqrt(3)pi/12"};
}

Outcome criterion6_block_pm() {
  return limit_point_criterion(
      "+-", {Rational(1, 10), Rational(-3, 10), Rational(-1, 10), Rational(3, 10)}, kTol8);
}

Outcome criterion7_vieta_third() {
  const auto report = verify_product(Rational(1, 3), 40, 256, kTol10);
  // independent 50-digit reference for 2 sqrt(3) / pi
  const auto ref = oracle::div(
      oracle::scale(oracle::sqrt_interval({Rational(3), Rational(3)}, 200), Rational(2)),
      oracle::bbp_pi(50));
  if (ref.width() > Rational(1, Int(10)) * kTol12 * kTol12 * kTol12 * kTol12)
    return {false, "reference for 2sqrt(3)/pi is wider than 50 digits"};
  if (!report.final_within_tolerance || report.aligned_index != 40)
    return {false, "partial product misses the target"};
  if (!oracle::dist_leq(ref, report.partials[40], kTol10))
    return {false, "40-factor partial misses the independent 2sqrt(3)/pi reference"};
  if (!oracle::overlaps(ref, report.target)) return {false, "target misses the reference"};
  return {true, "40-factor partial within 1e-10 of the independent 2sqrt(3)/pi value"};
}

Outcome criterion8_vieta_fifth() {
  const auto report = verify_product(Rational(1, 5), 40, 256, kTol10);
  // independent surd path: 5 sqrt(2) (sqrt(5)-1) / (pi sqrt(5 - sqrt(5)))
  const auto sqrt2 = oracle::sqrt_interval({Rational(2), Rational(2)}, 200);
  const auto sqrt5 = oracle::sqrt_interval({Rational(5), Rational(5)}, 200);
  const auto root_term =
      oracle::sqrt_interval(oracle::sub({Rational(5), Rational(5)}, sqrt5), 200);
  const auto ref = oracle::div(
      oracle::mul(oracle::scale(sqrt2, Rational(5)),
                  oracle::sub(sqrt5, {Rational(1), Rational(1)})),
      oracle::mul(oracle::bbp_pi(48), root_term));
  if (ref.width() > kTol12) return {false, "surd reference wider than 1e-12"};
  if (!oracle::overlaps(ref, report.target))
    return {false, "target interval misses the surd value"};
  if (!report.final_within_tolerance || report.aligned_index != 40)
    return {false, "40-factor partial misses the target"};
  return {true, "target contains the surd value to 1e-12; 40-factor partial within 1e-10"};
}

Outcome criterion9_telescoping() {
  for (const auto& q : {Rational(1, 3), Rational(1, 5), Rational(3, 7)}) {
    const mpfr_prec_t prec = 256;
    const unsigned long p = minimal_period(q);
    const int delta_p = sigma_table(encode_rational(q).block).delta_p;
    const auto two_cos_q = cos_pi(q, prec).mul_pow2(1);
    const auto rhs_base = two_cos_q - sqrt(DyadicInterval::exact(2, prec));
    const auto s = s_sequence(q, p * 21, prec);
    const auto factors = vieta_factors(q, p * 21, prec);
    DyadicInterval partial = DyadicInterval::exact(1, prec);
    for (std::size_t n = 0; n <= 20; ++n) {
      for (std::size_t j = 1; j <= p; ++j)
        partial = partial * factors.stream[n * p + j - 1].value;
      const auto lhs =
          (two_cos_q - s[p * (n + 1)]).mul_pow2(static_cast<long>(p * (n + 1))) * partial;
      const auto rhs = (delta_p == 1 || n % 2 == 1) ? rhs_base : -rhs_base;
      if (!(lhs - rhs).contains_zero())
        return {false, "identity fails for q = " + q.str() + " at n = " + std::to_string(n)};
    }
  }
  return {true, "proof identity certified for q in {1/3, 1/5, 3/7}, n <= 20, 256 bits"};
}

Outcome criterion10_properties() {
  // (a) sandwich bounds on 1000 randomized towers
  std::mt19937 rng(20250809);
  std::uniform_int_distribution<int> len(1, 14);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<long> cnum(-200, 200);
  for (int it = 0; it < 1000; ++it) {
    std::vector<Sign> signs;
    for (int i = len(rng); i > 0; --i) signs.push_back(bit(rng) ? +1 : -1);
    const Rational c(cnum(rng), 100);
    std::vector<Sign> head(signs.begin(), signs.end() - 1);
    const auto lo_side = eval_tower({head, Rational(0)}, 160);
    const auto mid = eval_tower({signs, c}, 160);
    const auto hi_side = eval_tower({signs, Rational(2)}, 160);
    const Rational hull_lo = std::min(lo_side.lo_rational(), hi_side.lo_rational());
    const Rational hull_hi = std::max(lo_side.hi_rational(), hi_side.hi_rational());
    if (mid.hi_rational() < hull_lo || mid.lo_rational() > hull_hi)
      return {false, "sandwich violated for word " + render_signs(signs) + ", c = " + c.str()};
  }

  // (b) encode_real matches encode_rational on the first 64 signs
  std::uniform_int_distribution<long> s_pick(1, 240);
  std::uniform_int_distribution<long> t_pick(1, 1000);
  int tested = 0;
  while (tested < 100) {
    const long s = 2 * s_pick(rng) + 1;
    const long t = t_pick(rng) % (s / 2);
    if (t <= 0 || std::gcd(t, s) != 1) continue;
    const Rational q(t, s);
    const auto res = encode_real(cos_pi(q, 512).mul_pow2(1), 64, 512);
    if (res.failed_index.has_value())
      return {false, "encode_real undecidable for q = " + q.str()};
    if (res.signs != spelled_prefix(encode_rational(q), 64))
      return {false, "encoder disagreement for q = " + q.str()};
    ++tested;
  }

  // (c) canonicalize eliminates set-A tails
  std::uniform_int_distribution<int> pad(0, 4);
  std::uniform_int_distribution<int> plen(0, 8);
  for (int it = 0; it < 500; ++it) {
    SignWord finite;
    for (int i = plen(rng); i > 0; --i) finite.preamble.push_back(bit(rng) ? +1 : -1);
    SignWord raw;
    raw.preamble = finite.preamble;
    raw.preamble.push_back(-1);
    raw.preamble.push_back(-1);
    for (int i = pad(rng); i > 0; --i) raw.preamble.push_back(+1);
    raw.block = std::vector<Sign>(static_cast<std::size_t>(1 + pad(rng)), +1);
    const SignWord canon = canonicalize(raw);
    if (spells_set_a_tail(canon) || canon != finite)
      return {false, "set-A tail survives canonicalize: " + render_word(raw)};
  }
  return {true, "sandwich on 10^3 towers; encoder agreement on 100 rationals; set-A removal"};
}

struct Criterion {
  int id;
  const char* label;
  Outcome (*run)();
  double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "semi-order of 2 and the odd sweep to 9999", criterion1_semi_order, 5.0},
      {2, "codec round trip over odd denominators <= 199", criterion2_roundtrip, 30.0},
      {3, "finite-word enumeration against the closed form (k <= 12)", criterion3_enumeration,
       60.0},
      {4, "limit points of block -+-", criterion4_block_mpm, 0.0},
      {5, "limit points of block -", criterion5_block_m, 0.0},
      {6, "limit points of block +-", criterion6_block_pm, 0.0},
      {7, "Vieta product for q = 1/3 against 2sqrt(3)/pi", criterion7_vieta_third, 5.0},
      {8, "Vieta product for q = 1/5 against the surd target", criterion8_vieta_fifth, 0.0},
      {9, "telescoping identity certificate", criterion9_telescoping, 0.0},
      {10, "property suite: sandwich, encoder agreement, set-A removal", criterion10_properties,
       0.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out{false, "exception"};
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = c.budget_seconds == 0.0 || secs < c.budget_seconds;
    const bool ok = out.ok && in_budget;
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2fs%s): %s\n", ok ? "PASS" : "FAIL", c.id, c.label,
                secs, in_budget ? "" : ", OVER BUDGET", out.detail.c_str());
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
