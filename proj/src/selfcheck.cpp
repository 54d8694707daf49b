#include "radical/selfcheck.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "radical/codec.hpp"
#include "radical/limit_theory.hpp"
#include "radical/modular.hpp"
#include "radical/tower.hpp"
#include "radical/vieta.hpp"

namespace radical::selfcheck {

namespace {

SuiteResult run_roundtrip() {
  SuiteResult r{"roundtrip", true, 0, 0.0, ""};
  for (long s = 3; s <= 199; s += 2) {
    const unsigned long p = semi_order(s).p;
    for (long t = 1; 2 * t < s; ++t) {
      if (std::gcd(t, s) != 1) continue;
      const Rational q(t, s);
      const SignWord w = encode_rational(q);
      ++r.cases;
      if (decode(w) != q || w.block.size() != p) {
        r.passed = false;
        r.detail = "failed at q = " + q.str();
        return r;
      }
    }
  }
  r.detail = "decode(encode(q)) = q and block length = semi-order";
  return r;
}

SuiteResult run_theorem3() {
  SuiteResult r{"theorem3", true, 0, 0.0, ""};
  for (std::size_t k = 1; k <= 12; ++k) {
    std::set<Int> betas;
    std::vector<Sign> signs(k);
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      for (std::size_t i = 0; i < k; ++i) signs[i] = (mask >> i) & 1 ? +1 : -1;
      const auto form = finite_closed_form(signs);
      ++r.cases;
      const bool in_range = mpz_odd_p(form.beta.get_mpz_t()) && form.beta >= 1 &&
                            form.beta <= (Int(1) << (k + 1)) - 1;
      const auto value = eval_tower({signs, Rational(0)}, 256);
      const auto expected = cos_pi(Rational(form.beta, Int(1) << (k + 2)), 256).mul_pow2(1);
      const auto diff = value - expected;
      const bool numeric_ok = diff.contains_zero() && diff.width_leq_pow2(-100);
      if (!in_range || !numeric_ok || finite_signs(form.beta, k) != signs) {
        r.passed = false;
        r.detail = "failed at word " + render_signs(signs);
        return r;
      }
      betas.insert(form.beta);
    }
    if (betas.size() != (1UL << k)) {
      r.passed = false;
      r.detail = "bijection gap at k = " + std::to_string(k);
      return r;
    }
  }
  r.detail = "2^k words map bijectively onto odd beta, towers match the closed form";
  return r;
}

SuiteResult run_limits() {
  SuiteResult r{"limits", true, 0, 0.0, ""};
  struct Case {
    const char* block;
    std::vector<Rational> coefficients;
    Rational tol;
  };
  const Case cases[] = {
      {"-+-", {Rational(-5, 14), Rational(-3, 14), Rational(1, 14)}, Rational(1, 100000000L)},
      {"-", {Rational(-1, 6), Rational(1, 6)}, Rational(1, 10000000000L)},
      {"+-",
       {Rational(1, 10), Rational(-3, 10), Rational(-1, 10), Rational(3, 10)},
       Rational(1, 100000000L)},
  };
  const mpfr_prec_t prec = 256;
  const auto pi = DyadicInterval::pi(prec);
  for (const auto& c : cases) {
    const SignWord w = parse_word(c.block);
    const auto set = limit_points(w.block);
    if (set.coefficients != c.coefficients) {
      r.passed = false;
      r.detail = std::string("coefficients differ for block ") + c.block;
      return r;
    }
    const auto sin_q = sin_pi(set.q, prec);
    const unsigned long span = sigma_table(w.block).span();
    const auto entries = u_sequence(w, 20 * span + span - 1, 160);
    for (unsigned long j = 0; j < span; ++j) {
      ++r.cases;
      const auto limit = DyadicInterval::from_rational(set.coefficients[j], prec) * pi * sin_q;
      const auto& u = entries[20 * span + j - 1].u;
      r.max_error = std::max(r.max_error, dist_upper(u, limit));
      if (!dist_leq(u, limit, c.tol)) {
        r.passed = false;
        r.detail = std::string("u too far from its limit point, block ") + c.block +
                   ", j = " + std::to_string(j);
        return r;
      }
    }
  }
  r.detail = "exact coefficients and numeric u-subsequence limits at m = 20";
  return r;
}

SuiteResult run_vieta() {
  SuiteResult r{"vieta", true, 0, 0.0, ""};
  const mpfr_prec_t prec = 256;
  const Rational tol(1, 10000000000L);
  for (const auto& q : {Rational(1, 3), Rational(1, 5), Rational(3, 7)}) {
    const auto report = verify_product(q, 40, prec, tol);
    ++r.cases;
    r.max_error = std::max(r.max_error, report.distances[report.aligned_index]);
    if (!report.final_within_tolerance || !report.precision_ok) {
      r.passed = false;
      r.detail = "partial product misses the target for q = " + q.str();
      return r;
    }

    // telescoping certificate through 20 block repetitions
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
      ++r.cases;
      if (!(lhs - rhs).contains_zero()) {
        r.passed = false;
        r.detail = "telescoping identity fails for q = " + q.str() +
                   " at n = " + std::to_string(n);
        return r;
      }
    }
  }
  r.detail = "40-factor partials within 1e-10 of targets; telescoping identity certified";
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"roundtrip", "theorem3", "limits", "vieta"};
  return names;
}

SuiteResult run_suite(const std::string& name) {
  if (name == "roundtrip") return run_roundtrip();
  if (name == "theorem3") return run_theorem3();
  if (name == "limits") return run_limits();
  if (name == "vieta") return run_vieta();
  throw std::domain_error("unknown suite '" + name + "' (expected roundtrip, theorem3, limits, vieta, or all)");
}

}  // namespace radical::selfcheck
