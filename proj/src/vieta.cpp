#include "radical/vieta.hpp"

#include <stdexcept>

#include "radical/angle.hpp"
#include "radical/modular.hpp"

namespace radical {

namespace {

void require_vieta_domain(const Rational& q) {
  if (q <= Rational(0) || q >= Rational(1, 2))
    throw std::domain_error("q must lie strictly between 0 and 1/2, got " + q.str());
  if (mpz_even_p(q.den().get_mpz_t()))
    throw std::domain_error("q must have an odd denominator, got " + q.str());
}

// Block signs e_i = cos_sign(2^i q), i = 1..p.
std::vector<Sign> block_signs(const Rational& q, unsigned long p) {
  std::vector<Sign> eps;
  eps.reserve(p);
  Rational a = q;
  for (unsigned long i = 0; i < p; ++i) {
    a = a.mul_pow2(1).mod2();
    eps.push_back(cos_sign(a));
  }
  return eps;
}

}  // namespace

std::vector<DyadicInterval> s_sequence(const Rational& q, std::size_t n_max,
                                       mpfr_prec_t precision) {
  require_vieta_domain(q);
  const unsigned long p = semi_order(q.den()).p;
  const auto eps = block_signs(q, p);

  const DyadicInterval two = DyadicInterval::exact(2, precision);
  std::vector<DyadicInterval> s;
  s.reserve(n_max + 1);
  s.push_back(sqrt(two));
  for (std::size_t idx = 1; idx <= n_max; ++idx) {
    // index pn+i uses sign e_{p+1-i}; i-1 = (idx-1) mod p.
    const Sign e = eps[p - 1 - (idx - 1) % p];
    const DyadicInterval& prev = s.back();
    s.push_back(sqrt(two + (e > 0 ? prev : -prev)));
  }
  return s;
}

DyadicInterval vieta_target(const Rational& q, mpfr_prec_t precision) {
  require_vieta_domain(q);
  const DyadicInterval numerator = cos_pi(q.mul_pow2(1), precision).mul_pow2(1);
  const DyadicInterval denominator =
      DyadicInterval::from_rational(Rational(1) - q.mul_pow2(2), precision) *
      DyadicInterval::pi(precision) * sin_pi(q, precision);
  return numerator / denominator;
}

VietaFactors vieta_factors(const Rational& q, std::size_t count, mpfr_prec_t precision) {
  require_vieta_domain(q);
  const unsigned long p = semi_order(q.den()).p;

  const DyadicInterval two = DyadicInterval::exact(2, precision);
  VietaFactors out{(cos_pi(q, precision).mul_pow2(1) + sqrt(two)).mul_pow2(-1), {}};

  // Per-position magnitudes |2cos(2^(p-j) q pi)| and their exact angles.
  std::vector<Rational> angles;
  std::vector<DyadicInterval> magnitudes;
  angles.reserve(p);
  magnitudes.reserve(p);
  for (unsigned long j = 1; j <= p; ++j) {
    const Rational a = q.mul_pow2(static_cast<long>(p - j)).mod2();
    angles.push_back(a);
    magnitudes.push_back(abs(cos_pi(a, precision).mul_pow2(1)));
  }

  const auto s = s_sequence(q, count, precision);
  out.stream.reserve(count);
  for (std::size_t idx = 1; idx <= count; ++idx) {
    const std::size_t j = (idx - 1) % p + 1;
    const std::size_t i = (idx - 1) / p;
    VietaFactor f{i, j, idx, angles[j - 1], (magnitudes[j - 1] + s[idx]).mul_pow2(-1)};
    out.stream.push_back(std::move(f));
  }
  return out;
}

ProductReport verify_product(const Rational& q, std::size_t factor_count, mpfr_prec_t precision,
                             const Rational& tolerance) {
  const auto factors = vieta_factors(q, factor_count, precision);
  const unsigned long p = semi_order(q.den()).p;
  ProductReport report{q,     factor_count, factor_count - factor_count % p,
                       vieta_target(q, precision), {}, {}, tolerance,
                       false, true};

  report.partials.reserve(factor_count + 1);
  report.partials.push_back(factors.leading);
  for (const auto& f : factors.stream) report.partials.push_back(report.partials.back() * f.value);

  report.distances.reserve(report.partials.size());
  for (const auto& partial : report.partials) {
    report.distances.push_back(dist_upper(partial, report.target));
    if (!partial.width_leq(tolerance)) report.precision_ok = false;
  }
  report.final_within_tolerance =
      dist_leq(report.partials[report.aligned_index], report.target, tolerance);
  return report;
}

namespace {

// Exact surd text for 2cos(a*pi) at the handful of angles the worked products
// use; falls back to the symbolic cosine.
std::string cos2_surd(const Rational& a) {
  const Rational r = a.mod2();
  if (r == Rational(1, 3)) return "1";
  if (r == Rational(2, 3)) return "-1";
  if (r == Rational(1, 5)) return "\\frac{\\sqrt{5}+1}{2}";
  if (r == Rational(2, 5)) return "\\frac{\\sqrt{5}-1}{2}";
  if (r == Rational(3, 5)) return "-\\frac{\\sqrt{5}-1}{2}";
  if (r == Rational(4, 5)) return "-\\frac{\\sqrt{5}+1}{2}";
  return "2\\cos\\frac{" + r.num().get_str() + "\\pi}{" + r.den().get_str() + "}";
}

std::string magnitude_surd(const Rational& a) {
  std::string s = cos2_surd(a);
  if (s.rfind("2\\cos", 0) == 0) return "\\left|" + s + "\\right|";
  if (!s.empty() && s[0] == '-') return s.substr(1);
  return s;
}

}  // namespace

std::string render_latex(const Rational& q, std::size_t factor_count) {
  require_vieta_domain(q);
  const unsigned long p = semi_order(q.den()).p;
  const auto eps = block_signs(q, p);

  std::string target;
  if (q == Rational(1, 3)) {
    target = "\\frac{2\\sqrt{3}}{\\pi}";
  } else if (q == Rational(1, 5)) {
    target = "\\frac{(\\sqrt{5}-1)\\,5\\sqrt{2}}{\\pi\\sqrt{5-\\sqrt{5}}}";
  } else {
    const Rational two_q = q.mul_pow2(1).mod2();
    const Rational one_minus_4q = Rational(1) - q.mul_pow2(2);
    const Int abs_num = one_minus_4q.num() < 0 ? Int(-one_minus_4q.num()) : one_minus_4q.num();
    target = "\\frac{2\\cos\\frac{" + two_q.num().get_str() + "\\pi}{" + two_q.den().get_str() +
             "}}{\\left(" + (one_minus_4q.sign() < 0 ? "-" : "") +
             "\\frac{" + abs_num.get_str() + "}{" +
             one_minus_4q.den().get_str() + "}\\right)\\pi\\sin\\frac{" + q.num().get_str() +
             "\\pi}{" + q.den().get_str() + "}}";
  }

  // Nested radical strings: s_0 = sqrt(2), s_k = sqrt(2 +- s_{k-1}).
  std::string radical = "\\sqrt{2}";
  std::string leading = "\\frac{" + cos2_surd(q) + "+\\sqrt{2}}{2}";

  std::string out = target + " = " + leading;
  for (std::size_t idx = 1; idx <= factor_count; ++idx) {
    const std::size_t j = (idx - 1) % p + 1;
    const Sign e = eps[p - 1 - (idx - 1) % p];
    radical = std::string("\\sqrt{2") + (e > 0 ? "+" : "-") + radical + "}";
    const Rational a = q.mul_pow2(static_cast<long>(p - j)).mod2();
    out += " \\cdot \\frac{" + magnitude_surd(a) + "+" + radical + "}{2}";
  }
  out += " \\cdots";
  return out;
}

}  // namespace radical
