#include "radical/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <string>

#include "radical/angle.hpp"
#include "radical/codec.hpp"
#include "radical/limit_theory.hpp"
#include "radical/modular.hpp"
#include "radical/selfcheck.hpp"
#include "radical/tower.hpp"
#include "radical/vieta.hpp"

namespace radical::cli {

namespace {

using nlohmann::json;

constexpr long kPrecMin = 64;
constexpr long kPrecMax = 65536;

enum class Format { Plain, Json, Latex };

struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& text) {
  if (text == "plain") return Format::Plain;
  if (text == "json") return Format::Json;
  if (text == "latex") return Format::Latex;
  throw CLI::ValidationError("--format", "expected plain, json, or latex");
}

long default_precision() {
  const char* env = std::getenv("RADICAL_FORGE_PREC");
  if (env == nullptr || *env == '\0') return 256;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < kPrecMin || v > kPrecMax)
    throw std::invalid_argument("RADICAL_FORGE_PREC must be an integer in [64, 65536]");
  return v;
}

json interval_json(const DyadicInterval& x, std::size_t max_digits = 24) {
  const auto d = x.display(max_digits);
  return json{{"mid", d.midpoint},
              {"radius", d.radius},
              {"guaranteed_digits", d.guaranteed_digits},
              {"exact", d.exact}};
}

const char* kind_name(WordKind k) {
  switch (k) {
    case WordKind::Finite:
      return "finite";
    case WordKind::TotallyPeriodic:
      return "totally-periodic";
    case WordKind::EventuallyPeriodic:
      return "eventually-periodic";
  }
  return "?";
}

Rational parse_q(const std::string& text) { return Rational::from_string(text); }

int cmd_classify(const std::string& q_text, Format format, std::ostream& out) {
  const Rational q = parse_q(q_text);
  const SignWord w = encode_rational(q);
  json j{{"command", "classify"}, {"q", q.str()}, {"kind", kind_name(w.kind())},
         {"word", render_word(w)}};

  if (w.kind() == WordKind::Finite) {
    // nesting depth counts every root symbol of the terminating radical
    j["depth"] = w.preamble.size() + 1;
    j["beta"] = q.num().get_str();
  } else {
    const auto so = semi_order(q.split_denominator().odd);
    j["preamble_length"] = w.preamble.size();
    j["period"] = w.block.size();
    j["semi_order_sign"] = so.sign;
  }

  if (format == Format::Json) {
    out << j.dump(2) << "\n";
  } else if (format == Format::Plain) {
    out << "q = " << j["q"].get<std::string>() << "\n";
    out << "kind: " << j["kind"].get<std::string>() << "\n";
    out << "word: " << j["word"].get<std::string>() << "\n";
    if (w.kind() == WordKind::Finite) {
      out << "depth: " << j["depth"].get<std::size_t>() << "\n";
      out << "beta: " << j["beta"].get<std::string>() << "\n";
    } else {
      out << "preamble length: " << j["preamble_length"].get<std::size_t>() << "\n";
      out << "minimal period: " << j["period"].get<std::size_t>() << "\n";
      out << "semi-order sign: " << j["semi_order_sign"].get<int>() << "\n";
    }
  } else {
    throw std::domain_error("classify has no latex rendering");
  }
  return 0;
}

int cmd_encode(const std::string& q_text, Format format, std::ostream& out) {
  const Rational q = parse_q(q_text);
  const SignWord w = encode_rational(q);
  if (format == Format::Json) {
    out << json{{"command", "encode"},
                {"q", q.str()},
                {"word", render_word(w)},
                {"kind", kind_name(w.kind())}}
               .dump(2)
        << "\n";
  } else if (format == Format::Plain) {
    out << render_word(w) << "\n";
  } else {
    throw std::domain_error("encode has no latex rendering");
  }
  return 0;
}

int cmd_decode(const std::string& word_text, Format format, std::ostream& out) {
  const SignWord w = parse_word(word_text);
  const Rational q = decode(w);
  if (format == Format::Json) {
    out << json{{"command", "decode"},
                {"word", render_word(w)},
                {"q", q.str()},
                {"kind", kind_name(w.kind())}}
               .dump(2)
        << "\n";
  } else if (format == Format::Plain) {
    out << q.str() << "\n";
  } else {
    throw std::domain_error("decode has no latex rendering");
  }
  return 0;
}

int cmd_eval(const std::string& word_text, long depth_flag, long prec, Format format,
             std::ostream& out) {
  const SignWord w = parse_word(word_text);
  std::size_t depth = w.preamble.size() + w.block.size();
  if (depth_flag >= 0) depth = static_cast<std::size_t>(depth_flag);

  std::vector<Sign> signs;
  if (w.kind() == WordKind::Finite) {
    if (depth > w.preamble.size())
      throw std::domain_error("eval: finite word has only " +
                              std::to_string(w.preamble.size()) + " signs");
    signs.assign(w.preamble.begin(), w.preamble.begin() + static_cast<long>(depth));
  } else {
    signs = spelled_prefix(w, depth);
  }
  const auto value = eval_tower({signs, Rational(0)}, static_cast<mpfr_prec_t>(prec));

  json j{{"command", "eval"},       {"word", render_word(w)}, {"depth", depth},
         {"precision", prec},       {"value", interval_json(value)}};
  if (w.kind() == WordKind::TotallyPeriodic) {
    const auto span = sigma_table(w.block).span();
    const Rational a = iterate_angle(w, depth / span, depth % span);
    j["angle_quarters"] = a.str();  // r_depth = 2cos(a*pi/4) exactly
  }

  if (format == Format::Json) {
    out << j.dump(2) << "\n";
  } else if (format == Format::Plain) {
    out << "r_" << depth << " = " << value.str(24) << "\n";
    if (j.contains("angle_quarters"))
      out << "exactly 2cos(" << j["angle_quarters"].get<std::string>() << " * pi/4)\n";
  } else {
    throw std::domain_error("eval has no latex rendering");
  }
  return 0;
}

int cmd_limits(const std::string& word_text, long prec, Format format, std::ostream& out) {
  const SignWord w = parse_word(word_text);
  if (w.kind() != WordKind::TotallyPeriodic)
    throw std::domain_error("limits: expected a totally periodic word (a bare block like \"-+-\")");
  const auto set = limit_points(w.block);
  const auto table = sigma_table(w.block);

  const auto precision = static_cast<mpfr_prec_t>(prec);
  const auto pi = DyadicInterval::pi(precision);
  const auto sin_q = sin_pi(set.q, precision);

  json points = json::array();
  for (std::size_t j = 0; j < set.coefficients.size(); ++j) {
    const auto value = DyadicInterval::from_rational(set.coefficients[j], precision) * pi * sin_q;
    json entry{{"j", j}, {"coef", set.coefficients[j].str()}};
    entry["value"] = interval_json(value);
    points.push_back(entry);
  }
  json j{{"command", "limits"},    {"q", set.q.str()},      {"block", render_signs(w.block)},
         {"delta_p", table.delta_p}, {"limit_points", points}};

  if (format == Format::Json) {
    out << j.dump(2) << "\n";
  } else if (format == Format::Plain) {
    out << "q = " << set.q.str() << ", block " << render_signs(w.block)
        << ", delta_p = " << table.delta_p << "\n";
    for (const auto& entry : points)
      out << "  j = " << entry["j"].get<std::size_t>() << ": " << entry["coef"].get<std::string>()
          << " * pi * sin(q pi) = " << entry["value"]["mid"].get<std::string>() << " +/- "
          << entry["value"]["radius"].get<std::string>() << "\n";
  } else {
    throw std::domain_error("limits has no latex rendering");
  }
  return 0;
}

int cmd_vieta(const std::string& q_text, long factors, long prec, Format format,
              std::ostream& out) {
  const Rational q = parse_q(q_text);
  if (format == Format::Latex) {
    out << render_latex(q, static_cast<std::size_t>(factors)) << "\n";
    return 0;
  }
  const auto report =
      verify_product(q, static_cast<std::size_t>(factors), static_cast<mpfr_prec_t>(prec));

  if (format == Format::Json) {
    json j{{"command", "vieta"},
           {"q", q.str()},
           {"factors", report.factor_count},
           {"block_aligned_index", report.aligned_index},
           {"precision", prec},
           {"target", interval_json(report.target)},
           {"leading", interval_json(report.partials.front())},
           {"final_partial", interval_json(report.partials[report.aligned_index])},
           {"final_distance_upper", report.distances[report.aligned_index]},
           {"tolerance", report.tolerance.str()},
           {"within_tolerance", report.final_within_tolerance},
           {"precision_ok", report.precision_ok}};
    out << j.dump(2) << "\n";
  } else {
    out << "target        = " << report.target.str(24) << "\n";
    out << "leading       = " << report.partials.front().str(24) << "\n";
    out << "partial[" << report.aligned_index
        << "] = " << report.partials[report.aligned_index].str(24) << "\n";
    out << "|partial - target| <= " << report.distances[report.aligned_index] << "\n";
  }
  if (!report.precision_ok)
    throw PrecisionExhausted("vieta: partial-product widths exceed the requested tolerance; "
                             "raise --prec");
  return 0;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  std::vector<selfcheck::SuiteResult> results;
  if (suite == "all") {
    for (const auto& name : selfcheck::suite_names()) results.push_back(selfcheck::run_suite(name));
  } else {
    results.push_back(selfcheck::run_suite(suite));
  }

  bool all_passed = true;
  json suites = json::array();
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    suites.push_back(json{{"name", r.name},
                          {"passed", r.passed},
                          {"cases", r.cases},
                          {"max_error", r.max_error},
                          {"detail", r.detail}});
  }
  out << json{{"command", "verify"}, {"suite", suite}, {"passed", all_passed},
              {"suites", suites}}
             .dump(2)
      << "\n";
  return all_passed ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact and rigorously-bounded arithmetic on periodic continued radicals of 2"};
  app.require_subcommand(1);

  std::string value;
  std::string format_text = "plain";
  long prec = 0;
  long depth = -1;
  long factors = 8;

  const auto add_common = [&](CLI::App* cmd, bool takes_prec) {
    cmd->add_option("--format", format_text, "output format: plain, json, or latex")
        ->capture_default_str();
    if (takes_prec)
      cmd->add_option("--prec", prec, "working precision in bits")
          ->check(CLI::Range(kPrecMin, kPrecMax));
  };

  auto* classify = app.add_subcommand("classify", "kind, period, and preamble of 2cos(q pi)");
  classify->add_option("q", value, "rational in (0, 1/2), e.g. 21/136")->required();
  add_common(classify, false);

  auto* encode = app.add_subcommand("encode", "sign word of 2cos(q pi)");
  encode->add_option("q", value, "rational in (0, 1/2)")->required();
  add_common(encode, false);

  auto* decode = app.add_subcommand("decode", "exact q from a sign word");
  decode->add_option("word", value, "sign word, e.g. \"+--+|-+++\" or \"-+-\"")->required();
  add_common(decode, false);

  auto* eval = app.add_subcommand("eval", "rigorous enclosure of the depth-n radical");
  eval->add_option("word", value, "sign word")->required();
  eval->add_option("--depth", depth, "number of signs to evaluate")->check(CLI::NonNegativeNumber);
  add_common(eval, true);

  auto* limits = app.add_subcommand("limits", "limit points of u_n = 2^n (r_inf - r_n)");
  limits->add_option("word", value, "totally periodic word, e.g. \"-+-\"")->required();
  add_common(limits, true);

  auto* vieta = app.add_subcommand("vieta", "generalized Vieta product for q");
  vieta->add_option("q", value, "rational in (0, 1/2) with odd denominator")->required();
  vieta->add_option("--factors", factors, "stream factor count")->check(CLI::NonNegativeNumber);
  add_common(vieta, true);

  auto* verify = app.add_subcommand("verify",
                                    "run a named self-check suite "
                                    "(roundtrip, theorem3, limits, vieta, all)");
  verify->add_option("suite", value, "suite name")->required();
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (prec == 0) prec = default_precision();
    const Format format = parse_format(format_text);
    if (classify->parsed()) return cmd_classify(value, format, out);
    if (encode->parsed()) return cmd_encode(value, format, out);
    if (decode->parsed()) return cmd_decode(value, format, out);
    if (eval->parsed()) return cmd_eval(value, depth, prec, format, out);
    if (limits->parsed()) return cmd_limits(value, prec, format, out);
    if (vieta->parsed()) return cmd_vieta(value, factors, prec, format, out);
    if (verify->parsed()) return cmd_verify(value, out);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace radical::cli
