#pragma once

// Command-line surface: `eval`, `verify`, `constants`, `heegner`.
//
// Exit codes: 0 when every verdict passes, 1 when any fails, 2 on usage
// or parse errors. JSON and CSV output are stable (fixed field order,
// 17 significant digits); the text format is for people.

#include <fnmatch.h>

#include <CLI11.hpp>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pfq/heegner.hpp"
#include "pfq/identities.hpp"
#include "pfq/series.hpp"

namespace pfq::cli {

// ---------------------------------------------------------------------------
// Parsing

namespace parse_detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  [[nodiscard]] bool done() const { return pos >= text.size(); }
  [[nodiscard]] char peek() const { return done() ? '\0' : text[pos]; }
};

inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

/// Unsigned REAL or RATIONAL at the cursor; nullopt (cursor untouched) if
/// no digits start here.
inline std::optional<double> unsigned_number(Cursor& c) {
  const std::size_t start = c.pos;
  std::size_t p = c.pos;
  while (p < c.text.size() && is_digit(c.text[p])) ++p;
  const std::size_t int_end = p;
  bool fractional = false;
  if (p < c.text.size() && c.text[p] == '.') {
    fractional = true;
    ++p;
    while (p < c.text.size() && is_digit(c.text[p])) ++p;
  }
  if (p == start || (fractional && p == start + 1)) return std::nullopt;
  if (p < c.text.size() && (c.text[p] == 'e' || c.text[p] == 'E')) {
    std::size_t q = p + 1;
    if (q < c.text.size() && (c.text[q] == '+' || c.text[q] == '-')) ++q;
    if (q < c.text.size() && is_digit(c.text[q])) {
      fractional = true;
      p = q;
      while (p < c.text.size() && is_digit(c.text[p])) ++p;
    }
  }
  if (!fractional && int_end == p && p < c.text.size() && c.text[p] == '/') {
    std::size_t q = p + 1;
    while (q < c.text.size() && is_digit(c.text[q])) ++q;
    if (q == p + 1) throw ParseError("expected denominator digits after '/'", p + 1);
    const std::string num(c.text.substr(start, int_end - start));
    const std::string den(c.text.substr(p + 1, q - p - 1));
    const long long d = std::stoll(den);
    if (d == 0) throw ParseError("zero denominator", p + 1);
    c.pos = q;
    return Rational(std::stoll(num), d).to_double();
  }
  c.pos = p;
  return std::strtod(std::string(c.text.substr(start, p - start)).c_str(), nullptr);
}

inline double sign_at(Cursor& c) {
  if (c.peek() == '+') {
    ++c.pos;
    return 1.0;
  }
  if (c.peek() == '-') {
    ++c.pos;
    return -1.0;
  }
  return 1.0;
}

}  // namespace parse_detail

/// REAL | RATIONAL | COMPLEX with COMPLEX = "<r>[+|-]<r>i"; "i" alone is
/// 0+1i and a sign binds to the imaginary part ("-15/22i" = -(15/22) i).
/// No whitespace. Throws ParseError carrying the offending position.
inline Complex parse_complex(std::string_view text) {
  using namespace parse_detail;
  Cursor c{text, 0};
  if (text.empty()) throw ParseError("empty number", 0);

  const double first_sign = sign_at(c);
  const std::size_t first_pos = c.pos;
  const std::optional<double> first = unsigned_number(c);
  if (c.peek() == 'i') {
    ++c.pos;
    if (!c.done()) throw ParseError("unexpected character after 'i'", c.pos);
    return {0.0, first_sign * first.value_or(1.0)};
  }
  if (!first) throw ParseError("expected a number", first_pos);
  if (c.done()) return {first_sign * *first, 0.0};

  if (c.peek() != '+' && c.peek() != '-') throw ParseError("unexpected character", c.pos);
  const double second_sign = sign_at(c);
  const std::size_t second_pos = c.pos;
  const std::optional<double> second = unsigned_number(c);
  if (c.peek() != 'i') {
    throw ParseError(second ? "expected 'i' after imaginary part" : "expected a number",
                     second ? c.pos : second_pos);
  }
  ++c.pos;
  if (!c.done()) throw ParseError("unexpected character after 'i'", c.pos);
  return {first_sign * *first, second_sign * second.value_or(1.0)};
}

/// Real scalar: REAL, RATIONAL, or sqrt(REAL|RATIONAL).
inline double parse_real(std::string_view text) {
  constexpr std::string_view kSqrt = "sqrt(";
  if (text.starts_with(kSqrt)) {
    if (!text.ends_with(")")) throw ParseError("missing ')'", text.size());
    const Complex inner = parse_complex(text.substr(kSqrt.size(), text.size() - kSqrt.size() - 1));
    if (inner.imag() != 0.0 || inner.real() < 0.0) {
      throw ParseError("sqrt() needs a non-negative real", kSqrt.size());
    }
    return std::sqrt(inner.real());
  }
  const Complex v = parse_complex(text);
  if (v.imag() != 0.0) throw ParseError("expected a real number", 0);
  return v.real();
}

inline std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      out.push_back(parse_complex(item));
    } catch (const ParseError& e) {
      throw ParseError("bad list item '" + std::string(item) + "'", start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

enum class Format { Text, Json, Csv };

namespace format_detail {

inline std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string number(const std::optional<double>& v) { return v ? number(*v) : "null"; }

inline std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string csv_number(const std::optional<double>& v) {
  return v && std::isfinite(*v) ? number(*v) : "";
}

}  // namespace format_detail

inline constexpr std::string_view kReportFields[] = {
    "id", "n", "lambda", "closed_value", "series_value", "expected_value",
    "abs_residual", "rel_residual", "series_status", "verdict"};

inline std::string report_json(const VerificationReport& r) {
  using namespace format_detail;
  std::ostringstream os;
  os << "{\"id\":" << json_string(r.id)
     << ",\"n\":" << (r.n ? std::to_string(*r.n) : "null")
     << ",\"lambda\":" << number(r.lambda)
     << ",\"closed_value\":" << number(r.closed_value)
     << ",\"series_value\":" << number(r.series_value)
     << ",\"expected_value\":" << number(r.expected_value)
     << ",\"abs_residual\":" << number(r.abs_residual)
     << ",\"rel_residual\":" << number(r.rel_residual) << ",\"series_status\":"
     << (r.series_status ? json_string(to_string(*r.series_status)) : "null")
     << ",\"verdict\":" << json_string(to_string(r.verdict)) << "}";
  return os.str();
}

inline void write_reports(std::ostream& os, const std::vector<VerificationReport>& reports,
                          Format format) {
  using namespace format_detail;
  switch (format) {
    case Format::Json: {
      os << "[";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        os << (i ? ",\n " : "\n ") << report_json(reports[i]);
      }
      os << "\n]\n";
      break;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < std::size(kReportFields); ++i) {
        os << (i ? "," : "") << kReportFields[i];
      }
      os << "\r\n";
      for (const auto& r : reports) {
        os << csv_field(r.id) << ',' << (r.n ? std::to_string(*r.n) : "") << ','
           << csv_number(r.lambda) << ',' << csv_number(r.closed_value) << ','
           << csv_number(r.series_value) << ',' << csv_number(r.expected_value) << ','
           << csv_number(r.abs_residual) << ',' << csv_number(r.rel_residual) << ','
           << (r.series_status ? to_string(*r.series_status) : "") << ','
           << to_string(r.verdict) << "\r\n";
      }
      break;
    }
    case Format::Text: {
      char line[512];
      const auto residual = [](const std::optional<double>& v) {
        char buf[16];
        if (v) std::snprintf(buf, sizeof buf, "%.2e", *v);
        return v ? std::string(buf) : std::string("-");
      };
      for (const auto& r : reports) {
        std::snprintf(line, sizeof line,
                      "%-22s %-17s expected=%-22.17g closed_rel=%-9s series_rel=%-9s status=%s\n",
                      r.id.c_str(), std::string(to_string(r.verdict)).c_str(), r.expected_value,
                      residual(r.rel_residual).c_str(), residual(r.series_rel_residual).c_str(),
                      r.series_status ? std::string(to_string(*r.series_status)).c_str() : "-");
        os << line;
        if (r.erratum) os << "    note: " << *r.erratum << "\n";
        if (r.claimed_value && r.claimed_rel_residual) {
          std::snprintf(line, sizeof line,
                        "    printed claim %.17g is NOT reproduced: closed value differs by rel %.3g\n",
                        *r.claimed_value, *r.claimed_rel_residual);
          os << line;
        }
      }
      break;
    }
  }
}

struct Summary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

inline Summary summarize(const std::vector<VerificationReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::Pass: ++s.passed; break;
      case Verdict::Fail: ++s.failed; break;
      default: ++s.skipped; break;
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Commands

struct RunConfig {
  std::string command;
  Format format = Format::Text;
  std::string out_path;
  SumPolicy policy;
  VerificationTolerances tolerances;
  // eval
  std::string upper, lower, argument = "0";
  // verify filters
  std::string id_glob;
  std::optional<long long> n;
  std::optional<double> lambda;
  // constants / heegner
  std::optional<int> heegner_n;
};

namespace command_detail {

inline bool case_selected(const IdentityCase& c, const RunConfig& cfg) {
  if (!cfg.id_glob.empty() && fnmatch(cfg.id_glob.c_str(), c.id.c_str(), 0) != 0) return false;
  if (cfg.n && c.parameters.n != cfg.n) return false;
  if (cfg.lambda) {
    if (!c.parameters.lambda) return false;
    if (std::abs(c.parameters.lambda->to_double() - *cfg.lambda) > 1e-12) return false;
  }
  return true;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  for (const auto& c : registry()) {
    if (case_selected(c, cfg)) reports.push_back(verify(c, cfg.policy, cfg.tolerances));
  }
  const Summary s = summarize(reports);
  const std::string summary = "summary " + std::to_string(s.passed) + "/" +
                              std::to_string(s.failed) + "/" + std::to_string(s.skipped) +
                              " (passed/failed/skipped)\n";
  if (cfg.out_path.empty()) {
    write_reports(out, reports, cfg.format);
    (cfg.format == Format::Text ? out : err) << summary;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return 2;
    }
    write_reports(file, reports, cfg.format);
    out << summary;
  }
  if (reports.empty()) err << "warning: no registry case matches the filters\n";
  return s.failed == 0 ? 0 : 1;
}

inline int run_eval(const RunConfig& cfg, std::ostream& out) {
  SeriesSpec spec;
  spec.upper = parse_complex_list(cfg.upper);
  spec.lower = parse_complex_list(cfg.lower);
  spec.argument = parse_complex(cfg.argument);
  const SumResult r = sum_pfq(spec, cfg.policy);
  using format_detail::number;
  if (cfg.format == Format::Json) {
    out << "{\"value_re\":" << number(r.value.real()) << ",\"value_im\":" << number(r.value.imag())
        << ",\"terms_used\":" << r.terms_used << ",\"tail_estimate\":" << number(r.tail_estimate)
        << ",\"status\":" << format_detail::json_string(to_string(r.status)) << "}\n";
  } else {
    out << "value         " << number(r.value.real()) << (r.value.imag() < 0 ? " - " : " + ")
        << number(std::abs(r.value.imag())) << "i\n"
        << "terms_used    " << r.terms_used << "\n"
        << "tail_estimate " << number(r.tail_estimate) << "\n"
        << "status        " << to_string(r.status) << "\n";
  }
  return r.status == SumStatus::Converged || r.status == SumStatus::Truncated ? 0 : 1;
}

struct ConstantRow {
  std::string name;
  double closed;
  double oracle;
};

inline int run_constants(const RunConfig& cfg, std::ostream& out) {
  const auto [root, inverse_root] = sqrt_gelfond_pair();
  std::vector<ConstantRow> rows = {
      {"e^pi", gelfond(), std::exp(std::numbers::pi)},
      {"e^(pi/2)", root, std::exp(std::numbers::pi / 2)},
      {"e^(-pi/2)", inverse_root, std::exp(-std::numbers::pi / 2)},
  };
  if (cfg.lambda) {
    rows.push_back({"e^(pi*" + format_detail::number(*cfg.lambda) + ")", gelfond_lambda(*cfg.lambda),
                    std::exp(std::numbers::pi * *cfg.lambda)});
  }
  constexpr double kTolerance = 1e-11;
  bool ok = true;
  using format_detail::number;
  if (cfg.format == Format::Json) out << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const double rel = std::abs(r.closed - r.oracle) / std::abs(r.oracle);
    ok = ok && rel <= kTolerance;
    if (cfg.format == Format::Json) {
      out << (i ? ",\n " : "\n ") << "{\"name\":" << format_detail::json_string(r.name)
          << ",\"closed_value\":" << number(r.closed) << ",\"oracle_value\":" << number(r.oracle)
          << ",\"rel_residual\":" << number(rel) << "}";
    } else if (cfg.format == Format::Csv) {
      if (i == 0) out << "name,closed_value,oracle_value,rel_residual\r\n";
      out << format_detail::csv_field(r.name) << ',' << number(r.closed) << ','
          << number(r.oracle) << ',' << number(rel) << "\r\n";
    } else {
      char line[256];
      std::snprintf(line, sizeof line, "%-14s closed=%.17g  exp=%.17g  rel=%.3g\n", r.name.c_str(),
                    r.closed, r.oracle, rel);
      out << line;
    }
  }
  if (cfg.format == Format::Json) out << "\n]\n";
  return ok ? 0 : 1;
}

inline int run_heegner(const RunConfig& cfg, std::ostream& out) {
  std::vector<HeegnerRow> rows;
  if (cfg.heegner_n) {
    rows.push_back(heegner_row(*cfg.heegner_n));
  } else {
    for (int n : kHeegnerNumbers) rows.push_back(heegner_row(n));
  }
  bool ok = true;
  using format_detail::number;
  if (cfg.format == Format::Json) out << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const bool rounds = round(r.value) == DDReal::from_integer(r.reference);
    ok = ok && rounds && r.deviation > DDReal(0.0);
    const std::string value = to_string(r.value, 31);
    if (cfg.format == Format::Json) {
      out << (i ? ",\n " : "\n ") << "{\"n\":" << r.n << ",\"value\":" << format_detail::json_string(value)
          << ",\"cube_base\":" << r.cube_base << ",\"reference\":" << r.reference
          << ",\"deviation\":" << number(r.deviation.to_double())
          << ",\"error_bound\":" << number(r.error_bound) << "}";
    } else if (cfg.format == Format::Csv) {
      if (i == 0) out << "n,value,cube_base,reference,deviation,error_bound\r\n";
      out << r.n << ',' << value << ',' << r.cube_base << ',' << r.reference << ','
          << number(r.deviation.to_double()) << ',' << number(r.error_bound) << "\r\n";
    } else {
      char line[256];
      std::snprintf(line, sizeof line,
                    "n=%-3d e^(pi*sqrt(n)) = %s\n      %lld^3 + 744 = %lld  deviation = %.6g  (error bound %.2g)\n",
                    r.n, value.c_str(), static_cast<long long>(r.cube_base),
                    static_cast<long long>(r.reference), r.deviation.to_double(), r.error_bound);
      out << line;
    }
  }
  if (cfg.format == Format::Json) out << "\n]\n";
  return ok ? 0 : 1;
}

}  // namespace command_detail

/// Parses argv and runs one command. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Generalized hypergeometric series and the e^pi identity registry", "pfq"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  double tolerance = cfg.policy.tolerance;
  std::size_t max_terms = cfg.policy.max_terms;
  const auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--tol", tolerance, "Series tolerance (>= 1e-15)");
    sub->add_option("--max-terms", max_terms, "Series term limit (>= 10)");
  };

  auto* eval = app.add_subcommand("eval", "Sum pFq(upper; lower; z)");
  eval->add_option("--upper", cfg.upper, "Comma-separated upper parameters");
  eval->add_option("--lower", cfg.lower, "Comma-separated lower parameters");
  eval->add_option("--z", cfg.argument, "Argument z")->required();
  add_policy(eval);
  add_format(eval);

  auto* verify_cmd = app.add_subcommand("verify", "Verify registry identities");
  verify_cmd->add_option("--id", cfg.id_glob, "Glob over case ids");
  verify_cmd->add_option("--n", cfg.n, "Only cases with this n");
  std::string lambda_text;
  verify_cmd->add_option("--lambda", lambda_text, "Only cases with this lambda");
  verify_cmd->add_option("--out", cfg.out_path, "Write the report to PATH");
  verify_cmd->add_option("--closed-tol", cfg.tolerances.closed, "Closed-form tolerance");
  verify_cmd->add_option("--direct-tol", cfg.tolerances.series_direct, "Direct-series tolerance");
  verify_cmd->add_option("--unit-tol", cfg.tolerances.series_unit, "Unit-argument series tolerance");
  add_policy(verify_cmd);
  add_format(verify_cmd);

  auto* constants = app.add_subcommand("constants", "e^pi, e^(+-pi/2) and e^(pi*lambda)");
  constants->add_option("--lambda", lambda_text, "Also evaluate e^(pi*lambda); accepts sqrt(N)");
  add_format(constants);

  auto* heegner = app.add_subcommand("heegner", "Heegner near-integers in double-double");
  heegner->add_option("--n", cfg.heegner_n, "One of 19, 43, 67, 163")
      ->check(CLI::IsMember({19, 43, 67, 163}));
  add_format(heegner);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    cfg.policy.tolerance = tolerance;
    cfg.policy.max_terms = max_terms;
    cfg.policy.validate();
    for (double t : {cfg.tolerances.closed, cfg.tolerances.series_direct, cfg.tolerances.series_unit}) {
      if (!(t > 0.0)) throw std::invalid_argument("verification tolerances must be positive");
    }
    if (!lambda_text.empty()) cfg.lambda = parse_real(lambda_text);

    if (eval->parsed()) return command_detail::run_eval(cfg, out);
    if (verify_cmd->parsed()) return command_detail::run_verify(cfg, out, err);
    if (constants->parsed()) return command_detail::run_constants(cfg, out);
    if (heegner->parsed()) return command_detail::run_heegner(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pfq::cli
