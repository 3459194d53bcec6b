#pragma once

// Registry of hypergeometric identities for e^pi, e^{pi/2} and e^{pi*lambda},
// and the verifier that checks each one three ways: closed-form theorem
// value, direct (or accelerated) series value, and an exponential oracle.
//
// Parameters are exact rationals until evaluation. Series plans cancel
// equal upper/lower parameter pairs symbolically before handing a SeriesSpec to
// the series engine, which never cancels on its own.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pfq/closed_forms.hpp"
#include "pfq/rational.hpp"
#include "pfq/series.hpp"

namespace pfq {

/// coefficient * sqrt(radicand) * pi^pi_power, kept symbolic for weights
/// such as sqrt(2) and arguments such as pi^2/4.
struct ExactScalar {
  Rational coefficient{1};
  Rational radicand{1};
  int pi_power = 0;

  [[nodiscard]] double value() const {
    double v = coefficient.to_double();
    if (radicand != Rational(1)) v *= std::sqrt(radicand.to_double());
    return v * std::pow(std::numbers::pi, pi_power);
  }
  [[nodiscard]] bool is_zero() const { return coefficient == Rational(0); }
  [[nodiscard]] std::string str() const {
    std::string s = coefficient.str();
    if (radicand != Rational(1)) s += "*sqrt(" + radicand.str() + ")";
    if (pi_power == 1) s += "*pi";
    if (pi_power > 1) s += "*pi^" + std::to_string(pi_power);
    return s;
  }
};

inline ExactScalar scalar(Rational r) { return {r, Rational(1), 0}; }

struct SeriesPlanTerm {
  std::vector<ExactComplex> upper;
  std::vector<ExactComplex> lower;
  ExactScalar argument;
  ExactScalar weight;

  [[nodiscard]] SeriesSpec spec() const {
    SeriesSpec s;
    for (const auto& a : upper) s.upper.push_back(a.value());
    for (const auto& b : lower) s.lower.push_back(b.value());
    s.argument = {argument.value(), 0.0};
    return s;
  }
};

/// Removes upper/lower pairs that are exactly equal.
inline SeriesPlanTerm cancel_parameters(SeriesPlanTerm term) {
  for (auto it = term.upper.begin(); it != term.upper.end();) {
    auto match = std::find(term.lower.begin(), term.lower.end(), *it);
    if (match != term.lower.end()) {
      term.lower.erase(match);
      it = term.upper.erase(it);
    } else {
      ++it;
    }
  }
  return term;
}

namespace closed_form {
struct GaussUnit { ExactComplex a, b, c; };
struct GaussExtUnit { ExactComplex a, b, c, d; };
struct SecondGaussHalf { ExactComplex a, b; };
struct BaileyHalf { ExactComplex a, c; };
struct SecondGaussExtHalf { ExactComplex a, b, d; };
struct BaileyExtHalf { ExactComplex a, c, d; };
/// 0F0(;;x) = e^x.
struct Exponential { ExactScalar x; };
/// 0F1(;1/2;x^2/4) = cosh x.
struct HalfOrderCosh { ExactScalar x; };
/// 0F1(;3/2;x^2/4) = sinh(x)/x.
struct HalfOrderSinh { ExactScalar x; };
}  // namespace closed_form

using ClosedForm =
    std::variant<closed_form::GaussUnit, closed_form::GaussExtUnit, closed_form::SecondGaussHalf,
                 closed_form::BaileyHalf, closed_form::SecondGaussExtHalf,
                 closed_form::BaileyExtHalf, closed_form::Exponential,
                 closed_form::HalfOrderCosh, closed_form::HalfOrderSinh>;

inline Complex evaluate(const ClosedForm& form) {
  using namespace closed_form;
  struct Visitor {
    Complex operator()(const GaussUnit& f) const { return gauss_unit(f.a.value(), f.b.value(), f.c.value()); }
    Complex operator()(const GaussExtUnit& f) const {
      return gauss_ext_unit(f.a.value(), f.b.value(), f.c.value(), f.d.value());
    }
    Complex operator()(const SecondGaussHalf& f) const { return second_gauss_half(f.a.value(), f.b.value()); }
    Complex operator()(const BaileyHalf& f) const { return bailey_half(f.a.value(), f.c.value()); }
    Complex operator()(const SecondGaussExtHalf& f) const {
      return second_gauss_ext_half(f.a.value(), f.b.value(), f.d.value());
    }
    Complex operator()(const BaileyExtHalf& f) const {
      return bailey_ext_half(f.a.value(), f.c.value(), f.d.value());
    }
    Complex operator()(const Exponential& f) const { return std::exp(f.x.value()); }
    Complex operator()(const HalfOrderCosh& f) const { return std::cosh(f.x.value()); }
    Complex operator()(const HalfOrderSinh& f) const {
      const double x = f.x.value();
      return x == 0.0 ? 1.0 : std::sinh(x) / x;
    }
  };
  return std::visit(Visitor{}, form);
}

struct ClosedPlanTerm {
  ClosedForm form;
  ExactScalar weight;
};

/// coefficient * e^{pi * exponent}
struct ExpTerm {
  Rational coefficient;
  Rational exponent;
};

struct ExpectedValue {
  std::vector<ExpTerm> terms;

  /// Exponential oracle; independent of every hypergeometric route.
  [[nodiscard]] double value() const {
    double v = 0.0;
    for (const auto& t : terms) {
      v += t.coefficient.to_double() * std::exp(std::numbers::pi * t.exponent.to_double());
    }
    return v;
  }

  [[nodiscard]] Rational coefficient_of(const Rational& exponent) const {
    Rational c(0);
    for (const auto& t : terms) {
      if (t.exponent == exponent) c += t.coefficient;
    }
    return c;
  }

  [[nodiscard]] std::string str() const {
    std::string s;
    for (const auto& t : terms) {
      if (!s.empty()) s += " + ";
      s += "(" + t.coefficient.str() + ")*e^(" + t.exponent.str() + "*pi)";
    }
    return s.empty() ? "0" : s;
  }
};

enum class CaseKind { Identity, ExpectedDivergent, DocumentedOnly };

struct CaseParameters {
  std::optional<long long> n;
  std::optional<Rational> lambda;
  std::optional<Rational> d1;
  std::optional<Rational> d2;
};

struct IdentityCase {
  std::string id;
  std::string description;
  CaseParameters parameters;
  std::vector<SeriesPlanTerm> lhs_plan;
  std::vector<ClosedPlanTerm> rhs_closed_plan;
  ExpectedValue expected;
  /// The value asserted in print when it differs from what the parameters give.
  std::optional<ExpectedValue> claimed;
  /// Present when the case deviates from, or documents a defect in, the printed form.
  std::optional<std::string> erratum;
  CaseKind kind = CaseKind::Identity;
};

enum class Verdict { Pass, Fail, SkippedDivergent, SkippedDocumented };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::SkippedDivergent: return "SkippedDivergent";
    case Verdict::SkippedDocumented: return "SkippedDocumented";
  }
  return "?";
}

struct VerificationTolerances {
  double closed = 1e-12;
  double series_direct = 1e-11;  // geometric convergence (z = 1/2, 0F1, 0F0)
  double series_unit = 1e-6;     // accelerated, z = 1
};

struct VerificationReport {
  std::string id;
  std::optional<long long> n;
  std::optional<double> lambda;
  std::optional<double> closed_value;
  std::optional<double> series_value;
  double expected_value = 0.0;
  /// Closed form against the exponential oracle.
  std::optional<double> abs_residual;
  std::optional<double> rel_residual;
  /// Series against the exponential oracle, relative to max(|expected|, sum of |components|).
  std::optional<double> series_rel_residual;
  std::optional<SumStatus> series_status;
  Verdict verdict = Verdict::Fail;
  double closed_tolerance = 0.0;
  std::optional<double> series_tolerance;
  /// Residual of the closed value against the printed claim, when one differs.
  std::optional<double> claimed_value;
  std::optional<double> claimed_rel_residual;
  std::optional<std::string> erratum;
  /// Largest |Im| / max(1, |value|) seen across the closed and series values.
  double imag_residue = 0.0;
};

namespace identity_detail {

inline const ExactComplex kI = imaginary(1);
inline const ExactComplex kMinusI = imaginary(-1);
inline const ExactComplex kHalfPlusI{Rational(1, 2), Rational(1)};
inline const ExactComplex kHalfMinusI{Rational(1, 2), Rational(-1)};

inline Rational frac(std::int64_t p, std::int64_t q) { return {p, q}; }

inline SeriesPlanTerm plan(std::vector<ExactComplex> upper, std::vector<ExactComplex> lower,
                           ExactScalar argument, ExactScalar weight) {
  return cancel_parameters({std::move(upper), std::move(lower), argument, weight});
}

inline ExpectedValue exp_combination(Rational plus, Rational minus, Rational exponent) {
  return {{{plus, exponent}, {minus, -exponent}}};
}

inline void check_d(const Rational& d) {
  if (d <= Rational(0) && d.is_integer()) {
    throw PoleError("identity parameter d must avoid 0, -1, -2, ...");
  }
  if (std::abs(d.to_double()) < 1e-6) throw PoleError("identity parameter |d| must be >= 1e-6");
}

inline std::string param_label(const Rational& d1, const Rational& d2) {
  return "d1=" + d1.str() + ", d2=" + d2.str();
}

inline IdentityCase unit_theorem_case(const Rational& d1, const Rational& d2, ExpectedValue expected,
                                      Rational second_lower = Rational(5, 2)) {
  check_d(d1);
  check_d(d2);
  IdentityCase c;
  c.parameters.d1 = d1;
  c.parameters.d2 = d2;
  c.lhs_plan = {
      plan({kI, kMinusI, real(d1 + 1)}, {real(frac(3, 2)), real(d1)}, scalar(1), scalar(1)),
      plan({kHalfPlusI, kHalfMinusI, real(d2 + 1)}, {real(second_lower), real(d2)}, scalar(1),
           scalar(2)),
  };
  if (second_lower == Rational(5, 2)) {
    c.rhs_closed_plan = {
        {closed_form::GaussExtUnit{kI, kMinusI, real(frac(1, 2)), real(d1)}, scalar(1)},
        {closed_form::GaussExtUnit{kHalfPlusI, kHalfMinusI, real(frac(3, 2)), real(d2)}, scalar(2)},
    };
  }
  c.expected = std::move(expected);
  return c;
}

}  // namespace identity_detail

/// Coefficients (of e^pi, e^-pi) that the unit-argument two-series family
/// takes for parameters (d1, d2):
///   e^pi (1/(5 d1) + 15/(32 d2) + 23/80) + e^-pi (1/(5 d1) - 15/(32 d2) - 7/80).
inline ExpectedValue theorem1_coefficients(const Rational& d1, const Rational& d2) {
  using identity_detail::frac;
  const Rational a = Rational(1) / (Rational(5) * d1);
  const Rational b = Rational(15) / (Rational(32) * d2);
  return identity_detail::exp_combination(a + b + frac(23, 80), a - b - frac(7, 80), Rational(1));
}

/// Coefficients (of e^{pi/2}, e^{-pi/2}) for the half-argument family:
///   e^{pi/2} (1/(10 d1) + 3/(16 d2) + 27/40) + e^{-pi/2} (3/(10 d1) - 21/(16 d2) + 11/40).
inline ExpectedValue theorem2_coefficients(const Rational& d1, const Rational& d2) {
  using identity_detail::frac;
  const Rational inv1 = Rational(1) / d1;
  const Rational inv2 = Rational(1) / d2;
  return identity_detail::exp_combination(frac(1, 10) * inv1 + frac(3, 16) * inv2 + frac(27, 40),
                                          frac(3, 10) * inv1 - frac(21, 16) * inv2 + frac(11, 40),
                                          Rational(1, 2));
}

/// 3F2(i,-i,d1+1; 3/2,d1; 1) + 2 3F2(1/2+i,1/2-i,d2+1; 5/2,d2; 1).
inline IdentityCase theorem1(const Rational& d1, const Rational& d2) {
  auto c = identity_detail::unit_theorem_case(d1, d2, theorem1_coefficients(d1, d2));
  c.id = "thm1";
  c.description = "two contiguous 3F2 at z=1, " + identity_detail::param_label(d1, d2);
  return c;
}

/// 3F2(i,-i,d1+1; 3/2,d1; 1/2) + sqrt(2) 3F2(1/2+i,1/2-i,d2+1; 5/2,d2; 1/2).
inline IdentityCase theorem2(const Rational& d1, const Rational& d2) {
  using namespace identity_detail;
  check_d(d1);
  check_d(d2);
  const ExactScalar half = scalar(frac(1, 2));
  const ExactScalar root2{Rational(1), Rational(2), 0};
  IdentityCase c;
  c.id = "thm2";
  c.description = "two contiguous 3F2 at z=1/2, " + param_label(d1, d2);
  c.parameters.d1 = d1;
  c.parameters.d2 = d2;
  c.lhs_plan = {
      plan({kI, kMinusI, real(d1 + 1)}, {real(frac(3, 2)), real(d1)}, half, scalar(1)),
      plan({kHalfPlusI, kHalfMinusI, real(d2 + 1)}, {real(frac(5, 2)), real(d2)}, half, root2),
  };
  c.rhs_closed_plan = {
      {closed_form::SecondGaussExtHalf{kI, kMinusI, real(d1)}, scalar(1)},
      {closed_form::BaileyExtHalf{kHalfPlusI, real(frac(3, 2)), real(d2)}, root2},
  };
  c.expected = theorem2_coefficients(d1, d2);
  return c;
}

enum class CorollaryKind { Cor1, Cor2, Cor3, Cor4 };

/// All registry variants of one corollary instance, in registry order:
/// Cor1 and Cor4 give one case, Cor2 gives the corrected case and its
/// as-printed divergent companion, Cor3 gives the as-printed and corrected cases.
inline std::vector<IdentityCase> corollary_case(CorollaryKind kind, long long n) {
  using namespace identity_detail;
  if (n < 1) throw std::invalid_argument("corollary_case: n must be a positive integer");
  const auto N = static_cast<std::int64_t>(n);
  const std::string suffix = ".n" + std::to_string(n);
  std::vector<IdentityCase> out;

  switch (kind) {
    case CorollaryKind::Cor1: {
      const Rational d1 = frac(2, 5 * N - 1);
      const Rational d2 = frac(15, 2 * (8 * N - 3));
      auto c = unit_theorem_case(d1, d2, theorem1_coefficients(d1, d2));
      c.id = "cor1" + suffix;
      c.description = "n e^pi with " + param_label(d1, d2);
      c.parameters.n = n;
      out.push_back(std::move(c));
      break;
    }
    case CorollaryKind::Cor2: {
      const Rational d1 = frac(2, 5 * N - 1);
      const Rational d2 = frac(-15, 2 * (8 * N + 3));
      auto c = unit_theorem_case(d1, d2, theorem1_coefficients(d1, d2));
      c.id = "cor2" + suffix;
      c.description = "n e^-pi with " + param_label(d1, d2) + ", second lower parameter 5/2";
      c.parameters.n = n;
      c.erratum = "CorrectedParameter: second series lower parameter 5/2, not the printed 3/2";
      out.push_back(c);

      auto printed = unit_theorem_case(d1, d2, theorem1_coefficients(d1, d2), frac(3, 2));
      printed.id = "cor2" + suffix + ".printed";
      printed.description = "n e^-pi as printed (second lower parameter 3/2); series must diverge";
      printed.parameters.n = n;
      printed.kind = CaseKind::ExpectedDivergent;
      printed.erratum = "AsPrinted: lower parameter 3/2 gives convergence parameter -1/2";
      out.push_back(std::move(printed));
      break;
    }
    case CorollaryKind::Cor3: {
      const Rational d2 = frac(-5, 2);
      const ExpectedValue claim = exp_combination(Rational(N), Rational(N), Rational(1));

      const Rational printed_d1 = frac(1, 2 * (10 * N - 1));
      auto printed = unit_theorem_case(printed_d1, d2, theorem1_coefficients(printed_d1, d2));
      printed.id = "cor3" + suffix + ".printed";
      printed.description = "printed " + param_label(printed_d1, d2) +
                            ": gives (4n-3/10)(e^pi+e^-pi), not n(e^pi+e^-pi)";
      printed.parameters.n = n;
      printed.claimed = claim;
      printed.erratum =
          "AsPrinted: d1 = 1/(2(10n-1)) yields (4n-3/10)(e^pi+e^-pi); the printed claim "
          "n(e^pi+e^-pi) is not reproduced (second lower parameter taken as 5/2)";
      out.push_back(std::move(printed));

      const Rational d1 = frac(2, 10 * N - 1);
      auto corrected = unit_theorem_case(d1, d2, theorem1_coefficients(d1, d2));
      corrected.id = "cor3" + suffix + ".corrected";
      corrected.description = "n(e^pi+e^-pi) with " + param_label(d1, d2);
      corrected.parameters.n = n;
      corrected.erratum =
          "CorrectedParameter: d1 = 2/(10n-1) and second series lower parameter 5/2";
      out.push_back(std::move(corrected));
      break;
    }
    case CorollaryKind::Cor4: {
      const Rational d1 = frac(1, 7 * N - 5);
      const Rational d2 = frac(15, 24 * N - 14);
      auto c = theorem2(d1, d2);
      c.id = "cor4" + suffix;
      c.description = "n e^(pi/2) with " + param_label(d1, d2);
      c.parameters.n = n;
      out.push_back(std::move(c));
      break;
    }
  }
  return out;
}

/// e^{pi*lambda} = 2F1(i l,-i l; 1/2; 1) + 2 l 2F1(1/2+i l, 1/2-i l; 3/2; 1).
inline IdentityCase lambda_case(const Rational& lambda) {
  using namespace identity_detail;
  IdentityCase c;
  c.id = "eq4.6.lambda=" + lambda.str();
  c.description = "e^(pi*lambda), lambda=" + lambda.str();
  c.parameters.lambda = lambda;
  const ExactComplex il = imaginary(lambda);
  const ExactComplex minus_il = imaginary(-lambda);
  const ExactComplex half_plus{frac(1, 2), lambda};
  const ExactComplex half_minus{frac(1, 2), -lambda};
  c.lhs_plan = {plan({il, minus_il}, {real(frac(1, 2))}, scalar(1), scalar(1)),
                plan({half_plus, half_minus}, {real(frac(3, 2))}, scalar(1), scalar(2 * lambda))};
  c.rhs_closed_plan = {
      {closed_form::GaussUnit{il, minus_il, real(frac(1, 2))}, scalar(1)},
      {closed_form::GaussUnit{half_plus, half_minus, real(frac(3, 2))}, scalar(2 * lambda)}};
  c.expected = {{{Rational(1), lambda}}};
  return c;
}

/// Weighted sum of the closed plan.
inline Complex evaluate_closed(const IdentityCase& c) {
  Complex v(0.0, 0.0);
  for (const auto& t : c.rhs_closed_plan) {
    if (t.weight.is_zero()) continue;
    v += t.weight.value() * evaluate(t.form);
  }
  return v;
}

/// e^pi = 2F1(i,-i;1/2;1) + 2 2F1(1/2+i,1/2-i;3/2;1), via the Gauss theorem.
inline double gelfond() {
  const Complex i(0.0, 1.0);
  return (gauss_unit(i, -i, 0.5) + 2.0 * gauss_unit(0.5 + i, 0.5 - i, 1.5)).real();
}

/// e^{pi*lambda} for real |lambda| <= 15.
inline double gelfond_lambda(double lambda) {
  if (!(std::abs(lambda) <= 15.0)) throw RangeError("gelfond_lambda: |lambda| must be <= 15");
  const Complex il(0.0, lambda);
  return (gauss_unit(il, -il, 0.5) + 2.0 * lambda * gauss_unit(0.5 + il, 0.5 - il, 1.5)).real();
}

/// (e^{pi/2}, e^{-pi/2}) = S +- sqrt(2) B with S from the second Gauss
/// theorem and B from Bailey's theorem, both at z = 1/2.
inline std::pair<double, double> sqrt_gelfond_pair() {
  const Complex i(0.0, 1.0);
  const double s = second_gauss_half(i, -i).real();
  const double b = std::numbers::sqrt2 * bailey_half(0.5 + i, 1.5).real();
  return {s + b, s - b};
}

inline const std::vector<std::pair<Rational, Rational>>& theorem1_grid() {
  static const std::vector<std::pair<Rational, Rational>> grid = {
      {Rational(1, 2), Rational(3, 2)}, {Rational(2), Rational(3, 2)}, {Rational(1), Rational(1)},
      {Rational(3), Rational(-5, 2)},   {Rational(2, 5), Rational(9, 2)}};
  return grid;
}

inline const std::vector<std::pair<Rational, Rational>>& theorem2_grid() {
  static const std::vector<std::pair<Rational, Rational>> grid = {
      {Rational(1, 2), Rational(3, 2)}, {Rational(1), Rational(1)}, {Rational(2), Rational(3)},
      {Rational(3, 10), Rational(5)},   {Rational(7, 4), Rational(2, 3)}};
  return grid;
}

/// Every identity in fixed order. Ids are unique.
inline std::vector<IdentityCase> registry() {
  using namespace identity_detail;
  std::vector<IdentityCase> out;
  const ExactScalar pi{Rational(1), Rational(1), 1};
  const ExpectedValue e_pi{{{Rational(1), Rational(1)}}};

  {
    IdentityCase c;
    c.id = "eq1.1";
    c.description = "e^pi = 2F1(i,-i;1/2;1) + 2 2F1(1/2+i,1/2-i;3/2;1)";
    c.lhs_plan = {plan({kI, kMinusI}, {real(frac(1, 2))}, scalar(1), scalar(1)),
                  plan({kHalfPlusI, kHalfMinusI}, {real(frac(3, 2))}, scalar(1), scalar(2))};
    c.rhs_closed_plan = {
        {closed_form::GaussUnit{kI, kMinusI, real(frac(1, 2))}, scalar(1)},
        {closed_form::GaussUnit{kHalfPlusI, kHalfMinusI, real(frac(3, 2))}, scalar(2)}};
    c.expected = e_pi;
    out.push_back(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "0f1-bessel";
    c.description = "e^pi = 0F1(;1/2;pi^2/4) + pi 0F1(;3/2;pi^2/4)";
    const ExactScalar quarter_pi_sq{Rational(1, 4), Rational(1), 2};
    c.lhs_plan = {plan({}, {real(frac(1, 2))}, quarter_pi_sq, scalar(1)),
                  plan({}, {real(frac(3, 2))}, quarter_pi_sq, pi)};
    c.rhs_closed_plan = {{closed_form::HalfOrderCosh{pi}, scalar(1)},
                         {closed_form::HalfOrderSinh{pi}, pi}};
    c.expected = e_pi;
    out.push_back(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "sphere-volume";
    c.description = "e^pi = sum of unit-sphere volumes V_2n = pi^n/n!";
    c.lhs_plan = {plan({}, {}, pi, scalar(1))};
    c.rhs_closed_plan = {{closed_form::Exponential{pi}, scalar(1)}};
    c.expected = e_pi;
    out.push_back(std::move(c));
  }

  int index = 1;
  for (const auto& [d1, d2] : theorem1_grid()) {
    auto c = theorem1(d1, d2);
    c.id = "thm1." + std::to_string(index++);
    out.push_back(std::move(c));
  }
  for (auto kind : {CorollaryKind::Cor1, CorollaryKind::Cor2, CorollaryKind::Cor3, CorollaryKind::Cor4}) {
    for (long long n = 1; n <= 3; ++n) {
      for (auto& c : corollary_case(kind, n)) out.push_back(std::move(c));
    }
  }

  {
    const ExactScalar half = scalar(frac(1, 2));
    for (int sign : {1, -1}) {
      IdentityCase c;
      c.id = sign > 0 ? "eq4.1a" : "eq4.1b";
      c.description = sign > 0 ? "e^(pi/2) = 2F1(i,-i;1/2;1/2) + sqrt2 2F1(1/2+i,1/2-i;3/2;1/2)"
                               : "e^(-pi/2) = 2F1(i,-i;1/2;1/2) - sqrt2 2F1(1/2+i,1/2-i;3/2;1/2)";
      const ExactScalar root2{Rational(sign), Rational(2), 0};
      c.lhs_plan = {plan({kI, kMinusI}, {real(frac(1, 2))}, half, scalar(1)),
                    plan({kHalfPlusI, kHalfMinusI}, {real(frac(3, 2))}, half, root2)};
      c.rhs_closed_plan = {{closed_form::SecondGaussHalf{kI, kMinusI}, scalar(1)},
                           {closed_form::BaileyHalf{kHalfPlusI, real(frac(3, 2))}, root2}};
      c.expected = {{{Rational(1), Rational(sign, 2)}}};
      out.push_back(std::move(c));
    }
  }

  index = 1;
  for (const auto& [d1, d2] : theorem2_grid()) {
    auto c = theorem2(d1, d2);
    c.id = "thm2." + std::to_string(index++);
    out.push_back(std::move(c));
  }

  for (const Rational& lambda : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
    out.push_back(lambda_case(lambda));
  }

  for (int sign : {1, -1}) {
    IdentityCase c;
    c.id = sign > 0 ? "eq4.7.plus" : "eq4.7.minus";
    c.description = std::string("e^(") + (sign > 0 ? "" : "-") +
                    "pi/2) = 2F1(i/2,-i/2;1/2;1) " + (sign > 0 ? "+" : "-") +
                    " 2F1(1/2+i/2,1/2-i/2;3/2;1)";
    const ExactComplex a = imaginary(frac(1, 2));
    const ExactComplex b = imaginary(frac(-1, 2));
    const ExactComplex p{frac(1, 2), frac(1, 2)};
    const ExactComplex m{frac(1, 2), frac(-1, 2)};
    c.lhs_plan = {plan({a, b}, {real(frac(1, 2))}, scalar(1), scalar(1)),
                  plan({p, m}, {real(frac(3, 2))}, scalar(1), scalar(sign))};
    c.rhs_closed_plan = {{closed_form::GaussUnit{a, b, real(frac(1, 2))}, scalar(1)},
                         {closed_form::GaussUnit{p, m, real(frac(3, 2))}, scalar(sign)}};
    c.expected = {{{Rational(1), Rational(sign, 2)}}};
    out.push_back(std::move(c));
  }

  {
    IdentityCase c;
    c.id = "doc.mobius-product";
    c.description = "e^pi = (prod_k k^(-mu(k)/k))^sigma, sigma = sqrt(6 Li2(1)); not evaluated";
    c.expected = e_pi;
    c.kind = CaseKind::DocumentedOnly;
    out.push_back(std::move(c));
  }
  {
    IdentityCase c;
    c.id = "doc.leibniz";
    c.description = "e^pi = (sum (-1)^k/k!)^(-4s), s = sum (-1)^k/(2k+1); not evaluated";
    c.expected = e_pi;
    c.kind = CaseKind::DocumentedOnly;
    out.push_back(std::move(c));
  }
  return out;
}

namespace identity_detail {

inline double relative(double value, double reference) {
  const double err = std::abs(value - reference);
  return reference == 0.0 ? err : err / std::abs(reference);
}

inline double imag_residue(Complex v) { return std::abs(v.imag()) / std::max(1.0, std::abs(v)); }

inline int status_rank(SumStatus s) {
  switch (s) {
    case SumStatus::Truncated: return 0;
    case SumStatus::Converged: return 1;
    case SumStatus::MaxTermsExceeded: return 2;
    case SumStatus::Divergent: return 3;
  }
  return 3;
}

}  // namespace identity_detail

/// Evaluates one case. Failures are verdicts; no exceptions escape for
/// cases built by this module's constructors.
inline VerificationReport verify(const IdentityCase& c, const SumPolicy& policy = {},
                                 const VerificationTolerances& tol = {}) {
  using namespace identity_detail;
  constexpr double kRealnessTolerance = 1e-12;
  VerificationReport r;
  r.id = c.id;
  r.n = c.parameters.n;
  if (c.parameters.lambda) r.lambda = c.parameters.lambda->to_double();
  r.expected_value = c.expected.value();
  r.closed_tolerance = tol.closed;
  r.erratum = c.erratum;

  if (c.kind == CaseKind::DocumentedOnly) {
    r.verdict = Verdict::SkippedDocumented;
    return r;
  }

  bool ok = true;
  if (!c.rhs_closed_plan.empty()) {
    try {
      const Complex closed = evaluate_closed(c);
      r.imag_residue = std::max(r.imag_residue, imag_residue(closed));
      r.closed_value = closed.real();
      r.abs_residual = std::abs(closed.real() - r.expected_value);
      r.rel_residual = relative(closed.real(), r.expected_value);
      ok = ok && *r.rel_residual <= tol.closed;
      if (c.claimed) {
        r.claimed_value = c.claimed->value();
        r.claimed_rel_residual = relative(closed.real(), *r.claimed_value);
      }
    } catch (const std::exception&) {
      ok = false;
    }
  }

  if (!c.lhs_plan.empty()) {
    Complex total(0.0, 0.0);
    double magnitude = 0.0;
    SumStatus combined = SumStatus::Truncated;
    bool any_unit = false;
    try {
      for (const auto& term : c.lhs_plan) {
        const SeriesSpec spec = term.spec();
        SumPolicy p = policy;
        const bool unit = spec.upper.size() == spec.lower.size() + 1 &&
                          series_detail::on_unit_circle(spec.argument);
        if (unit) {
          any_unit = true;
          p.tolerance = std::max(p.tolerance, tol.series_unit);
        }
        const SumResult result = sum_pfq(spec, p);
        if (status_rank(result.status) > status_rank(combined)) combined = result.status;
        if (result.status != SumStatus::Divergent) {
          r.imag_residue = std::max(r.imag_residue, imag_residue(result.value));
          total += term.weight.value() * result.value;
          magnitude += std::abs(term.weight.value() * result.value);
        }
      }
    } catch (const std::exception&) {
      combined = SumStatus::MaxTermsExceeded;
      ok = false;
    }
    r.series_status = combined;
    r.series_tolerance = any_unit ? tol.series_unit : tol.series_direct;
    if (combined != SumStatus::Divergent) {
      r.series_value = total.real();
      // Scaled by the larger of |expected| and the summed component sizes:
      // e^-pi comes out of components near cosh(pi) that cancel.
      r.series_rel_residual = std::abs(total.real() - r.expected_value) /
                              std::max({std::abs(r.expected_value), magnitude,
                                        std::numeric_limits<double>::min()});
      r.imag_residue = std::max(r.imag_residue, imag_residue(total));
    }
  }
  ok = ok && r.imag_residue <= kRealnessTolerance;

  if (c.kind == CaseKind::ExpectedDivergent) {
    r.verdict = r.series_status == SumStatus::Divergent ? Verdict::Pass : Verdict::Fail;
    return r;
  }
  if (r.series_status == SumStatus::Divergent) {
    r.verdict = ok && r.closed_value ? Verdict::SkippedDivergent : Verdict::Fail;
    return r;
  }
  if (r.series_rel_residual) ok = ok && *r.series_rel_residual <= *r.series_tolerance;
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return r;
}

}  // namespace pfq
