#pragma once

// Generalized hypergeometric series pFq(upper; lower; z), summed term by term.
//
// The running term is advanced by the ratio
//   t_{n+1} / t_n = z * prod(upper_j + n) / (prod(lower_k + n) * (n + 1)),
// so no Pochhammer symbol is ever formed on its own. Series at |z| = 1
// (p = q + 1) converge algebraically and go through a Levin u-transform.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfq/complex_gamma.hpp"
#include "pfq/errors.hpp"

namespace pfq {

struct SeriesSpec {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  Complex argument{0.0, 0.0};
};

enum class SumStatus { Converged, Truncated, MaxTermsExceeded, Divergent };

inline std::string_view to_string(SumStatus s) {
  switch (s) {
    case SumStatus::Converged: return "Converged";
    case SumStatus::Truncated: return "Truncated";
    case SumStatus::MaxTermsExceeded: return "MaxTermsExceeded";
    case SumStatus::Divergent: return "Divergent";
  }
  return "?";
}

struct SumResult {
  Complex value{0.0, 0.0};
  std::size_t terms_used = 0;
  double tail_estimate = 0.0;
  SumStatus status = SumStatus::Converged;
};

enum class UnitArgumentMode { Reject, Accelerate };

struct SumPolicy {
  double tolerance = 1e-13;
  std::size_t max_terms = 1'000'000;
  UnitArgumentMode unit_argument_mode = UnitArgumentMode::Accelerate;

  void validate() const {
    if (!(tolerance >= 1e-15) || !std::isfinite(tolerance)) {
      throw std::invalid_argument("SumPolicy: tolerance must be a finite value >= 1e-15");
    }
    if (max_terms < 10) throw std::invalid_argument("SumPolicy: max_terms must be >= 10");
  }
};

struct LevinResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  std::size_t order = 0;
};

namespace series_detail {

inline constexpr double kIntegerTolerance = 1e-9;
inline constexpr std::size_t kMaxLevinOrder = 20;
inline constexpr std::size_t kMinLevinTerms = 8;
inline constexpr std::size_t kLevinWindow = 40;

using Wide = long double;
using WideComplex = std::complex<Wide>;

/// m >= 0 when x is within kIntegerTolerance of -m.
inline std::optional<long long> non_positive_integer(Complex x) {
  const double n = std::round(x.real());
  if (n <= 0.0 && std::abs(x - Complex(n, 0.0)) < kIntegerTolerance) {
    return static_cast<long long>(-n);
  }
  return std::nullopt;
}

/// Number of the last non-vanishing term when an upper parameter is a
/// non-positive integer -m (the series is then a polynomial of degree m).
inline std::optional<long long> truncation_degree(const SeriesSpec& spec) {
  std::optional<long long> degree;
  for (const Complex& a : spec.upper) {
    if (auto m = non_positive_integer(a)) degree = degree ? std::min(*degree, *m) : *m;
  }
  return degree;
}

inline void check_lower_poles(const SeriesSpec& spec, std::optional<long long> degree) {
  for (const Complex& b : spec.lower) {
    if (auto k = non_positive_integer(b)) {
      if (!degree || *degree >= *k) {
        throw PoleError("pFq: lower parameter " + std::to_string(b.real()) +
                        " is a non-positive integer reached before any truncation");
      }
    }
  }
}

inline WideComplex widen(Complex z) { return {z.real(), z.imag()}; }
inline Complex narrow(WideComplex z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// Ratio t_{n+1}/t_n in extended precision.
inline WideComplex term_ratio(const SeriesSpec& spec, std::size_t n) {
  const Wide nn = static_cast<Wide>(n);
  WideComplex num = widen(spec.argument);
  for (const Complex& a : spec.upper) num *= widen(a) + nn;
  WideComplex den(nn + 1, 0);
  for (const Complex& b : spec.lower) den *= widen(b) + nn;
  return num / den;
}

inline std::vector<WideComplex> leading_terms(const SeriesSpec& spec, std::size_t count) {
  std::vector<WideComplex> terms;
  terms.reserve(count);
  WideComplex t(1, 0);
  for (std::size_t n = 0; n < count; ++n) {
    terms.push_back(t);
    t *= term_ratio(spec, n);
  }
  return terms;
}

/// Levin u-transform of sum_{j>=0} terms[j], with the weights
/// omega_j = (beta + j) * terms[j]. `beta` is the index shift: a tail that
/// starts at series index n0 is transformed with beta = 1 + n0. Orders up to
/// kMaxLevinOrder are formed and the one whose neighbour differs least is kept.
inline std::pair<WideComplex, Wide> levin_u(std::span<const WideComplex> terms, Wide beta) {
  const std::size_t max_order = std::min(terms.size() - 1, kMaxLevinOrder);
  std::vector<WideComplex> estimates;
  estimates.reserve(max_order + 1);
  for (std::size_t k = 0; k <= max_order; ++k) {
    WideComplex partial(0, 0), num(0, 0), den(0, 0);
    Wide binom = 1;
    const Wide scale = beta + static_cast<Wide>(k);
    for (std::size_t j = 0; j <= k; ++j) {
      partial += terms[j];
      const Wide idx = beta + static_cast<Wide>(j);
      const WideComplex omega = idx * terms[j];
      Wide c = binom * std::pow(idx / scale, static_cast<Wide>(k) - 1);
      if (j % 2 == 1) c = -c;
      if (omega != WideComplex(0, 0)) {
        num += c * partial / omega;
        den += c / omega;
      }
      binom = binom * static_cast<Wide>(k - j) / static_cast<Wide>(j + 1);
    }
    estimates.push_back(den == WideComplex(0, 0)
                            ? WideComplex(std::numeric_limits<Wide>::quiet_NaN(), 0)
                            : num / den);
  }

  WideComplex best = estimates.back();
  Wide best_err = std::numeric_limits<Wide>::infinity();
  for (std::size_t k = 3; k < estimates.size(); ++k) {
    const Wide err = std::abs(estimates[k] - estimates[k - 1]);
    if (std::isfinite(err) && err < best_err) {
      best_err = err;
      best = estimates[k];
    }
  }
  if (!std::isfinite(best_err)) {
    // Too few orders for a difference: fall back to the plain partial sum.
    WideComplex s(0, 0);
    for (const auto& t : terms) s += t;
    return {s, std::abs(terms.back())};
  }
  return {best, best_err};
}

inline bool on_unit_circle(Complex z) { return std::abs(std::abs(z) - 1.0) <= 1e-15; }

inline SumResult polynomial_sum(const SeriesSpec& spec, long long degree) {
  WideComplex sum(0, 0), t(1, 0);
  for (long long n = 0; n <= degree; ++n) {
    sum += t;
    t *= term_ratio(spec, static_cast<std::size_t>(n));
  }
  return {narrow(sum), static_cast<std::size_t>(degree + 1), 0.0, SumStatus::Truncated};
}

inline void check_shape(const SeriesSpec& spec, const SumPolicy& policy) {
  policy.validate();
  const std::size_t p = spec.upper.size();
  const std::size_t q = spec.lower.size();
  const bool zero_argument = spec.argument == Complex(0.0, 0.0);
  if (!zero_argument && p > q + 1) {
    throw DivergentError("pFq: p > q + 1 diverges for every non-zero argument");
  }
}

}  // namespace series_detail

/// Convergence parameter s = Re(sum(lower) - sum(upper)); a series with
/// p = q + 1 converges at unit argument iff s > 0.
inline double convergence_parameter(const SeriesSpec& spec) {
  double s = 0.0;
  for (const Complex& b : spec.lower) s += b.real();
  for (const Complex& a : spec.upper) s -= a.real();
  return s;
}

/// Levin u-transform estimate of sum(terms). Needs at least 8 terms.
inline LevinResult levin_accelerate(std::span<const Complex> terms) {
  if (terms.size() < series_detail::kMinLevinTerms) {
    throw InsufficientTerms("levin_accelerate: at least 8 terms are required, got " +
                            std::to_string(terms.size()));
  }
  std::vector<series_detail::WideComplex> wide;
  wide.reserve(terms.size());
  for (const Complex& t : terms) wide.push_back(series_detail::widen(t));
  auto [value, err] = series_detail::levin_u(wide, 1.0L);
  return {series_detail::narrow(value), static_cast<double>(err),
          std::min(terms.size() - 1, series_detail::kMaxLevinOrder)};
}

/// pFq at unit argument (|z| = 1 with p = q + 1). Reports Divergent without
/// summing when the convergence parameter s rules convergence out: s <= 0
/// at z = 1, s <= -1 elsewhere on the circle (where s > -1 converges
/// conditionally).
inline SumResult sum_pfq_unit(const SeriesSpec& spec, const SumPolicy& policy = {}) {
  using namespace series_detail;
  check_shape(spec, policy);
  const auto degree = truncation_degree(spec);
  check_lower_poles(spec, degree);
  if (degree) return polynomial_sum(spec, *degree);

  const double threshold = std::abs(spec.argument - 1.0) <= 1e-15 ? 0.0 : -1.0;
  if (convergence_parameter(spec) <= threshold) {
    return {Complex(std::numeric_limits<double>::quiet_NaN(), 0.0), 0,
            std::numeric_limits<double>::infinity(), SumStatus::Divergent};
  }
  if (policy.unit_argument_mode == UnitArgumentMode::Reject) {
    throw DivergentError("pFq: unit argument rejected by policy");
  }

  // Sum a head directly and accelerate the tail. The head is needed when
  // large parameters make the terms grow before they decay; several split
  // points are tried and the one with the smallest error estimate is kept.
  const std::size_t available = std::max<std::size_t>(policy.max_terms, 10);
  std::size_t peak = 0;
  {
    WideComplex t(1, 0);
    Wide largest = 1;
    for (std::size_t n = 0; n < std::min<std::size_t>(available, 4096); ++n) {
      t *= term_ratio(spec, n);
      if (std::abs(t) > largest) {
        largest = std::abs(t);
        peak = n + 1;
      }
    }
  }
  std::vector<std::size_t> splits = {0, 5, 10, 20, peak + 5, peak + 10};
  const std::size_t last_split = splits.back();
  const auto terms = leading_terms(spec, std::min(available, last_split + kLevinWindow));

  SumResult best{Complex(0.0, 0.0), 0, std::numeric_limits<double>::infinity(),
                 SumStatus::MaxTermsExceeded};
  for (std::size_t n0 : splits) {
    if (n0 + kMinLevinTerms > terms.size()) continue;
    WideComplex head(0, 0);
    for (std::size_t n = 0; n < n0; ++n) head += terms[n];
    const std::size_t window = std::min(kLevinWindow, terms.size() - n0);
    auto [tail, err] =
        levin_u(std::span(terms).subspan(n0, window), static_cast<Wide>(1 + n0));
    const Complex value = narrow(head + tail);
    const double e = static_cast<double>(err);
    if (std::isfinite(value.real()) && std::isfinite(value.imag()) && e < best.tail_estimate) {
      best = {value, n0 + window, e, SumStatus::MaxTermsExceeded};
    }
  }
  if (best.tail_estimate <= policy.tolerance * std::max(1.0, std::abs(best.value))) {
    best.status = SumStatus::Converged;
  }
  return best;
}

/// pFq(upper; lower; z) for |z| < 1 (or any z when p <= q). Unit-modulus
/// arguments of a p = q + 1 series are routed to sum_pfq_unit.
inline SumResult sum_pfq(const SeriesSpec& spec, const SumPolicy& policy = {}) {
  using namespace series_detail;
  check_shape(spec, policy);
  const std::size_t p = spec.upper.size();
  const std::size_t q = spec.lower.size();
  const auto degree = truncation_degree(spec);
  check_lower_poles(spec, degree);
  if (degree) return polynomial_sum(spec, *degree);

  if (p == q + 1) {
    const double r = std::abs(spec.argument);
    if (on_unit_circle(spec.argument)) return sum_pfq_unit(spec, policy);
    if (r > 1.0) throw DivergentError("pFq: p = q + 1 diverges for |z| > 1");
  }

  WideComplex sum(0, 0), t(1, 0);
  Wide last_ratio = 0;
  bool previous_small = false;
  for (std::size_t n = 0; n < policy.max_terms; ++n) {
    sum += t;
    const Wide scale = std::max<Wide>(1, std::abs(sum));
    const bool small = std::abs(t) <= policy.tolerance * scale;
    if (small && previous_small) {
      const Wide clamped = std::clamp<Wide>(last_ratio, 0, 0.99L);
      const double tail = static_cast<double>(std::abs(t) / (1 - clamped));
      if (tail <= policy.tolerance * static_cast<double>(scale)) {
        return {narrow(sum), n + 1, tail, SumStatus::Converged};
      }
    }
    previous_small = small;
    const WideComplex ratio = term_ratio(spec, n);
    last_ratio = std::abs(ratio);
    t *= ratio;
    if (t == WideComplex(0, 0)) {
      return {narrow(sum), n + 1, 0.0, SumStatus::Converged};
    }
  }
  const Wide clamped = std::clamp<Wide>(last_ratio, 0, 0.99L);
  return {narrow(sum), policy.max_terms, static_cast<double>(std::abs(t) / (1 - clamped)),
          SumStatus::MaxTermsExceeded};
}

struct ContiguousSplit {
  SeriesSpec first;
  Complex first_weight{1.0, 0.0};
  SeriesSpec second;
  Complex second_weight{0.0, 0.0};
};

/// 3F2(a, b, d+1; c, d; z) = 2F1(a, b; c; z) + (a b z)/(d c) 2F1(a+1, b+1; c+1; z),
/// from (d+1)_n / (d)_n = 1 + n/d.
inline ContiguousSplit contiguous_reduce_3f2(Complex a, Complex b, Complex c, Complex d,
                                             Complex z) {
  using series_detail::non_positive_integer;
  if (non_positive_integer(c)) throw PoleError("contiguous_reduce_3f2: c is a non-positive integer");
  if (non_positive_integer(d)) throw PoleError("contiguous_reduce_3f2: d is a non-positive integer");
  return {SeriesSpec{{a, b}, {c}, z}, Complex(1.0, 0.0),
          SeriesSpec{{a + 1.0, b + 1.0}, {c + 1.0}, z}, a * b * z / (d * c)};
}

}  // namespace pfq
