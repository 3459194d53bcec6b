#pragma once

// Closed-form summation theorems for 2F1 and contiguous 3F2 series at
// arguments 1 and 1/2.
//
// Gamma ratios are formed in log space (one exponential per product).
// Reciprocal gammas in denominators vanish at poles instead of throwing,
// so a brace term whose denominator contains Gamma(-m) simply contributes
// zero. Poles in numerators are errors.

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <string>

#include "pfq/complex_gamma.hpp"
#include "pfq/errors.hpp"

namespace pfq {

namespace closed_detail {

inline constexpr double kMinAbsD = 1e-6;
inline constexpr double kDPoleTolerance = 1e-6;

/// prod Gamma(num) / prod Gamma(den) in log space; zero if any denominator
/// argument is a pole.
inline Complex gamma_ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den) {
  Complex log_value(0.0, 0.0);
  for (const Complex& z : den) {
    if (gamma_detail::near_pole(z)) return {0.0, 0.0};
    log_value -= log_gamma(z);
  }
  for (const Complex& z : num) {
    if (gamma_detail::near_pole(z)) {
      throw PoleError("closed form: Gamma(" + std::to_string(z.real()) + ") in a numerator");
    }
    log_value += log_gamma(z);
  }
  return std::exp(log_value);
}

inline void check_d(Complex d, const char* who) {
  const double n = std::round(d.real());
  if (std::abs(d) < kMinAbsD || (n <= 0.0 && std::abs(d - Complex(n, 0.0)) < kDPoleTolerance)) {
    throw PoleError(std::string(who) + ": d must avoid 0, -1, -2, ... and satisfy |d| >= 1e-6");
  }
}

inline void check_unit_convergence(Complex a, Complex b, Complex c, const char* who) {
  if (!((c - a - b).real() > 0.0)) {
    throw ConvergenceDomainError(std::string(who) + ": requires Re(c - a - b) > 0");
  }
}

inline const Complex kHalf(0.5, 0.0);

}  // namespace closed_detail

/// Gauss: 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
inline Complex gauss_unit(Complex a, Complex b, Complex c) {
  closed_detail::check_unit_convergence(a, b, c, "gauss_unit");
  return closed_detail::gamma_ratio({c, c - a - b}, {c - a, c - b});
}

/// 3F2(a, b, d+1; c+1, d; 1)
///   = Gamma(c+1) Gamma(c-a-b) / (Gamma(c-a+1) Gamma(c-b+1)) * (c - a - b + a b / d).
inline Complex gauss_ext_unit(Complex a, Complex b, Complex c, Complex d) {
  closed_detail::check_unit_convergence(a, b, c, "gauss_ext_unit");
  closed_detail::check_d(d, "gauss_ext_unit");
  return closed_detail::gamma_ratio({c + 1.0, c - a - b}, {c - a + 1.0, c - b + 1.0}) *
         (c - a - b + a * b / d);
}

/// Second Gauss theorem: 2F1(a, b; (a+b+1)/2; 1/2).
inline Complex second_gauss_half(Complex a, Complex b) {
  using closed_detail::kHalf;
  return closed_detail::gamma_ratio({kHalf, 0.5 * (a + b + 1.0)},
                                    {0.5 * (a + 1.0), 0.5 * (b + 1.0)});
}

/// Bailey: 2F1(a, 1-a; c; 1/2).
inline Complex bailey_half(Complex a, Complex c) {
  return closed_detail::gamma_ratio({0.5 * c, 0.5 * c + 0.5},
                                    {0.5 * (c + a), 0.5 * (c - a) + 0.5});
}

/// 3F2(a, b, d+1; (a+b+3)/2, d; 1/2). The factor
/// Gamma(x)/Gamma(x+2) of the prefactor (x = (a-b-1)/2) is taken as 1/(x(x+1)).
inline Complex second_gauss_ext_half(Complex a, Complex b, Complex d) {
  using closed_detail::gamma_ratio;
  using closed_detail::kHalf;
  closed_detail::check_d(d, "second_gauss_ext_half");
  const Complex x = 0.5 * (a - b) - 0.5;
  const Complex shift = x * (x + 1.0);
  if (std::abs(shift) < gamma_detail::kPoleTolerance) {
    throw PoleError("second_gauss_ext_half: a - b = +-1 is a pole of the prefactor");
  }
  const Complex top = 0.5 * (a + b) + 1.5;
  const Complex first = gamma_ratio({kHalf, top}, {0.5 * a + 0.5, 0.5 * b + 0.5}) *
                        (0.5 * (a + b - 1.0) - a * b / d);
  const Complex second = gamma_ratio({kHalf, top}, {0.5 * a, 0.5 * b}) * ((a + b + 1.0) / d - 2.0);
  return (first + second) / shift;
}

/// 3F2(a, 1-a, d+1; c+1, d; 1/2).
inline Complex bailey_ext_half(Complex a, Complex c, Complex d) {
  using closed_detail::gamma_ratio;
  using closed_detail::kHalf;
  closed_detail::check_d(d, "bailey_ext_half");
  const Complex scale = std::pow(Complex(2.0, 0.0), -c);
  const Complex first =
      gamma_ratio({kHalf, c + 1.0}, {0.5 * (c + a), 0.5 * (c - a) + 0.5}) * (2.0 / d);
  const Complex second =
      gamma_ratio({kHalf, c + 1.0}, {0.5 * (c + a) + 0.5, 0.5 * (c - a) + 1.0}) * (1.0 - c / d);
  return scale * (first + second);
}

}  // namespace pfq
