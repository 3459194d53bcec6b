#pragma once

// Complex gamma and log-gamma in binary64.
//
// Lanczos approximation (g = 7, 9 coefficients) on Re z >= 1/2, reflection
// Gamma(z) Gamma(1-z) = pi / sin(pi z) on the left half-plane. Relative
// accuracy is ~1e-14 for |z| <= 50.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "pfq/errors.hpp"

namespace pfq {

using Complex = std::complex<double>;

namespace gamma_detail {

inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline constexpr double kPoleTolerance = 1e-12;
inline constexpr double kMaxReflectedImag = 30.0;

inline const double kHalfLogTwoPi = 0.5 * std::log(2.0 * std::numbers::pi);

/// True when z lies within kPoleTolerance of 0, -1, -2, ...
inline bool near_pole(Complex z) {
  const double n = std::round(z.real());
  return n <= 0.0 && std::abs(z - Complex(n, 0.0)) < kPoleTolerance;
}

inline void check_pole(Complex z, const char* who) {
  if (near_pole(z)) {
    throw PoleError(std::string(who) + ": argument (" + std::to_string(z.real()) + ", " +
                    std::to_string(z.imag()) + ") is a pole of Gamma");
  }
}

/// sin(pi x) and cos(pi x) for real x, with the argument reduced exactly
/// to [-1/2, 1/2] so that zeros at integers are reproduced.
inline double sin_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

inline double cos_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;
  const double c = std::cos(std::numbers::pi * r);
  return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

/// sin(pi z) for complex z; |Im z| must be moderate (cosh overflow otherwise).
inline Complex sin_pi(Complex z) {
  const double y = std::numbers::pi * z.imag();
  return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

/// log sin(pi z), stable for large |Im z| where sin(pi z) itself overflows.
inline Complex log_sin_pi(Complex z) {
  if (std::abs(z.imag()) < kMaxReflectedImag) return std::log(sin_pi(z));
  const Complex i(0.0, 1.0);
  const Complex w = std::numbers::pi * z;
  const double ln2 = std::numbers::ln2;
  if (z.imag() > 0.0) {
    // sin w = (i/2) e^{-iw} (1 - e^{2iw}); |e^{2iw}| = e^{-2 Im w} is negligible.
    return -i * w + Complex(-ln2, std::numbers::pi / 2) + std::log(1.0 - std::exp(2.0 * i * w));
  }
  return i * w + Complex(-ln2, -std::numbers::pi / 2) + std::log(1.0 - std::exp(-2.0 * i * w));
}

/// Lanczos log-gamma, valid for Re z >= 1/2.
inline Complex log_gamma_right(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex series(kLanczosCoefficients[0], 0.0);
  for (std::size_t k = 1; k < kLanczosCoefficients.size(); ++k) {
    series += kLanczosCoefficients[k] / (zm1 + static_cast<double>(k));
  }
  const Complex t = zm1 + kLanczosG + 0.5;
  return kHalfLogTwoPi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace gamma_detail

/// A logarithm of Gamma(z). The real part is ln|Gamma(z)|; the imaginary part
/// is an argument of Gamma(z) (continuous on Re z >= 1/2, reduced to
/// (-pi, pi] on the reflected half-plane). Throws PoleError near 0, -1, -2, ...
inline Complex log_gamma(Complex z) {
  gamma_detail::check_pole(z, "log_gamma");
  if (z.real() >= 0.5) return gamma_detail::log_gamma_right(z);
  const Complex reflected = std::log(std::numbers::pi) - gamma_detail::log_sin_pi(z) -
                            gamma_detail::log_gamma_right(1.0 - z);
  return {reflected.real(), std::remainder(reflected.imag(), 2.0 * std::numbers::pi)};
}

/// Gamma(z). Throws PoleError near non-positive integers, RangeError when
/// the reflection formula is needed with |Im z| > 30 or the result overflows.
inline Complex gamma(Complex z) {
  gamma_detail::check_pole(z, "gamma");
  Complex value;
  if (z.real() >= 0.5) {
    value = std::exp(gamma_detail::log_gamma_right(z));
  } else {
    if (std::abs(z.imag()) > gamma_detail::kMaxReflectedImag) {
      throw RangeError("gamma: |Im z| > 30 in the reflected half-plane");
    }
    value = std::numbers::pi /
            (gamma_detail::sin_pi(z) * std::exp(gamma_detail::log_gamma_right(1.0 - z)));
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw RangeError("gamma: result is not representable in binary64");
  }
  return value;
}

/// 1/Gamma(z); entire, so poles of Gamma map to an exact zero.
inline Complex reciprocal_gamma(Complex z) {
  if (gamma_detail::near_pole(z)) return {0.0, 0.0};
  return std::exp(-log_gamma(z));
}

}  // namespace pfq
