#pragma once

// Exact rationals for identity parameters (2/9, 15/26, -15/22, ...) and
// for the coefficient algebra of the theorem families.

#include <cmath>
#include <compare>
#include <complex>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pfq/errors.hpp"

namespace pfq {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of integer literals
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }

  [[nodiscard]] std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_)};
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {mul(a.num_, b.num_), mul(a.den_, b.den_)};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DivideByZero("Rational: division by zero");
    return {mul(a.num_, b.den_), mul(a.den_, b.num_)};
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return mul(a.num_, b.den_) <=> mul(b.num_, a.den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw RangeError("Rational: int64 overflow");
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw RangeError("Rational: int64 overflow");
    return r;
  }
  void normalize() {
    if (den_ == 0) throw DivideByZero("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// re + im*i with exact rational parts.
struct ExactComplex {
  Rational re;
  Rational im;

  [[nodiscard]] std::complex<double> value() const { return {re.to_double(), im.to_double()}; }
  [[nodiscard]] bool is_real() const { return im == Rational(0); }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;

  [[nodiscard]] std::string str() const {
    if (im == Rational(0)) return re.str();
    const std::string imag = (im == Rational(1) ? "" : im == Rational(-1) ? "-" : im.str()) + "i";
    if (re == Rational(0)) return imag;
    return re.str() + (im > Rational(0) ? "+" : "") + imag;
  }
};

inline ExactComplex real(Rational r) { return {r, Rational(0)}; }
inline ExactComplex imaginary(Rational r) { return {Rational(0), r}; }

}  // namespace pfq
