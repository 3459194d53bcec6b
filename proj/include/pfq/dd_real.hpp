#pragma once

// Double-double arithmetic: a real represented as the unevaluated sum
// hi + lo of two binary64 values with |lo| <= ulp(hi)/2, about 32
// significant decimal digits. Built on the error-free transformations
// two_sum and two_prod (the latter via fused multiply-add).

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "pfq/errors.hpp"

namespace pfq {

namespace eft {

/// s + e == a + b exactly.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

/// Requires |a| >= |b| (or a == 0).
inline void quick_two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  e = b - (s - a);
}

/// p + e == a * b exactly.
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

}  // namespace eft

class DDReal {
 public:
  constexpr DDReal() = default;
  constexpr DDReal(double x) : hi_(x), lo_(0.0) {}  // NOLINT: doubles embed exactly

  /// Renormalizes (hi, lo) so that hi = fl(hi + lo).
  static DDReal from_parts(double hi, double lo) {
    DDReal r;
    eft::two_sum(hi, lo, r.hi_, r.lo_);
    return r;
  }

  /// Exact for every |x| < 2^106.
  static DDReal from_integer(std::int64_t x) {
    const auto hi = static_cast<double>(x);
    const auto rest = static_cast<double>(x - static_cast<std::int64_t>(hi));
    return from_parts(hi, rest);
  }

  [[nodiscard]] constexpr double hi() const noexcept { return hi_; }
  [[nodiscard]] constexpr double lo() const noexcept { return lo_; }
  [[nodiscard]] constexpr double to_double() const noexcept { return hi_ + lo_; }

  /// |lo| <= ulp(hi) / 2.
  [[nodiscard]] bool is_normalized() const {
    if (hi_ == 0.0) return lo_ == 0.0;
    const double ulp = std::nextafter(std::abs(hi_), std::numeric_limits<double>::infinity()) -
                       std::abs(hi_);
    return std::abs(lo_) <= 0.5 * ulp;
  }

  DDReal operator-() const {
    DDReal r;
    r.hi_ = -hi_;
    r.lo_ = -lo_;
    return r;
  }

  friend DDReal operator+(const DDReal& a, const DDReal& b) {
    double s1, s2, t1, t2;
    eft::two_sum(a.hi_, b.hi_, s1, s2);
    eft::two_sum(a.lo_, b.lo_, t1, t2);
    s2 += t1;
    eft::quick_two_sum(s1, s2, s1, s2);
    s2 += t2;
    DDReal r;
    eft::quick_two_sum(s1, s2, r.hi_, r.lo_);
    return r;
  }

  friend DDReal operator-(const DDReal& a, const DDReal& b) { return a + (-b); }

  friend DDReal operator*(const DDReal& a, const DDReal& b) {
    double p, e;
    eft::two_prod(a.hi_, b.hi_, p, e);
    e += a.hi_ * b.lo_ + a.lo_ * b.hi_;
    DDReal r;
    eft::quick_two_sum(p, e, r.hi_, r.lo_);
    return r;
  }

  friend DDReal operator/(const DDReal& a, const DDReal& b) {
    if (b.hi_ == 0.0) throw DivideByZero("DDReal: division by zero");
    // Three quotient digits with exact remainders.
    const double q1 = a.hi_ / b.hi_;
    DDReal rem = a - b * DDReal(q1);
    const double q2 = rem.hi_ / b.hi_;
    rem = rem - b * DDReal(q2);
    const double q3 = rem.hi_ / b.hi_;
    DDReal r;
    eft::quick_two_sum(q1, q2, r.hi_, r.lo_);
    return r + DDReal(q3);
  }

  DDReal& operator+=(const DDReal& o) { return *this = *this + o; }
  DDReal& operator-=(const DDReal& o) { return *this = *this - o; }
  DDReal& operator*=(const DDReal& o) { return *this = *this * o; }
  DDReal& operator/=(const DDReal& o) { return *this = *this / o; }

  friend bool operator==(const DDReal& a, const DDReal& b) {
    return a.hi_ == b.hi_ && a.lo_ == b.lo_;
  }
  friend bool operator<(const DDReal& a, const DDReal& b) {
    return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
  }
  friend bool operator>(const DDReal& a, const DDReal& b) { return b < a; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

inline DDReal dd_add(const DDReal& x, const DDReal& y) { return x + y; }
inline DDReal dd_mul(const DDReal& x, const DDReal& y) { return x * y; }
inline DDReal dd_div(const DDReal& x, const DDReal& y) { return x / y; }

inline DDReal abs(const DDReal& x) { return x.hi() < 0.0 ? -x : x; }

inline DDReal ldexp(const DDReal& x, int k) {
  return DDReal::from_parts(std::ldexp(x.hi(), k), std::ldexp(x.lo(), k));
}

inline DDReal floor(const DDReal& x) {
  const double h = std::floor(x.hi());
  if (h != x.hi()) return DDReal(h);
  return DDReal::from_parts(h, std::floor(x.lo()));
}

/// Nearest integer, ties away from zero.
inline DDReal round(const DDReal& x) {
  const DDReal shifted = x + DDReal(0.5);
  return x.hi() >= 0.0 ? floor(shifted) : -floor(-x + DDReal(0.5));
}

inline DDReal dd_sqrt(const DDReal& x) {
  if (x.hi() < 0.0) throw DomainError("dd_sqrt: negative argument");
  if (x.hi() == 0.0) return DDReal(0.0);
  // One Newton step from the binary64 root doubles the correct bits;
  // a second in full DD absorbs the rounding of the first.
  DDReal y(std::sqrt(x.hi()));
  for (int i = 0; i < 2; ++i) y = y + (x - y * y) / (DDReal(2.0) * y);
  return y;
}

/// pi to 106 bits.
inline DDReal dd_pi() { return DDReal::from_parts(0x1.921fb54442d18p+1, 0x1.1a62633145c07p-53); }

/// ln 2 to 106 bits.
inline DDReal dd_ln2() { return DDReal::from_parts(0x1.62e42fefa39efp-1, 0x1.abc9e3b39803fp-56); }

/// e^x for |x| <= 700: x = k ln2 + r with |r| <= ln2/2, then a fixed
/// 30-term Taylor series for e^r and an exact scaling by 2^k.
inline DDReal dd_exp(const DDReal& x) {
  constexpr int kTaylorTerms = 30;
  if (!(std::abs(x.hi()) <= 700.0)) throw RangeError("dd_exp: |x| must be <= 700");
  const double k = std::nearbyint(x.hi() / dd_ln2().hi());
  const DDReal r = x - dd_ln2() * DDReal(k);
  DDReal sum(1.0);
  DDReal term(1.0);
  for (int i = 1; i <= kTaylorTerms; ++i) {
    term = term * r / DDReal(static_cast<double>(i));
    sum += term;
  }
  return ldexp(sum, static_cast<int>(k));
}

/// Decimal rendering with `digits` significant digits, positional notation
/// (no exponent) when the value has at most `digits` integer digits.
inline std::string to_string(const DDReal& x, int digits) {
  if (x.hi() == 0.0) return "0";
  std::string sign = x.hi() < 0.0 ? "-" : "";
  DDReal y = abs(x);
  int exponent = static_cast<int>(std::floor(std::log10(y.hi())));
  auto scale_by_ten = [](DDReal v, int e) {
    DDReal p(1.0);
    for (int i = 0; i < std::abs(e); ++i) p *= DDReal(10.0);
    return e >= 0 ? v / p : v * p;
  };
  y = scale_by_ten(y, exponent);
  if (y.hi() >= 10.0) {
    y /= DDReal(10.0);
    ++exponent;
  } else if (y.hi() < 1.0) {
    y *= DDReal(10.0);
    --exponent;
  }

  std::string mantissa;
  for (int i = 0; i <= digits; ++i) {
    const DDReal d = floor(y);
    int digit = static_cast<int>(d.to_double());
    digit = digit < 0 ? 0 : (digit > 9 ? 9 : digit);
    mantissa.push_back(static_cast<char>('0' + digit));
    y = (y - DDReal(static_cast<double>(digit))) * DDReal(10.0);
  }
  // Round on the guard digit.
  const bool up = mantissa.back() >= '5';
  mantissa.pop_back();
  if (up) {
    int i = static_cast<int>(mantissa.size()) - 1;
    while (i >= 0 && mantissa[i] == '9') mantissa[i--] = '0';
    if (i >= 0) {
      ++mantissa[i];
    } else {
      mantissa.insert(mantissa.begin(), '1');
      mantissa.pop_back();
      ++exponent;
    }
  }

  if (exponent >= 0 && exponent < digits) {
    return sign + mantissa.substr(0, exponent + 1) + "." + mantissa.substr(exponent + 1);
  }
  if (exponent < 0 && exponent > -5) {
    return sign + "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + mantissa;
  }
  return sign + mantissa.substr(0, 1) + "." + mantissa.substr(1) + "e" + std::to_string(exponent);
}

}  // namespace pfq
