#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pfq/closed_forms.hpp"
#include "pfq/series.hpp"
#include "test_support.hpp"

namespace {

using pfq::Complex;
using pfq::SumPolicy;
using pfq::testing::Draws;
using pfq::testing::rel_error;
constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Complex series(std::vector<Complex> upper, std::vector<Complex> lower, Complex z, double tol = 1e-14) {
  SumPolicy p;
  p.tolerance = tol;
  return pfq::sum_pfq({std::move(upper), std::move(lower), z}, p).value;
}

TEST(ClosedForms, GaussUnitValues) {
  EXPECT_LT(rel_error(pfq::gauss_unit(kI, -kI, 0.5), std::cosh(kPi)), 1e-13);
  EXPECT_LT(rel_error(pfq::gauss_unit(0.5 + kI, 0.5 - kI, 1.5), std::sinh(kPi) / 2), 1e-13);
  EXPECT_LT(rel_error(pfq::gauss_ext_unit(kI, -kI, 0.5, 2.0), 4.6367813102086082511), 1e-13);
}

TEST(ClosedForms, HalfArgumentValues) {
  EXPECT_LT(rel_error(pfq::second_gauss_half(kI, -kI), std::cosh(kPi / 2)), 1e-13);
  EXPECT_LT(rel_error(pfq::bailey_half(0.5 + kI, 1.5), std::sinh(kPi / 2) / std::sqrt(2.0)), 1e-13);
  EXPECT_LT(rel_error(pfq::second_gauss_ext_half(kI, -kI, 1.0), 1.9657668676562930), 1e-13);
  EXPECT_LT(rel_error(pfq::bailey_ext_half(0.5 + kI, 1.5, 3.0), 1.4789784487292444686), 1e-13);
}

TEST(ClosedForms, DomainChecks) {
  EXPECT_THROW(pfq::gauss_unit(1.0, 1.0, 1.5), pfq::ConvergenceDomainError);
  EXPECT_THROW(pfq::gauss_ext_unit(kI, -kI, 0.5, 1e-7), pfq::PoleError);
  EXPECT_THROW(pfq::gauss_ext_unit(kI, -kI, 0.5, -2.0), pfq::PoleError);
  EXPECT_THROW(pfq::second_gauss_ext_half(2.0, 1.0, 1.0), pfq::PoleError);
  EXPECT_THROW(pfq::bailey_ext_half(0.5, 1.5, 0.0), pfq::PoleError);
}

TEST(ClosedForms, NumeratorAndDenominatorPoles) {
  // c - a = -1 puts a pole in the denominator: the value is exactly zero.
  EXPECT_EQ(pfq::gauss_unit(2.0, -1.5, 1.0), Complex(0.0, 0.0));
  // A pole in the numerator has no finite value.
  EXPECT_THROW(pfq::gauss_unit(-3.0, -2.5, -1.0), pfq::PoleError);
}

TEST(ClosedFormsProperty, SecondGaussHalfMatchesSeries) {
  Draws draws(1001);
  for (int k = 0; k < 100; ++k) {
    const Complex a = draws.complex_in(-3.0, 3.0, -2.0, 2.0);
    const Complex b = draws.complex_in(-3.0, 3.0, -2.0, 2.0);
    const Complex c = 0.5 * (a + b + 1.0);
    if (pfq::series_detail::non_positive_integer(c)) continue;
    ASSERT_LT(rel_error(pfq::second_gauss_half(a, b), series({a, b}, {c}, 0.5)), 1e-11)
        << a << " " << b;
  }
}

TEST(ClosedFormsProperty, BaileyHalfMatchesSeries) {
  Draws draws(1002);
  for (int k = 0; k < 100; ++k) {
    const Complex a = draws.complex_in(-3.0, 3.0, -2.0, 2.0);
    const Complex c = draws.complex_in(0.3, 5.0, -1.0, 1.0);
    ASSERT_LT(rel_error(pfq::bailey_half(a, c), series({a, 1.0 - a}, {c}, 0.5)), 1e-11)
        << a << " " << c;
  }
}

TEST(ClosedFormsProperty, SecondGaussExtHalfMatchesSeries) {
  Draws draws(1003);
  int checked = 0;
  while (checked < 100) {
    const Complex a = draws.complex_in(-3.0, 3.0, -2.0, 2.0);
    const Complex b = draws.complex_in(-3.0, 3.0, -2.0, 2.0);
    const Complex d = draws.complex_in(0.3, 5.0, -1.0, 1.0);
    const Complex x = 0.5 * (a - b) - 0.5;
    if (std::abs(x) < 0.05 || std::abs(x + 1.0) < 0.05) continue;
    ++checked;
    const Complex closed = pfq::second_gauss_ext_half(a, b, d);
    const Complex direct = series({a, b, d + 1.0}, {0.5 * (a + b + 3.0), d}, 0.5);
    ASSERT_LT(rel_error(closed, direct), 1e-11) << a << " " << b << " " << d;
  }
}

TEST(ClosedFormsProperty, BaileyExtHalfMatchesSeries) {
  Draws draws(1004);
  for (int k = 0; k < 100; ++k) {
    const Complex a = draws.complex_in(-3.0, 3.0, -2.0, 2.0);
    const Complex c = draws.complex_in(0.3, 5.0, -1.0, 1.0);
    const Complex d = draws.complex_in(0.3, 5.0, -1.0, 1.0);
    const Complex closed = pfq::bailey_ext_half(a, c, d);
    const Complex direct = series({a, 1.0 - a, d + 1.0}, {c + 1.0, d}, 0.5);
    ASSERT_LT(rel_error(closed, direct), 1e-11) << a << " " << c << " " << d;
  }
}

TEST(ClosedFormsProperty, GaussExtUnitMatchesAcceleratedSeries) {
  Draws draws(1005);
  for (int k = 0; k < 30; ++k) {
    const Complex a = draws.complex_in(-1.0, 1.0, -1.5, 1.5);
    const Complex b = draws.complex_in(-1.0, 1.0, -1.5, 1.5);
    const Complex c = a + b + draws.complex_in(0.8, 2.5, -0.5, 0.5);
    const Complex d = draws.complex_in(0.5, 4.0, -0.5, 0.5);
    if (pfq::series_detail::non_positive_integer(c + 1.0)) continue;
    const Complex closed = pfq::gauss_ext_unit(a, b, c, d);
    const Complex accelerated = series({a, b, d + 1.0}, {c + 1.0, d}, 1.0, 1e-8);
    ASSERT_LT(std::abs(closed - accelerated), 1e-6 * std::max(1.0, std::abs(closed)))
        << a << " " << b << " " << c << " " << d;
  }
}

TEST(ClosedFormsProperty, ConjugateParametersGiveRealValues) {
  Draws draws(1006);
  for (int k = 0; k < 100; ++k) {
    const double y = draws.uniform(0.1, 3.0);
    const double d = draws.uniform(0.3, 5.0);
    const Complex v1 = pfq::gauss_ext_unit(y * kI, -y * kI, 0.5, d);
    const Complex v2 = pfq::second_gauss_ext_half(y * kI, -y * kI, d);
    const Complex v3 = pfq::bailey_ext_half(0.5 + y * kI, 1.5, d);
    for (Complex v : {v1, v2, v3}) EXPECT_LE(std::abs(v.imag()), 1e-12 * std::max(1.0, std::abs(v)));
  }
}

TEST(ClosedFormsProperty, LargeDApproachesTwoFOne) {
  // (d+1)_n/(d)_n -> 1 as d grows: the extended value tends to the plain one.
  const double d = 1e6;
  EXPECT_LT(rel_error(pfq::gauss_ext_unit(kI, -kI, 0.5, d), pfq::gauss_unit(kI, -kI, 1.5)), 1e-5);
  EXPECT_LT(rel_error(pfq::bailey_ext_half(0.5 + kI, 1.5, d), pfq::bailey_half(0.5 + kI, 2.5)), 1e-5);
  EXPECT_LT(rel_error(pfq::second_gauss_ext_half(kI, -kI, d),
                      series({kI, -kI}, {1.5}, 0.5)), 1e-5);
}

}  // namespace
