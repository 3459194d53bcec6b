#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pfq/complex_gamma.hpp"
#include "test_support.hpp"

namespace {

using pfq::Complex;
using pfq::testing::Draws;
using pfq::testing::rel_error;
constexpr double kPi = std::numbers::pi;

TEST(Gamma, KnownValues) {
  EXPECT_NEAR(pfq::gamma(Complex(5.0, 0.0)).real(), 24.0, 24.0 * 1e-14);
  EXPECT_LT(rel_error(pfq::gamma(0.5), std::sqrt(kPi)), 1e-14);
  EXPECT_LT(rel_error(pfq::gamma(-1.5), 2.3632718012073547031), 1e-13);
  // |Gamma(i)|^2 = pi / sinh(pi)
  EXPECT_LT(rel_error(std::norm(pfq::gamma(Complex(0.0, 1.0))), 0.27202905498213316295), 1e-13);
  // |Gamma(1/2 + i)|^2 = pi / cosh(pi)
  EXPECT_LT(rel_error(std::norm(pfq::gamma(Complex(0.5, 1.0))), kPi / std::cosh(kPi)), 1e-13);
}

TEST(Gamma, PolesThrowAndReciprocalVanishes) {
  for (double n : {0.0, -1.0, -2.0, -7.0}) {
    EXPECT_THROW(pfq::gamma(n), pfq::PoleError) << n;
    EXPECT_THROW(pfq::log_gamma(n), pfq::PoleError) << n;
    EXPECT_EQ(pfq::reciprocal_gamma(n), Complex(0.0, 0.0)) << n;
  }
  EXPECT_THROW(pfq::gamma(Complex(-3.0 + 1e-13, 0.0)), pfq::PoleError);
  EXPECT_NO_THROW(pfq::gamma(Complex(-3.0 + 1e-6, 0.0)));
}

TEST(Gamma, OverflowIsARangeError) {
  EXPECT_THROW(pfq::gamma(Complex(200.0, 0.0)), pfq::RangeError);
  EXPECT_THROW(pfq::gamma(Complex(-0.3, 40.0)), pfq::RangeError);
  // log_gamma stays finite where gamma cannot.
  EXPECT_TRUE(std::isfinite(pfq::log_gamma(Complex(200.0, 0.0)).real()));
  EXPECT_TRUE(std::isfinite(pfq::log_gamma(Complex(-0.3, 400.0)).real()));
}

TEST(GammaProperty, RecurrenceHolds) {
  Draws draws(101);
  for (int k = 0; k < 1000; ++k) {
    const Complex z = draws.complex_in(-8.0, 12.0, -6.0, 6.0);
    if (std::abs(z.imag()) < 1e-3 && std::abs(z.real() - std::round(z.real())) < 1e-3) continue;
    const Complex lhs = pfq::gamma(z + 1.0);
    const Complex rhs = z * pfq::gamma(z);
    ASSERT_LT(rel_error(lhs, rhs), 1e-12) << "z = " << z;
  }
}

TEST(GammaProperty, ReflectionHolds) {
  Draws draws(202);
  for (int k = 0; k < 1000; ++k) {
    const Complex z = draws.complex_in(-5.0, 5.0, -4.0, 4.0);
    if (std::abs(z.imag()) < 1e-3 && std::abs(z.real() - std::round(z.real())) < 1e-3) continue;
    const Complex lhs = pfq::gamma(z) * pfq::gamma(1.0 - z);
    const Complex rhs = kPi / std::sin(kPi * z);
    ASSERT_LT(rel_error(lhs, rhs), 1e-12) << "z = " << z;
  }
}

TEST(GammaProperty, ConjugateSymmetry) {
  Draws draws(303);
  for (int k = 0; k < 1000; ++k) {
    const Complex z = draws.complex_in(-6.0, 10.0, -8.0, 8.0);
    if (std::abs(z.imag()) < 1e-3 && std::abs(z.real() - std::round(z.real())) < 1e-3) continue;
    ASSERT_LT(rel_error(pfq::gamma(std::conj(z)), std::conj(pfq::gamma(z))), 1e-14) << z;
  }
}

TEST(GammaProperty, ImaginaryAxisStrips) {
  Draws draws(404);
  for (int k = 0; k < 200; ++k) {
    const double y = draws.uniform(0.05, 12.0);
    EXPECT_LT(rel_error(std::norm(pfq::gamma(Complex(0.0, y))), kPi / (y * std::sinh(kPi * y))), 1e-12);
    EXPECT_LT(rel_error(std::norm(pfq::gamma(Complex(0.5, y))), kPi / std::cosh(kPi * y)), 1e-12);
  }
}

TEST(GammaProperty, LogGammaMatchesGamma) {
  Draws draws(505);
  for (int k = 0; k < 500; ++k) {
    const Complex z = draws.complex_in(-6.0, 15.0, -6.0, 6.0);
    if (std::abs(z.imag()) < 1e-3 && std::abs(z.real() - std::round(z.real())) < 1e-3) continue;
    ASSERT_LT(rel_error(std::exp(pfq::log_gamma(z)), pfq::gamma(z)), 1e-12) << z;
  }
}

}  // namespace
