#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pfq/dd_real.hpp"
#include "pfq/heegner.hpp"
#include "test_support.hpp"

namespace {

using pfq::DDReal;
using pfq::testing::Draws;

DDReal dd_e() { return DDReal::from_parts(0x1.5bf0a8b145769p+1, 0x1.4d57ee2b1013ap-53); }

double rel_dd(const DDReal& a, const DDReal& b) { return std::abs((a - b).to_double()) / std::abs(b.to_double()); }

TEST(DDReal, ConstantsPrintTo32Digits) {
  EXPECT_EQ(pfq::to_string(pfq::dd_pi(), 32), "3.1415926535897932384626433832795");
  EXPECT_EQ(pfq::to_string(dd_e(), 32), "2.7182818284590452353602874713527");
  EXPECT_EQ(pfq::dd_pi().hi(), std::numbers::pi);
}

TEST(DDReal, BasicArithmetic) {
  const DDReal third = DDReal(1.0) / DDReal(3.0);
  EXPECT_LT(std::abs((third * DDReal(3.0) - DDReal(1.0)).to_double()), 1e-31);
  const DDReal two = pfq::dd_sqrt(DDReal(2.0));
  EXPECT_LT(std::abs((two * two - DDReal(2.0)).to_double()), 1e-31);
  EXPECT_THROW(DDReal(1.0) / DDReal(0.0), pfq::DivideByZero);
  EXPECT_THROW(pfq::dd_sqrt(DDReal(-1.0)), pfq::DomainError);
  EXPECT_THROW(pfq::dd_exp(DDReal(701.0)), pfq::RangeError);
  EXPECT_LT(rel_dd(pfq::dd_exp(DDReal(1.0)), dd_e()), 1e-31);
  EXPECT_EQ(pfq::round(DDReal::from_parts(2.5, 0x1p-60)), DDReal(3.0));
}

TEST(DDRealProperty, TwoSumIsErrorFree) {
  // Scale the inputs onto a common grid of 2^-60 and compare in exact
  // 128-bit integer arithmetic.
  Draws draws(3001);
  for (int k = 0; k < 100000; ++k) {
    const double a = std::ldexp(draws.uniform(-1.0, 1.0), static_cast<int>(draws.integer(-5, 5)));
    const double b = std::ldexp(draws.uniform(-1.0, 1.0), static_cast<int>(draws.integer(-5, 5)));
    double s = 0.0, e = 0.0;
    pfq::eft::two_sum(a, b, s, e);
    const auto grid = [](double x) { return static_cast<__int128>(std::ldexp(x, 60 + 53)); };
    ASSERT_EQ(grid(a) + grid(b), grid(s) + grid(e)) << a << " " << b;
  }
}

TEST(DDRealProperty, TwoProdIsErrorFree) {
  Draws draws(3002);
  for (int k = 0; k < 100000; ++k) {
    const double a = draws.uniform(1.0, 2.0);
    const double b = draws.uniform(1.0, 2.0);
    double p = 0.0, e = 0.0;
    pfq::eft::two_prod(a, b, p, e);
    // a, b are multiples of 2^-52, so a*b is a multiple of 2^-104.
    const auto ia = static_cast<__int128>(std::ldexp(a, 52));
    const auto ib = static_cast<__int128>(std::ldexp(b, 52));
    const auto ip = static_cast<__int128>(std::ldexp(p, 104));
    const auto ie = static_cast<__int128>(std::ldexp(e, 104));
    ASSERT_EQ(ia * ib, ip + ie) << a << " " << b;
  }
}

TEST(DDRealProperty, ResultsStayNormalized) {
  Draws draws(3003);
  for (int k = 0; k < 10000; ++k) {
    const DDReal x = DDReal::from_parts(draws.uniform(-100, 100), draws.uniform(-1e-15, 1e-15));
    const DDReal y = DDReal::from_parts(draws.uniform(0.5, 100), draws.uniform(-1e-15, 1e-15));
    for (const DDReal& r : {x + y, x - y, x * y, x / y, pfq::dd_sqrt(y)}) ASSERT_TRUE(r.is_normalized());
  }
}

TEST(DDRealProperty, ExpIsAdditive) {
  Draws draws(3004);
  for (int k = 0; k < 1000; ++k) {
    const DDReal x = DDReal::from_parts(draws.uniform(-20, 20), draws.uniform(-1e-16, 1e-16));
    const DDReal y = DDReal::from_parts(draws.uniform(-20, 20), draws.uniform(-1e-16, 1e-16));
    const DDReal lhs = pfq::dd_exp(x + y);
    const DDReal rhs = pfq::dd_exp(x) * pfq::dd_exp(y);
    ASSERT_LT(rel_dd(lhs, rhs), 1e-28) << x.hi() << " " << y.hi();
  }
}

TEST(DDRealProperty, ExpOfNegationIsReciprocal) {
  Draws draws(3005);
  for (int k = 0; k < 1000; ++k) {
    const DDReal x(draws.uniform(-40, 40));
    ASSERT_LT(std::abs((pfq::dd_exp(x) * pfq::dd_exp(-x) - DDReal(1.0)).to_double()), 1e-28);
  }
}

TEST(Heegner, RowsRoundToTheReferenceIntegers) {
  for (int n : pfq::kHeegnerNumbers) {
    const auto row = pfq::heegner_row(n);
    EXPECT_EQ(pfq::round(row.value), DDReal::from_integer(row.reference)) << n;
    EXPECT_GT(row.deviation.to_double(), 0.0) << n;
    EXPECT_LT(std::abs(row.value.hi() - std::exp(std::numbers::pi * std::sqrt(n))) / row.value.hi(), 1e-13);
  }
  EXPECT_THROW(pfq::heegner_row(7), pfq::DomainError);
}

TEST(Heegner, Deviations) {
  EXPECT_NEAR(pfq::heegner_row(19).deviation.to_double(), 0.22231984568050246, 1e-12);
  EXPECT_NEAR(pfq::heegner_row(43).deviation.to_double(), 2.2253396509333806e-4, 1e-12);
  EXPECT_NEAR(pfq::heegner_row(67).deviation.to_double(), 1.3375457754931707e-6, 1e-11);
  const auto r163 = pfq::heegner_row(163);
  EXPECT_LE(std::abs(r163.deviation.to_double() - 7.4992740279217474e-13), r163.error_bound);
  EXPECT_TRUE(pfq::to_string(r163.value, 31).starts_with("262537412640768743.999999999999"));
}

TEST(Heegner, DeviationsShrinkAsNGrows) {
  double previous = INFINITY;
  for (int n : pfq::kHeegnerNumbers) {
    const double d = pfq::heegner_row(n).deviation.to_double();
    EXPECT_LT(d, previous) << n;
    previous = d;
  }
}

}  // namespace
