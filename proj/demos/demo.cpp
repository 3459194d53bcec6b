// Walks through the library: a series at z = 1, the closed form it should
// match, one registry identity, and Ramanujan's near-integer.

#include <cstdio>
#include <numbers>

#include "pfq/closed_forms.hpp"
#include "pfq/heegner.hpp"
#include "pfq/identities.hpp"
#include "pfq/series.hpp"

int main() {
  using namespace pfq;
  const Complex i{0.0, 1.0};

  // 2F1(i, -i; 1/2; 1) by Levin acceleration, against Gauss's theorem.
  SeriesSpec spec{{i, -i}, {0.5}, 1.0};
  SumPolicy policy;
  policy.tolerance = 1e-8;
  const SumResult series = sum_pfq(spec, policy);
  const Complex closed = gauss_unit(i, -i, 0.5);
  std::printf("2F1(i,-i;1/2;1)  series %.15f (%s, %zu terms)\n", series.value.real(),
              std::string(to_string(series.status)).c_str(), series.terms_used);
  std::printf("                 closed %.15f   cosh(pi) %.15f\n", closed.real(),
              std::cosh(std::numbers::pi));

  // e^pi as the sum of two Gauss values.
  std::printf("e^pi via gamma   %.15f\n", gelfond());

  for (const auto& c : registry()) {
    if (c.id != "eq1.1") continue;
    const VerificationReport r = verify(c);
    std::printf("%s: %s, closed rel %.2g, series rel %.2g\n", r.id.c_str(),
                std::string(to_string(r.verdict)).c_str(), r.rel_residual.value_or(0.0),
                r.series_rel_residual.value_or(0.0));
  }

  const HeegnerRow row = heegner_row(163);
  std::printf("e^(pi sqrt 163) = %s\n  640320^3 + 744 - value = %.4g (bound %.2g)\n",
              to_string(row.value, 31).c_str(), row.deviation.to_double(), row.error_bound);
}
