#pragma once

// e^{pi sqrt(n)} for the four largest Heegner numbers, in double-double.
// Each value lies just below c^3 + 744; the deviation ranges from ~0.22
// (n = 19) down to ~7.5e-13 (n = 163), where a 2.6e17 magnitude value
// needs about 30 significant digits to resolve it.

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "pfq/dd_real.hpp"
#include "pfq/errors.hpp"

namespace pfq {

struct HeegnerRow {
  int n = 0;
  DDReal value;
  std::int64_t cube_base = 0;
  /// c^3 + 744, exact.
  std::int64_t reference = 0;
  /// reference - value.
  DDReal deviation;
  /// Static worst-case bound on |value - e^{pi sqrt(n)}|.
  double error_bound = 0.0;
};

inline constexpr std::array<int, 4> kHeegnerNumbers = {19, 43, 67, 163};

inline std::int64_t heegner_cube_base(int n) {
  switch (n) {
    case 19: return 96;
    case 43: return 960;
    case 67: return 5280;
    case 163: return 640320;
    default: throw DomainError("heegner: n must be one of 19, 43, 67, 163");
  }
}

inline HeegnerRow heegner_row(int n) {
  const std::int64_t c = heegner_cube_base(n);
  HeegnerRow row;
  row.n = n;
  row.cube_base = c;
  row.reference = c * c * c + 744;
  const DDReal exponent = dd_pi() * dd_sqrt(DDReal(static_cast<double>(n)));
  row.value = dd_exp(exponent);
  row.deviation = DDReal::from_integer(row.reference) - row.value;
  // Exponent: pi, sqrt and the product each carry <= 2^-104 relative error,
  // amplified by |exponent| through exp. The reduction, 30 Taylor steps and
  // their accumulation contribute <= 40 * 2^-104 relative.
  const double unit = std::ldexp(1.0, -104);
  row.error_bound = row.value.to_double() * (3.0 * exponent.to_double() + 40.0) * unit;
  return row;
}

}  // namespace pfq
