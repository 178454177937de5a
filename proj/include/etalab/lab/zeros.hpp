#pragma once

#include <utility>
#include <vector>

#include "etalab/mp/big_complex.hpp"

namespace etalab::lab {

using mp::BigReal;
using mp::Precision;

struct ZeroResult {
  BigReal t0;
  BigReal residual;                  // |eta(1/2 + i t0)|
  std::pair<BigReal, BigReal> bracket;  // final refinement interval, contains t0
};

inline constexpr double kZeroGridStep = 0.05;
inline constexpr double kAcceptResidual = 1e-20;
inline constexpr double kNoZeroResidual = 1e-6;

// Zero of eta on the critical line inside (lo, hi), width <= 5: grid scan of
// |eta(1/2 + it)| then golden-section refinement of the smallest grid value.
// NoZeroError if the refined residual stays >= 1e-6; PrecisionError if it
// lands between 1e-20 and 1e-6.
ZeroResult locate_zero(const BigReal& lo, const BigReal& hi, Precision prec);

// Every zero in (lo, hi), width <= 100: each grid local minimum is refined
// and kept when it passes the acceptance threshold. Ascending in t.
std::vector<ZeroResult> locate_zeros(const BigReal& lo, const BigReal& hi, Precision prec);

}  // namespace etalab::lab
