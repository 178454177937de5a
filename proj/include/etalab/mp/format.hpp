#pragma once

#include <string>

#include "etalab/mp/big_complex.hpp"

namespace etalab::mp {

// Fixed-point decimal, truncated toward zero, always sign-prefixed ("+" or
// "-") with exactly `digits` digits after the point. Throws PrecisionError if
// the significant digits would exceed the precision's decimal capacity.
std::string format_fixed(const BigReal& x, int digits);

// Scientific notation "d.ddddEe" with `significant` digits, truncated toward
// zero, sign-prefixed ("-" only for negatives). "0" for zero.
std::string format_sci(const BigReal& x, int significant);

// Value of the truncated fixed-point rendering, parsed back at x's precision.
BigReal truncate_decimal(const BigReal& x, int digits);

// x rounded half away from zero to `digits` places after the point.
BigReal round_decimal(const BigReal& x, int digits);

// Number of leading digits after the decimal point on which two fixed-point
// strings (as produced by format_fixed) agree. Zero when the signs differ.
int agreeing_fraction_digits(const std::string& a, const std::string& b);

}  // namespace etalab::mp
