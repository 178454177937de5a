#pragma once

#include "etalab/mp/big_complex.hpp"

namespace etalab::mp {

// Correctly rounded pi and ln 2.
BigReal constant_pi(Precision prec);
BigReal constant_ln2(Precision prec);

// base^exponent = exp(exponent * ln base) for real base > 0. The logarithm and
// the phase are carried with enough guard bits that the result is within a
// few ulps at prec even when |Im(exponent) * ln base| is large.
BigComplex complex_power(const BigReal& base, const BigComplex& exponent, Precision prec);

// Gamma(z) via Spouge's approximation, with argument shifting and reflection
// for Re z < 1/2. Throws PoleError at non-positive integers.
BigComplex complex_gamma(const BigComplex& z, Precision prec);

// Gamma(z) via the Stirling series after shifting z to large modulus. Shares
// no code with complex_gamma beyond the elementary functions; used as an
// independent check.
BigComplex gamma_stirling(const BigComplex& z, Precision prec);

// Spouge parameter a for a target precision: relative truncation error is
// below a^{-1/2} (2 pi)^{-(a + 1/2)}.
long spouge_parameter(Precision prec);

}  // namespace etalab::mp
