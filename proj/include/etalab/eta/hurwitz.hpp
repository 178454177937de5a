#pragma once

#include "etalab/eta/types.hpp"

namespace etalab::eta {

// zeta(s, a) = sum_{k>=0} (k + a)^{-s} by Euler-Maclaurin summation: direct
// terms up to a shift M, then the integral term, the half term and Bernoulli
// corrections at N = a + M.
//
// Requires Re(s) > 0, s != 1, a > 0. The correction loop stops once a term
// drops below 2^{-wp} of the running sum; if max_correction_terms binds, the
// shift is doubled and the evaluation retried once before ConfigError.
EvalResult hurwitz_zeta(const BigComplex& s, const BigReal& a, Precision prec,
                        const EMConfig& cfg);

inline EvalResult hurwitz_zeta(const BigComplex& s, const BigReal& a, Precision prec) {
  return hurwitz_zeta(s, a, prec, EMConfig::for_precision(prec));
}

}  // namespace etalab::eta
