#pragma once

#include "etalab/eta/types.hpp"

namespace etalab::feq {

using mp::BigComplex;
using mp::BigReal;
using mp::Precision;

enum class FactorKind { kZetaChi, kEtaLambda };

struct FactorValue {
  BigComplex value;
  FactorKind kind;
};

struct RatioResult {
  BigComplex value;
  bool near_zero_flag;  // |eta(s)| < 2^{-prec/2} (1 + |eta(1 - s)|)
};

struct Residuals {
  BigReal zeta_resid;  // |zeta(s) - chi(s) zeta(1 - s)|
  BigReal eta_resid;   // |eta(1 - s) - lambda(s) eta(s)|
};

// chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s), so zeta(s) = chi(s) zeta(1 - s).
// PoleError when 1 - s is a non-positive integer.
FactorValue zeta_chi(const BigComplex& s, Precision prec);

// lambda(s) = (2 - 2^{s+1}) / (2^s - 2) pi^{-s} cos(pi s / 2) Gamma(s), so
// eta(1 - s) = lambda(s) eta(s). DomainError ("singular factor") when
// |2^s - 2| < 2^{8-prec}.
FactorValue eta_lambda(const BigComplex& s, Precision prec);

// The same factor rearranged as 2 (1 - 2^s) (2 pi)^{-s} cos(pi s / 2) Gamma(s) / (1 - 2^{1-s}).
BigComplex eta_lambda_reduced(const BigComplex& s, Precision prec);

// eta(1 - s) / eta(s) from two eta_full evaluations, 0 < Re(s) < 1. If eta(s)
// is exactly zero the value is lambda(s), the continuous extension.
RatioResult eta_ratio_direct(const BigComplex& s, Precision prec);

// Both functional-equation residuals, 0 < Re(s) < 1.
Residuals functional_residual(const BigComplex& s, Precision prec);

}  // namespace etalab::feq
