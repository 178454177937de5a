#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "etalab/eta/types.hpp"

namespace etalab::eta {

// Direct summation budget for partial sums.
inline constexpr std::uint64_t kPartialSumBudget = 10'000'000;

// eta_n(s) = sum_{k=1}^{n} (-1)^{k-1} k^{-s}. Summed at prec plus
// ceil(log2 n) + 8 guard bits. Throws BudgetError for n > 10^7.
EvalResult partial_sum(const BigComplex& s, TailIndex n, Precision prec);

// eta_n(s) for every n in `checkpoints` (ascending) in a single pass.
std::vector<EvalResult> partial_sums(const BigComplex& s, std::span<const TailIndex> checkpoints,
                                     Precision prec);

// (eta_n(s), eta_n(1 - s)) for every checkpoint. Shares log k and the phase
// between the two series.
std::vector<std::pair<EvalResult, EvalResult>> partial_sum_pairs(
    const BigComplex& s, std::span<const TailIndex> checkpoints, Precision prec);

// Number of terms of the Chebyshev acceleration for `bits` of accuracy:
// ceil(digits * ln 10 / ln(3 + sqrt 8)) + 8.
long acceleration_terms(long bits);

// Extra bits the acceleration needs for complex s: log2(Gamma(sigma) / |Gamma(s)|),
// the ratio between the total variation of the moment weight and the sum.
long acceleration_inflation_bits(const BigComplex& s);

// sum_{k>=0} (-1)^k term(k) by the Cohen-Rodriguez Villegas-Zagier scheme with
// m terms; term(k) must be evaluated at `wp`.
BigComplex accelerate_alternating(const std::function<BigComplex(long)>& term, long m,
                                  Precision wp);

// eta(s) for Re(s) > 0 by the acceleration scheme.
EvalResult eta_full(const BigComplex& s, Precision prec);

// eta(s) = 2^{-s} [zeta(s, 1/2) - zeta(s, 1)], independent of eta_full.
EvalResult eta_hurwitz_route(const BigComplex& s, Precision prec);

// zeta(s) = eta(s) / (1 - 2^{1-s}) for Re(s) > 0.
EvalResult zeta_strip(const BigComplex& s, Precision prec);

}  // namespace etalab::eta
