#pragma once

#include "etalab/eta/types.hpp"

namespace etalab::eta {

// Offset in T_n(s) = (-1)^n / (2 (n + 0.5)^s).
inline constexpr double kTailOffset = 0.5;

// Budget for the brute method (eta(s) minus a direct partial sum).
inline constexpr std::uint64_t kBruteBudget = 1'000'000;

// Guard bits used by the Hurwitz-pair route: ceil(log2 n) + 32.
long hurwitz_pair_guard_bits(TailIndex n);

// R_n(s) = sum_{k>n} (-1)^{k-1} k^{-s}, for Re(s) > 0.
//   hurwitz-pair:  (-1)^n 2^{-s} [zeta(s,(n+1)/2) - zeta(s,(n+2)/2)]
//   direct-accel:  (-1)^n sum_j (-1)^j (n+1+j)^{-s}, accelerated
//   brute:         eta(s) - eta_n(s), n <= 10^6
// At s = 1 the Hurwitz pair has a pole in each term, so that request is
// served by direct-accel (and tagged as such).
TailResult tail_remainder(const BigComplex& s, TailIndex n, Precision prec,
                          TailMethod method = TailMethod::kHurwitzPair);

// T_n(s) = (-1)^n / (2 (n + offset)^s). The offset is fixed at 0.5 except for
// the bracketing variants 0 and 1.
BigComplex tail_approx(const BigComplex& s, TailIndex n, Precision prec,
                       double offset = kTailOffset);

// eps_n, eps_r, eps_i, eps_rel for given R_n and T_n.
ErrorReport error_components(TailIndex n, const BigComplex& tail, const BigComplex& approx);

// error_components(R_n(s), T_n(s)) with R_n from the Hurwitz pair.
ErrorReport error_term(const BigComplex& s, TailIndex n, Precision prec);

}  // namespace etalab::eta
