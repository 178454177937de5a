#include "etalab/eta/tail.hpp"

#include <cmath>

#include "etalab/eta/hurwitz.hpp"
#include "etalab/eta/series.hpp"
#include "etalab/mp/special.hpp"

namespace etalab::eta {

namespace {

long ceil_log2(double x) { return x <= 1.0 ? 0 : static_cast<long>(std::ceil(std::log2(x))); }

bool is_one(const BigComplex& s) {
  return s.im().is_zero() && s.re() == BigReal(1L, s.prec());
}

BigComplex signed_by_parity(BigComplex z, TailIndex n) { return n.is_even() ? z : -z; }

TailResult hurwitz_pair(const BigComplex& s, TailIndex n, Precision prec) {
  const long guard = hurwitz_pair_guard_bits(n);
  const Precision wp = prec.plus(guard);
  const BigReal n_real = n.to_real(wp);
  const BigReal a1 = (n_real + BigReal(1L, wp)) / 2L;
  const BigReal a2 = (n_real + BigReal(2L, wp)) / 2L;
  const EvalResult z1 = hurwitz_zeta(s, a1, wp);
  const EvalResult z2 = hurwitz_zeta(s, a2, wp);
  const BigComplex diff = z1.value - z2.value;

  const double lost = std::max(mp::abs(z1.value).log2_abs(), mp::abs(z2.value).log2_abs()) -
                      mp::abs(diff).log2_abs();
  if (diff.is_zero() || lost > static_cast<double>(guard - 8)) {
    throw PrecisionError("Hurwitz-pair difference at n = " + std::to_string(n.value()) +
                         " lost more bits than the " + std::to_string(guard) +
                         " guard bits cover; raise the precision");
  }
  const BigComplex scale = mp::complex_power(BigReal(2L, wp), -s.at(wp), wp);
  const BigComplex value = signed_by_parity(scale * diff, n);
  const BigReal err = mp::abs(scale) * (z1.err_bound + z2.err_bound) +
                      mp::abs(value) * mp::ldexp(BigReal(1L, wp), 2 - prec.bits());
  return {n, value.at(prec), err.at(prec), TailMethod::kHurwitzPair};
}

TailResult direct_accel(const BigComplex& s, TailIndex n, Precision prec) {
  const long inflation = acceleration_inflation_bits(s);
  const long m = acceleration_terms(prec.bits() + inflation);
  const Precision wp = prec.plus(16 + ceil_log2(static_cast<double>(m)));
  const BigComplex neg_s = -s.at(wp);
  const BigReal first = n.to_real(wp) + BigReal(1L, wp);
  const BigComplex sum = accelerate_alternating(
      [&](long j) { return mp::complex_power(first + BigReal(j, wp), neg_s, wp); }, m, wp);
  const BigComplex value = signed_by_parity(sum, n);

  const double trunc_log2 = static_cast<double>(inflation + 1) -
                            static_cast<double>(m) * std::log2(3.0 + std::sqrt(8.0)) -
                            s.re().to_double() * std::log2(static_cast<double>(n.value()) + 1.0);
  BigReal err = mp::ldexp(BigReal(1L, prec), static_cast<long>(std::ceil(trunc_log2)));
  err += mp::abs(value).at(prec) * mp::ldexp(BigReal(1L, prec), 2 - prec.bits());
  return {n, value.at(prec), err, TailMethod::kDirectAccel};
}

TailResult brute(const BigComplex& s, TailIndex n, Precision prec) {
  if (n.value() > kBruteBudget) {
    throw BudgetError("brute tail limited to n <= 10^6, got n = " + std::to_string(n.value()));
  }
  const Precision wp = prec.plus(16 + ceil_log2(static_cast<double>(n.value()) + 1.0));
  const EvalResult eta = eta_full(s, wp);
  const EvalResult partial = partial_sum(s, n, wp);
  const BigComplex value = eta.value - partial.value;
  const BigReal err = eta.err_bound + partial.err_bound +
                      mp::abs(value) * mp::ldexp(BigReal(1L, wp), 2 - prec.bits());
  return {n, value.at(prec), err.at(prec), TailMethod::kBrute};
}

}  // namespace

long hurwitz_pair_guard_bits(TailIndex n) {
  return ceil_log2(static_cast<double>(n.value()) + 1.0) + 32;
}

TailResult tail_remainder(const BigComplex& s, TailIndex n, Precision prec, TailMethod method) {
  if (s.re().sign() <= 0) throw DomainError("tail_remainder needs Re(s) > 0");
  switch (method) {
    case TailMethod::kHurwitzPair:
      if (is_one(s)) return direct_accel(s, n, prec);
      return hurwitz_pair(s, n, prec);
    case TailMethod::kDirectAccel:
      return direct_accel(s, n, prec);
    case TailMethod::kBrute:
      return brute(s, n, prec);
  }
  throw DomainError("unknown tail method");
}

BigComplex tail_approx(const BigComplex& s, TailIndex n, Precision prec, double offset) {
  if (offset != kTailOffset && offset != 0.0 && offset != 1.0) {
    throw DomainError("tail_approx offset must be 0.5 (or 0 / 1 for the bracketing variants)");
  }
  const Precision wp = prec.plus(8);
  const BigReal base = n.to_real(wp) + BigReal(offset, wp);
  if (base.sign() <= 0) throw DomainError("tail_approx needs n + offset > 0");
  const BigComplex denom = mp::complex_power(base, s.at(wp), wp) * BigReal(2L, wp);
  const BigComplex value = BigComplex(BigReal(1L, wp)) / denom;
  return signed_by_parity(value, n).at(prec);
}

ErrorReport error_components(TailIndex n, const BigComplex& tail, const BigComplex& approx) {
  if (tail.is_zero()) throw DomainError("relative error undefined: R_n vanishes");
  const BigComplex eps = tail - approx;
  ErrorReport report{n, eps, std::nullopt, std::nullopt, mp::abs(eps) / mp::abs(tail)};
  if (!tail.re().is_zero()) report.eps_r = mp::abs(eps.re() / tail.re());
  if (!tail.im().is_zero()) report.eps_i = mp::abs(eps.im() / tail.im());
  return report;
}

ErrorReport error_term(const BigComplex& s, TailIndex n, Precision prec) {
  // R_n - T_n cancels about 2 log2(n) bits.
  const Precision wp = prec.plus(8 + 2 * ceil_log2(static_cast<double>(n.value()) + 1.0));
  const TailResult r = tail_remainder(s, n, wp);
  ErrorReport full = error_components(n, r.value, tail_approx(s, n, wp));
  ErrorReport out{n, full.eps_n.at(prec), std::nullopt, std::nullopt, full.eps_rel.at(prec)};
  if (full.eps_r) out.eps_r = full.eps_r->at(prec);
  if (full.eps_i) out.eps_i = full.eps_i->at(prec);
  return out;
}

}  // namespace etalab::eta
