#include "etalab/eta/hurwitz.hpp"

#include <cmath>
#include <optional>

#include "etalab/mp/rational.hpp"
#include "etalab/mp/special.hpp"

namespace etalab::eta {

namespace {

constexpr double kLog2TwoPi = 2.6514961294723187;

long ceil_log2(double x) { return x <= 1.0 ? 0 : static_cast<long>(std::ceil(std::log2(x))); }

// log2 of the smallest estimated Bernoulli correction for k <= max_terms at
// shift point n: |B_2k|/(2k)! ~ 2 (2 pi)^{-2k}, times |(s)_{2k-1}| n^{-sigma-2k+1}.
double best_correction_log2(double sigma, double t, double n, long max_terms) {
  double poch = std::log2(std::hypot(sigma, t));
  double best = 1e300;
  for (long k = 1; k <= max_terms; ++k) {
    const double term = 1.0 - 2.0 * static_cast<double>(k) * kLog2TwoPi + poch -
                        (sigma + 2.0 * static_cast<double>(k) - 1.0) * std::log2(n);
    best = std::min(best, term);
    poch += std::log2(std::hypot(sigma + 2.0 * static_cast<double>(k) - 1.0, t)) +
            std::log2(std::hypot(sigma + 2.0 * static_cast<double>(k), t));
  }
  return best;
}

struct Attempt {
  std::optional<EvalResult> result;
  bool diverged = false;
};

Attempt euler_maclaurin(const BigComplex& s, const BigReal& a, Precision prec, const EMConfig& cfg,
                        long shift_target) {
  const double sigma = s.re().to_double();
  const double t = s.im().to_double();
  const long base_bits = prec.bits() + cfg.guard_bits + ceil_log2(std::hypot(sigma, t) + 2.0);

  // Shift point: the estimated best correction must sit below 2^{-base_bits}
  // relative to the half term N^{-sigma}.
  const double a_d = a.to_double();
  double target = std::max(static_cast<double>(shift_target), a_d);
  for (int i = 0; i < 200; ++i) {
    const double need = -static_cast<double>(base_bits) - sigma * std::log2(target) - 4.0;
    if (best_correction_log2(sigma, t, target, cfg.max_correction_terms) <= need) break;
    target *= 1.25;
  }
  const long shift = target > a_d ? static_cast<long>(std::ceil(target - a_d)) : 0;
  const Precision wp = Precision(base_bits).plus(ceil_log2(a_d + static_cast<double>(shift) + 2.0));

  const BigComplex sw = s.at(wp);
  const BigReal aw = a.at(Precision(std::max(wp.bits(), a.prec().bits())));
  const BigComplex neg_s = -sw;

  BigComplex acc(wp);
  for (long k = 0; k < shift; ++k) {
    acc += mp::complex_power(aw + BigReal(k, aw.prec()), neg_s, wp);
  }

  const BigReal n_shift = (aw + BigReal(shift, aw.prec())).at(wp);
  const BigComplex n_pow = mp::complex_power(n_shift, neg_s, wp);  // N^{-s}
  const BigComplex one(BigReal(1L, wp));
  acc += n_pow * n_shift / (sw - one);
  acc += n_pow / BigReal(2L, wp);

  const BigReal n_inv = BigReal(1L, wp) / n_shift;
  const BigReal n_inv2 = n_inv * n_inv;
  BigComplex poch = sw;                 // (s)_{2k-1}
  BigComplex power = n_pow * n_inv;     // N^{-s-2k+1}
  BigReal factorial(2L, wp);            // (2k)!
  const BigReal tol = mp::ldexp(BigReal(1L, wp), -wp.bits());

  std::optional<BigReal> previous;
  BigReal last(wp);
  for (long k = 1; k <= cfg.max_correction_terms; ++k) {
    const BigReal coeff = mp::ExactRational(mp::bernoulli_even(k)).to_real(wp) / factorial;
    const BigComplex term = poch * power * coeff;
    last = mp::abs(term);
    if (previous && k > 2 && last > *previous) return {std::nullopt, true};
    acc += term;
    if (last < tol * mp::abs(acc)) {
      const BigReal err = last + mp::abs(acc) * mp::ldexp(BigReal(1L, wp), 4 - wp.bits());
      return {EvalResult{acc.at(prec), err.at(prec), EvalMethod::kEulerMaclaurin}, false};
    }
    previous = last;
    poch *= (sw + BigComplex(BigReal(2 * k - 1, wp))) * (sw + BigComplex(BigReal(2 * k, wp)));
    power *= n_inv2;
    factorial *= BigReal((2 * k + 1) * (2 * k + 2), wp);
  }
  // Cap reached while terms still shrink: usable, with the last term as the bound.
  const BigReal err = last + mp::abs(acc) * mp::ldexp(BigReal(1L, wp), 4 - wp.bits());
  Attempt capped{EvalResult{acc.at(prec), err.at(prec), EvalMethod::kEulerMaclaurin}, false};
  if (last > mp::ldexp(mp::abs(acc), -prec.bits())) capped.diverged = true;
  return capped;
}

}  // namespace

EvalResult hurwitz_zeta(const BigComplex& s, const BigReal& a, Precision prec, const EMConfig& cfg) {
  cfg.validate(prec);
  if (s.re().sign() <= 0) throw DomainError("hurwitz_zeta needs Re(s) > 0");
  if (s.im().is_zero() && s.re() == BigReal(1L, s.prec())) {
    throw PoleError("zeta(s, a) has a pole at s = 1", 1);
  }
  if (a.sign() <= 0) throw DomainError("hurwitz_zeta needs a > 0");

  Attempt first = euler_maclaurin(s, a, prec, cfg, cfg.shift_target);
  if (first.result && !first.diverged) return *first.result;
  Attempt second = euler_maclaurin(s, a, prec, cfg, 2 * cfg.shift_target);
  if (second.result) return *second.result;
  throw ConfigError("Euler-Maclaurin corrections diverge; raise shift_target or max_correction_terms");
}

}  // namespace etalab::eta
