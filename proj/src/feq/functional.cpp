#include "etalab/feq/functional.hpp"

#include "etalab/eta/series.hpp"
#include "etalab/mp/special.hpp"

namespace etalab::feq {

namespace {

constexpr long kGuard = 16;

void require_strip(const BigComplex& s, const char* what) {
  if (s.re().sign() <= 0 || s.re() >= BigReal(1L, s.prec())) {
    throw DomainError(std::string(what) + " needs 0 < Re(s) < 1");
  }
}

BigComplex one(Precision p) { return BigComplex(BigReal(1L, p)); }

BigComplex half_pi_times(const BigComplex& s, Precision wp) {
  return s.at(wp) * (mp::constant_pi(wp) / 2L);
}

}  // namespace

FactorValue zeta_chi(const BigComplex& s, Precision prec) {
  const Precision wp = prec.plus(kGuard);
  const BigComplex sw = s.at(wp);
  const BigComplex pow2 = mp::complex_power(BigReal(2L, wp), sw, wp);
  const BigComplex powpi = mp::complex_power(mp::constant_pi(wp), sw - one(wp), wp);
  const BigComplex value =
      pow2 * powpi * mp::sin(half_pi_times(sw, wp)) * mp::complex_gamma(one(wp) - sw, wp);
  return {value.at(prec), FactorKind::kZetaChi};
}

FactorValue eta_lambda(const BigComplex& s, Precision prec) {
  const Precision wp = prec.plus(kGuard);
  const BigComplex sw = s.at(wp);
  const BigReal two(2L, wp);
  const BigComplex pow2 = mp::complex_power(two, sw, wp);
  const BigComplex denom = pow2 - BigComplex(two);
  if (mp::abs(denom) < mp::ldexp(BigReal(1L, wp), 8 - prec.bits())) {
    throw DomainError("singular factor: 2^s - 2 vanishes at s = 1 + 2 pi i k / ln 2");
  }
  const BigComplex ratio = (BigComplex(two) - pow2 * two) / denom;
  const BigComplex value = ratio * mp::complex_power(mp::constant_pi(wp), -sw, wp) *
                           mp::cos(half_pi_times(sw, wp)) * mp::complex_gamma(sw, wp);
  return {value.at(prec), FactorKind::kEtaLambda};
}

BigComplex eta_lambda_reduced(const BigComplex& s, Precision prec) {
  const Precision wp = prec.plus(kGuard);
  const BigComplex sw = s.at(wp);
  const BigReal two(2L, wp);
  const BigComplex divisor = one(wp) - mp::complex_power(two, one(wp) - sw, wp);
  if (mp::abs(divisor) < mp::ldexp(BigReal(1L, wp), 8 - prec.bits())) {
    throw DomainError("singular factor: 1 - 2^{1-s} vanishes");
  }
  const BigComplex value = (one(wp) - mp::complex_power(two, sw, wp)) * two *
                           mp::complex_power(mp::constant_pi(wp) * 2L, -sw, wp) *
                           mp::cos(half_pi_times(sw, wp)) * mp::complex_gamma(sw, wp) / divisor;
  return value.at(prec);
}

RatioResult eta_ratio_direct(const BigComplex& s, Precision prec) {
  require_strip(s, "eta_ratio_direct");
  const Precision wp = prec.plus(kGuard);
  const BigComplex num = eta::eta_full(one(wp) - s.at(wp), wp).value;
  const BigComplex den = eta::eta_full(s, wp).value;
  const BigReal threshold =
      mp::ldexp(BigReal(1L, wp) + mp::abs(num), -(prec.bits() / 2));
  const bool flag = mp::abs(den) < threshold;
  if (den.is_zero()) return {eta_lambda(s, prec).value, true};
  return {(num / den).at(prec), flag};
}

Residuals functional_residual(const BigComplex& s, Precision prec) {
  require_strip(s, "functional_residual");
  const Precision wp = prec.plus(kGuard);
  const BigComplex sw = s.at(wp);
  const BigComplex reflected = one(wp) - sw;

  const BigComplex zeta_s = eta::zeta_strip(sw, wp).value;
  const BigComplex zeta_r = eta::zeta_strip(reflected, wp).value;
  const BigComplex chi = zeta_chi(sw, wp).value;

  const BigComplex eta_s = eta::eta_full(sw, wp).value;
  const BigComplex eta_r = eta::eta_full(reflected, wp).value;
  const BigComplex lambda = eta_lambda(sw, wp).value;

  return {mp::abs(zeta_s - chi * zeta_r).at(prec), mp::abs(eta_r - lambda * eta_s).at(prec)};
}

}  // namespace etalab::feq
