#include "doctest.h"
#include "etalab/eta/hurwitz.hpp"
#include "etalab/eta/series.hpp"
#include "etalab/feq/functional.hpp"
#include "etalab/mp/special.hpp"
#include "test_support.hpp"

using namespace etalab;
using namespace etalab::feq;
using etalab::testing::agreeing_bits;
using etalab::testing::literal;
using etalab::testing::StripSampler;

namespace {

const Precision kPrec(192);

// First critical-line zero to 50 digits.
const char* kFirstZero = "14.134725141734693790457251983562470270784257115699";

BigComplex one() { return BigComplex(BigReal(1L, kPrec)); }

BigReal pow2(long e) { return mp::ldexp(BigReal(1L, kPrec), e); }

}  // namespace

TEST_CASE("chi factor") {
  const BigComplex half(BigReal::parse("0.5", kPrec));
  CHECK(agreeing_bits(zeta_chi(half, kPrec).value, one()) >= 180);
  CHECK(zeta_chi(half, kPrec).kind == FactorKind::kZetaChi);

  const BigComplex quarter(BigReal::parse("0.25", kPrec));
  const BigComplex expected =
      eta::zeta_strip(quarter, kPrec).value / eta::zeta_strip(one() - quarter, kPrec).value;
  CHECK(agreeing_bits(zeta_chi(quarter, kPrec).value, expected) >= 176);

  CHECK_THROWS_AS(zeta_chi(one(), kPrec), PoleError);
}

TEST_CASE("lambda factor") {
  const BigComplex half(BigReal::parse("0.5", kPrec));
  CHECK(agreeing_bits(eta_lambda(half, kPrec).value, one()) >= 180);
  CHECK(eta_lambda(half, kPrec).kind == FactorKind::kEtaLambda);

  const BigComplex s = literal("0.75", "2", kPrec);
  const BigComplex direct =
      eta::eta_full(one() - s, kPrec).value / eta::eta_full(s, kPrec).value;
  CHECK(agreeing_bits(eta_lambda(s, kPrec).value, direct) >= 172);

  const BigReal excluded_t = mp::constant_pi(kPrec) * 2L / mp::constant_ln2(kPrec);
  CHECK_THROWS_AS(eta_lambda(BigComplex(BigReal(1L, kPrec), excluded_t), kPrec), DomainError);
}

TEST_CASE("involutions and the reduced lambda form") {
  StripSampler sampler(41, 60.0);
  for (int i = 0; i < 50; ++i) {
    const BigComplex s = sampler.next(kPrec);
    const BigComplex chi = zeta_chi(s, kPrec).value * zeta_chi(one() - s, kPrec).value;
    const BigComplex lam = eta_lambda(s, kPrec).value * eta_lambda(one() - s, kPrec).value;
    CHECK(mp::abs(chi - one()) <= pow2(16 - kPrec.bits()));
    CHECK(mp::abs(lam - one()) <= pow2(16 - kPrec.bits()));
    CHECK(agreeing_bits(eta_lambda(s, kPrec).value, eta_lambda_reduced(s, kPrec)) >= 176);
  }
}

TEST_CASE("direct ratio") {
  const BigComplex half(BigReal::parse("0.5", kPrec));
  const RatioResult r = eta_ratio_direct(half, kPrec);
  CHECK(r.value == one());
  CHECK_FALSE(r.near_zero_flag);

  const BigComplex s = literal("0.75", "2", kPrec);
  const RatioResult r2 = eta_ratio_direct(s, kPrec);
  CHECK_FALSE(r2.near_zero_flag);
  const BigComplex lam = eta_lambda(s, kPrec).value;
  CHECK(mp::abs(r2.value - lam) <= pow2(20 - kPrec.bits()) * mp::abs(lam));

  const BigComplex at_zero(BigReal::parse("0.5", kPrec), BigReal::parse(kFirstZero, kPrec));
  CHECK(eta_ratio_direct(at_zero, kPrec).near_zero_flag);

  CHECK_THROWS_AS(eta_ratio_direct(one(), kPrec), DomainError);
}

TEST_CASE("consistency of lambda and the direct ratio") {
  StripSampler sampler(43, 40.0);
  for (int i = 0; i < 20; ++i) {
    const BigComplex s = sampler.next(kPrec);
    const RatioResult r = eta_ratio_direct(s, kPrec);
    if (r.near_zero_flag) continue;
    const BigComplex lam = eta_lambda(s, kPrec).value;
    CHECK(mp::abs(r.value - lam) <= pow2(20 - kPrec.bits()) * mp::abs(lam));
  }
}

TEST_CASE("residuals") {
  const BigComplex half(BigReal::parse("0.5", kPrec));
  const Residuals at_half = functional_residual(half, kPrec);
  CHECK(at_half.zeta_resid <= pow2(20 - kPrec.bits()) * BigReal(2L, kPrec));
  CHECK(at_half.eta_resid <= pow2(20 - kPrec.bits()));

  const Residuals sample = functional_residual(literal("0.1234", "56.789", kPrec), kPrec);
  CHECK(sample.eta_resid <= BigReal::parse("1e-40", kPrec));

  StripSampler sampler(47, 60.0);
  for (int i = 0; i < 20; ++i) {
    const BigComplex s = sampler.next(kPrec);
    const Residuals r = functional_residual(s, kPrec);
    const BigReal zscale = mp::abs(eta::zeta_strip(s, kPrec).value) + BigReal(1L, kPrec);
    const BigReal escale = mp::abs(eta::eta_full(one() - s, kPrec).value) + BigReal(1L, kPrec);
    CHECK(r.zeta_resid <= pow2(24 - kPrec.bits()) * zscale);
    CHECK(r.eta_resid <= pow2(24 - kPrec.bits()) * escale);
  }
}

TEST_CASE("eta to zeta conversion matches the Hurwitz route") {
  StripSampler sampler(53, 60.0);
  for (int i = 0; i < 20; ++i) {
    const BigComplex s = sampler.next(kPrec);
    const BigComplex via_eta = eta::zeta_strip(s, kPrec).value;
    const BigComplex via_hurwitz = eta::hurwitz_zeta(s, BigReal(1L, kPrec), kPrec).value;
    CHECK(mp::relative_distance(via_eta, via_hurwitz) <= pow2(16 - kPrec.bits()));
  }
}
