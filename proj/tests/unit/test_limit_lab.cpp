#include <cmath>
#include <vector>

#include "doctest.h"
#include "etalab/eta/hurwitz.hpp"
#include "etalab/eta/series.hpp"
#include "etalab/eta/tail.hpp"
#include "etalab/feq/functional.hpp"
#include "etalab/lab/exchange.hpp"
#include "etalab/lab/probes.hpp"
#include "etalab/lab/zeros.hpp"
#include "etalab/mp/format.hpp"
#include "etalab/mp/special.hpp"
#include "test_support.hpp"

using namespace etalab;
using namespace etalab::lab;
using etalab::testing::literal;
using etalab::testing::oracle_zeros;
using etalab::testing::within;

namespace {

const Precision kPrec(192);

BigComplex sample_s() { return literal("0.1234", "56.789", kPrec); }

BigReal num(const char* text) { return BigReal::parse(text, kPrec); }

}  // namespace

TEST_CASE("schedules") {
  const Schedule g = Schedule::geometric(1000, 1'000'000);
  REQUIRE(g.size() == 4);
  CHECK(g.values()[3].value() == 1'000'000);
  const Schedule odd = Schedule::geometric(100, 350);
  REQUIRE(odd.size() == 2);
  CHECK(odd.values()[1].value() == 350);
  CHECK_THROWS_AS(Schedule({TailIndex(5)}), DomainError);
  CHECK_THROWS_AS(Schedule({TailIndex(5), TailIndex(5)}), DomainError);
  CHECK_THROWS_AS(Schedule::geometric(10, 10), DomainError);
}

TEST_CASE("closed forms at s = 1") {
  const BigComplex one(BigReal(1L, kPrec));
  const Schedule sched({TailIndex(2), TailIndex(3)});
  const BigReal ln2 = mp::constant_ln2(kPrec);
  const BigReal half = num("0.5");

  const Lemma1Series l1 = lemma1_ratios(one, sched, kPrec);
  const BigReal expected_l1 = (BigReal(1L, kPrec) - ln2) / (ln2 - half);
  CHECK(mp::abs(l1.backward.rows[0].quantity->re() - expected_l1) < num("1e-50"));
  CHECK(mp::format_fixed(l1.backward.rows[0].quantity->re(), 5) == "+1.58869");

  const ProbeSeries f = f_sequence(one, sched, kPrec);
  const BigReal expected_f = BigReal(1L, kPrec) / 3L / (ln2 - half);
  CHECK(mp::abs(f.rows[0].quantity->re() - expected_f) < num("1e-50"));

  const ProbeSeries e = eps_scaled(one, sched, kPrec);
  const BigReal expected_e = (ln2 - num("0.7")) * num("2.5");
  CHECK(mp::abs(e.rows[0].quantity->re() - expected_e) < num("1e-50"));
  CHECK(mp::format_fixed(e.rows[0].quantity->re(), 5) == "-0.01713");
}

TEST_CASE("neighbour tail ratios") {
  const Lemma1Series l1 = lemma1_ratios(sample_s(), Schedule::geometric(1000, 1'000'000), kPrec);
  const auto& rows = l1.backward.rows;
  CHECK(*rows.back().deviation <= num("1e-4"));
  CHECK(*l1.forward.rows.back().deviation <= num("1e-4"));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(*rows[i].deviation < *rows[i - 1].deviation);

  // deviation ~ C / n over the top half.
  const double c_mid = rows[2].deviation->to_double() * 1e5;
  const double c_top = rows[3].deviation->to_double() * 1e6;
  CHECK(std::fabs(c_top / c_mid - 1.0) < 0.2);
}

TEST_CASE("F_n sequence") {
  const ProbeSeries f = f_sequence(sample_s(), Schedule::geometric(1000, 1'000'000), kPrec);
  CHECK(*f.rows.back().deviation <= num("1e-3"));
  for (std::size_t i = 1; i < f.rows.size(); ++i) {
    CHECK(*f.rows[i].deviation < *f.rows[i - 1].deviation);
  }
  const double slope = decay_fit(f).slope.to_double();
  CHECK(within(slope, -1.0, 0.1));
}

TEST_CASE("scaled error term") {
  const ProbeSeries e = eps_scaled(sample_s(), Schedule::geometric(100, 100'000'000), kPrec);
  for (std::size_t i = 1; i < e.rows.size(); ++i) {
    CHECK(*e.rows[i].deviation < *e.rows[i - 1].deviation);
  }
  CHECK(*e.rows.back().deviation <= num("1e-8"));

  const TailIndex n(12345);
  const ProbeRow synthetic =
      eps_scaled_row(sample_s(), n, eta::tail_approx(sample_s(), n, kPrec), kPrec);
  CHECK(synthetic.deviation->is_zero());
}

TEST_CASE("uniform bound scan") {
  std::vector<BigReal> grid;
  for (long t = 0; t <= 100; ++t) grid.emplace_back(t, kPrec);

  const UniformScan a = uniform_bound_scan(num("0.5"), grid, TailIndex(100), kPrec);
  CHECK(a.pass);
  // The maximum sits at t = 100, where |R_100| exceeds |T_100| = 0.049875.
  CHECK(within(a.sup_tail.to_double(), 0.0567531496618324, 1e-15));
  CHECK(within(a.t_at_sup.to_double(), 100.0, 0.0));
  CHECK(within(a.bound.to_double(), 0.1, 1e-16));
  const UniformScan low = uniform_bound_scan(num("0.5"), {BigReal(0L, kPrec)}, TailIndex(100), kPrec);
  CHECK(within(low.sup_tail.to_double(), 0.0498750039056350, 1e-15));

  CHECK(uniform_bound_scan(num("0.1234"), grid, TailIndex(10'000), kPrec).pass);

  const UniformScan c = uniform_bound_scan(num("0.9"), {BigReal(0L, kPrec)}, TailIndex(1), kPrec);
  CHECK(c.pass);
  CHECK(c.bound == BigReal(1L, kPrec));
  const BigComplex s(num("0.9"));
  const BigReal brute = mp::abs(eta::tail_remainder(s, TailIndex(1), kPrec, eta::TailMethod::kBrute).value);
  CHECK(mp::abs(c.sup_tail - brute) < num("1e-50"));

  CHECK_THROWS_AS(uniform_bound_scan(num("1"), grid, TailIndex(10), kPrec), DomainError);
  CHECK_THROWS_AS(uniform_bound_scan(num("0.5"), {}, TailIndex(10), kPrec), DomainError);
}

TEST_CASE("zero locator") {
  struct Case {
    double lo, hi;
  };
  for (const Case c : {Case{14, 15}, Case{20, 22}, Case{24, 26}}) {
    const ZeroResult z = locate_zero(BigReal(c.lo, kPrec), BigReal(c.hi, kPrec), kPrec);
    const std::vector<double> oracle = oracle_zeros(c.lo, c.hi);
    REQUIRE(oracle.size() == 1);
    CHECK(std::fabs(z.t0.to_double() - oracle[0]) < 1e-6);
    CHECK(z.residual < num("1e-20"));
    CHECK(z.bracket.first <= z.t0);
    CHECK(z.t0 <= z.bracket.second);
  }
  const ZeroResult first = locate_zero(num("14"), num("15"), kPrec);
  CHECK(mp::abs(first.t0 - num("14.134725141734693790457251983562")) < num("1e-25"));

  CHECK_THROWS_AS(locate_zero(num("2"), num("3"), kPrec), NoZeroError);
  CHECK(oracle_zeros(2, 3).empty());
  CHECK_THROWS_AS(locate_zero(num("10"), num("16"), kPrec), DomainError);
}

TEST_CASE("all zeros in a range") {
  const auto a = locate_zeros(num("0"), num("20"), kPrec);
  REQUIRE(a.size() == 1);
  CHECK(within(a[0].t0.to_double(), 14.134725, 1e-6));
  const auto b = locate_zeros(num("20"), num("26"), kPrec);
  REQUIRE(b.size() == 2);
  CHECK(within(b[0].t0.to_double(), 21.022040, 1e-6));
  CHECK(within(b[1].t0.to_double(), 25.010858, 1e-6));
  CHECK(locate_zeros(num("2"), num("3"), kPrec).empty());
  CHECK_THROWS_AS(locate_zeros(num("0"), num("101"), kPrec), DomainError);
}

TEST_CASE("exchange report") {
  const BigReal t0 = num("14.134725141734693790457251983562470270784257115699");

  SUBCASE("off the critical line") {
    const std::vector<BigReal> offsets{num("0.01"), num("0")};
    const ExchangeReport r =
        exchange_report(num("0.75"), t0, Schedule::geometric(100, 100'000), offsets, kPrec);
    REQUIRE(r.rows.size() == 8);
    CHECK(r.rows[0].dt.is_zero());
    CHECK(r.rows[1].dt == num("0.01"));
    for (const ExchangeRow& row : r.rows) {
      CHECK_FALSE(row.flagged);
      CHECK_FALSE(row.zero_gap);
      const double root = std::sqrt(static_cast<double>(row.n.value()) + 0.5);
      CHECK(within(mp::abs(row.growth).to_double(), root, root * 1e-14));
      if (row.n.value() >= 10'000) {
        CHECK(within(mp::abs(row.tail_ratio).to_double() / root, 1.0, 0.01));
      }
      const BigComplex s(num("0.75"), t0 + row.dt);
      CHECK(mp::relative_distance(row.lambda, feq::eta_lambda(s, kPrec).value) < num("1e-50"));
    }
    CHECK(within(mp::abs(r.rows[4].growth).to_double(), 100.0025, 1e-6));
  }

  SUBCASE("at a zero") {
    const ExchangeReport r = exchange_report(num("0.5"), t0, Schedule::geometric(100, 100'000),
                                             {num("0")}, kPrec);
    for (const ExchangeRow& row : r.rows) {
      CHECK(mp::abs(mp::abs(row.growth) - BigReal(1L, kPrec)) < num("1e-50"));
      REQUIRE(row.zero_gap);
      CHECK(*row.zero_gap / mp::abs(row.tail_ratio) < num("1e-10"));
    }
  }

  CHECK_THROWS_AS(exchange_report(num("1"), t0, Schedule::geometric(10, 100), {num("0")}, kPrec),
                  DomainError);
  CHECK_THROWS_AS(
      exchange_report(num("0.75"), t0, Schedule::geometric(10, 100), {num("-0.1")}, kPrec),
      DomainError);
}

TEST_CASE("decay fit") {
  const std::vector<BigReal> n{num("10"), num("100"), num("1000")};
  CHECK(mp::abs(decay_fit(n, {num("3"), num("3"), num("3")}).slope) < num("1e-50"));
  const DecayFit inv = decay_fit(n, {num("0.1"), num("0.01"), num("0.001")});
  CHECK(mp::abs(inv.slope + BigReal(1L, kPrec)) < num("1e-50"));

  const std::vector<BigReal> table_n{num("1e8"), num("1e10"), num("1e12"), num("1e14")};
  const std::vector<BigReal> table_eps{num("4.0362e-14"), num("3.9546e-18"), num("3.0220e-22"),
                                       num("3.3835e-26")};
  CHECK(within(decay_fit(table_n, table_eps).slope.to_double(), -2.01, 0.01));

  CHECK_THROWS_AS(decay_fit({num("1"), num("2")}, {num("1"), num("2")}), DomainError);
  CHECK_THROWS_AS(decay_fit(n, {num("1"), num("0"), num("1")}), DomainError);
}
