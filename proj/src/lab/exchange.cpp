#include "etalab/lab/exchange.hpp"

#include <algorithm>

#include "etalab/eta/series.hpp"
#include "etalab/eta/tail.hpp"
#include "etalab/feq/functional.hpp"
#include "etalab/mp/special.hpp"

namespace etalab::lab {

std::vector<BigReal> default_offsets(Precision prec) {
  return {BigReal(0L, prec), BigReal::parse("1e-3", prec), BigReal::parse("1e-2", prec),
          BigReal::parse("1e-1", prec)};
}

ExchangeReport exchange_report(const BigReal& sigma, const BigReal& t0, const Schedule& sched,
                               const std::vector<BigReal>& offsets, Precision prec) {
  if (sigma.sign() <= 0 || sigma >= BigReal(1L, sigma.prec())) {
    throw DomainError("exchange_report needs 0 < sigma < 1");
  }
  if (offsets.empty()) throw DomainError("exchange_report needs at least one offset");
  std::vector<BigReal> dts;
  for (const BigReal& dt : offsets) {
    if (dt.sign() < 0) throw DomainError("exchange offsets must be >= 0");
    dts.push_back(dt.at(prec));
  }
  std::sort(dts.begin(), dts.end(), [](const BigReal& a, const BigReal& b) { return a < b; });

  const Precision wp = prec.plus(16);
  const BigComplex one(BigReal(1L, wp));
  const BigReal half = BigReal::parse("0.5", wp);
  const bool critical = sigma.at(wp) == half;
  const std::vector<TailIndex>& ns = sched.values();
  if (ns.front().value() == 0) throw DomainError("exchange schedules start at n >= 1");

  // per_offset[j][i] is the row for (ns[i], dts[j]).
  std::vector<std::vector<ExchangeRow>> per_offset;
  for (const BigReal& dt : dts) {
    const BigComplex s(sigma.at(wp), t0.at(wp) + dt.at(wp));
    const BigComplex reflected = one - s;
    const BigComplex lambda = feq::eta_lambda(s, wp).value;
    const auto sums = eta::partial_sum_pairs(s, ns, wp);
    std::vector<ExchangeRow> rows;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const TailIndex n = ns[i];
      const BigComplex rs = eta::tail_remainder(s, n, wp).value;
      const BigComplex rr = eta::tail_remainder(reflected, n, wp).value;
      const BigComplex tail_ratio = rr / rs;
      const BigComplex growth =
          mp::complex_power(n.to_real(wp) + half, s * BigReal(2L, wp) - one, wp);

      const BigComplex& eta_s = sums[i].first.value;
      const BigComplex& eta_r = sums[i].second.value;
      const BigReal threshold =
          mp::ldexp(BigReal(1L, wp) + mp::abs(eta_r), -(prec.bits() / 2));
      const bool flagged = mp::abs(eta_s) < threshold;

      ExchangeRow row{n,       dt,      std::nullopt, tail_ratio.at(prec), growth.at(prec),
                      lambda.at(prec), flagged, std::nullopt};
      if (!flagged) {
        const BigComplex partial = eta_r / eta_s;
        row.partial_ratio = partial.at(prec);
        if (critical && dt.is_zero()) row.zero_gap = mp::abs(partial - tail_ratio).at(prec);
      }
      rows.push_back(std::move(row));
    }
    per_offset.push_back(std::move(rows));
  }

  ExchangeReport report{sigma.at(prec), t0.at(prec), dts, {}};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (auto& rows : per_offset) report.rows.push_back(std::move(rows[i]));
  }
  return report;
}

}  // namespace etalab::lab
