#include "etalab/lab/probes.hpp"

#include <cmath>

#include "etalab/eta/tail.hpp"
#include "etalab/mp/special.hpp"

namespace etalab::lab {

namespace {

long ceil_log2(double x) { return x <= 1.0 ? 0 : static_cast<long>(std::ceil(std::log2(x))); }

BigComplex tail(const BigComplex& s, std::uint64_t n, Precision prec) {
  return eta::tail_remainder(s, TailIndex(n), prec).value;
}

ProbeRow row(TailIndex n, BigComplex quantity, const BigComplex& limit, Precision prec) {
  BigReal dev = mp::abs(quantity - limit).at(prec);
  return {n, quantity.at(prec), std::move(dev)};
}

void require_positive(const Schedule& sched) {
  if (sched.values().front().value() == 0) throw DomainError("probe schedules start at n >= 1");
}

}  // namespace

Schedule::Schedule(std::vector<TailIndex> n_values) : n_(std::move(n_values)) {
  if (n_.size() < 2) throw DomainError("a schedule needs at least two n values");
  for (std::size_t i = 1; i < n_.size(); ++i) {
    if (!(n_[i - 1] < n_[i])) throw DomainError("schedule values must be strictly increasing");
  }
}

Schedule Schedule::geometric(std::uint64_t lo, std::uint64_t hi, std::uint64_t factor) {
  if (lo == 0 || hi <= lo) throw DomainError("geometric schedule needs 0 < lo < hi");
  if (factor < 2) throw DomainError("geometric schedule factor must be >= 2");
  std::vector<TailIndex> out;
  for (std::uint64_t n = lo; n < hi; n = n > hi / factor ? hi : n * factor) {
    out.emplace_back(n);
  }
  out.emplace_back(hi);
  return Schedule(std::move(out));
}

Lemma1Series lemma1_ratios(const BigComplex& s, const Schedule& sched, Precision prec) {
  require_positive(sched);
  const Precision wp = prec.plus(8);
  const BigComplex one(BigReal(1L, wp));
  Lemma1Series out{{"-R_{n-1}/R_n", one.at(prec), {}}, {"-R_{n+1}/R_n", one.at(prec), {}}};
  for (const TailIndex n : sched.values()) {
    const BigComplex r = tail(s, n.value(), wp);
    if (r.is_zero()) {
      out.backward.rows.push_back({n, std::nullopt, std::nullopt});
      out.forward.rows.push_back({n, std::nullopt, std::nullopt});
      continue;
    }
    out.backward.rows.push_back(row(n, -(tail(s, n.value() - 1, wp) / r), one, prec));
    out.forward.rows.push_back(row(n, -(tail(s, n.value() + 1, wp) / r), one, prec));
  }
  return out;
}

ProbeSeries f_sequence(const BigComplex& s, const Schedule& sched, Precision prec) {
  const Precision wp = prec.plus(8);
  const BigComplex two(BigReal(2L, wp));
  ProbeSeries out{"F_n", two.at(prec), {}};
  for (const TailIndex n : sched.values()) {
    const BigComplex r = tail(s, n.value(), wp);
    if (r.is_zero()) {
      out.rows.push_back({n, std::nullopt, std::nullopt});
      continue;
    }
    BigComplex lead = mp::complex_power(n.to_real(wp) + BigReal(1L, wp), -s.at(wp), wp);
    if (!n.is_even()) lead = -lead;
    out.rows.push_back(row(n, lead / r, two, prec));
  }
  return out;
}

ProbeRow eps_scaled_row(const BigComplex& s, TailIndex n, const BigComplex& tail_value,
                        Precision prec) {
  const Precision wp = prec.plus(8 + 2 * ceil_log2(static_cast<double>(n.value()) + 1.0));
  // T_n at the tail's own precision, so a tail equal to T_n gives exactly 0.
  const BigComplex eps = tail_value.at(wp) - eta::tail_approx(s, n, tail_value.prec()).at(wp);
  const BigReal base = n.to_real(wp) + BigReal(eta::kTailOffset, wp);
  const BigComplex scaled = eps * mp::complex_power(base, s.at(wp), wp);
  return row(n, scaled, BigComplex(prec), prec);
}

ProbeSeries eps_scaled(const BigComplex& s, const Schedule& sched, Precision prec) {
  ProbeSeries out{"eps_n (n+0.5)^s", BigComplex(prec), {}};
  for (const TailIndex n : sched.values()) {
    const Precision wp = prec.plus(8 + 2 * ceil_log2(static_cast<double>(n.value()) + 1.0));
    out.rows.push_back(eps_scaled_row(s, n, tail(s, n.value(), wp), prec));
  }
  return out;
}

UniformScan uniform_bound_scan(const BigReal& sigma, const std::vector<BigReal>& t_grid,
                               TailIndex n, Precision prec) {
  if (sigma.sign() <= 0 || sigma >= BigReal(1L, sigma.prec())) {
    throw DomainError("uniform_bound_scan needs 0 < sigma < 1");
  }
  if (t_grid.empty()) throw DomainError("uniform_bound_scan needs a non-empty t grid");
  if (n.value() == 0) throw DomainError("uniform_bound_scan needs n >= 1");
  const Precision wp = prec.plus(8);
  BigReal sup(prec);
  BigReal t_at(prec);
  for (const BigReal& t : t_grid) {
    const BigReal r = mp::abs(tail(BigComplex(sigma.at(wp), t.at(wp)), n.value(), wp));
    if (r > sup) {
      sup = r.at(prec);
      t_at = t.at(prec);
    }
  }
  const BigReal bound = mp::exp(-sigma.at(wp) * mp::log(n.to_real(wp))).at(prec);
  const bool pass = sup < bound;
  return {sup, t_at, bound, pass};
}

DecayFit decay_fit(const std::vector<BigReal>& n, const std::vector<BigReal>& q) {
  if (n.size() != q.size()) throw DomainError("decay_fit needs matching n and q lists");
  if (n.size() < 3) throw DomainError("decay_fit needs at least three points");
  const Precision prec = q.front().prec();
  std::vector<BigReal> xs, ys;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i].sign() <= 0 || q[i].sign() <= 0) {
      throw DomainError("decay_fit needs positive n and quantities");
    }
    xs.push_back(mp::log10(n[i].at(prec)));
    ys.push_back(mp::log10(q[i].at(prec)));
  }
  const long count = static_cast<long>(xs.size());
  BigReal sx(prec), sy(prec), sxx(prec), sxy(prec);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const BigReal denom = sxx * count - sx * sx;
  if (denom.is_zero()) throw DomainError("decay_fit needs at least two distinct n");
  const BigReal slope = (sxy * count - sx * sy) / denom;
  const BigReal intercept = (sy - slope * sx) / count;
  return {slope, intercept};
}

DecayFit decay_fit(const ProbeSeries& series) {
  std::vector<BigReal> n, q;
  for (const ProbeRow& r : series.rows) {
    if (!r.deviation) continue;
    n.push_back(r.n.to_real(r.deviation->prec()));
    q.push_back(*r.deviation);
  }
  return decay_fit(n, q);
}

}  // namespace etalab::lab
