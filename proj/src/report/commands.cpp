#include "etalab/report/commands.hpp"

#include "etalab/eta/series.hpp"
#include "etalab/eta/tail.hpp"
#include "etalab/lab/exchange.hpp"
#include "etalab/lab/probes.hpp"
#include "etalab/lab/zeros.hpp"
#include "etalab/mp/format.hpp"
#include "etalab/mp/special.hpp"
#include "etalab/report/parse.hpp"

namespace etalab::report {

using eta::TailIndex;
using mp::BigComplex;
using mp::BigReal;
using mp::Precision;

namespace {

struct Formatter {
  int digits;
  std::string fixed(const BigReal& x) const { return mp::format_fixed(x, digits); }
  static std::string sci(const BigReal& x) { return mp::format_sci(x, 5); }
  static std::string opt_sci(const std::optional<BigReal>& x) {
    return x ? sci(*x) : "undefined";
  }
};

// Shortest %g rendering, for parameters echoed back (offsets, ranges).
std::string plain(const BigReal& x) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.12Rg", x.raw());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string or_default(const std::string& value, const char* fallback) {
  return value.empty() ? std::string(fallback) : value;
}

Report start(const char* command, const RunConfig& cfg) {
  Report r;
  r.command = command;
  r.precision_bits = cfg.precision_bits;
  return r;
}

lab::Schedule schedule(const RunConfig& cfg, const char* fallback) {
  return lab::Schedule(parse_schedule(or_default(cfg.n_schedule, fallback)));
}

std::vector<BigReal> as_reals(const std::vector<TailIndex>& ns, Precision prec) {
  std::vector<BigReal> out;
  for (const TailIndex n : ns) out.push_back(n.to_real(prec));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool strictly_decreasing(const lab::ProbeSeries& series) {
  for (std::size_t i = 1; i < series.rows.size(); ++i) {
    const auto& a = series.rows[i - 1].deviation;
    const auto& b = series.rows[i].deviation;
    if (!a || !b || !(*b < *a)) return false;
  }
  return true;
}

void add_fit_note(Report& r, const lab::ProbeSeries& series) {
  std::size_t defined = 0;
  for (const auto& row : series.rows) defined += row.deviation && row.deviation->sign() > 0;
  if (defined < 3) return;
  const lab::DecayFit fit = lab::decay_fit(series);
  r.notes.push_back(series.name + ": log10 deviation vs log10 n slope " +
                    mp::format_fixed(fit.slope, 4) + ", strictly decreasing: " +
                    yes_no(strictly_decreasing(series)));
}

void probe_rows(Report& r, const lab::ProbeSeries& series, const Formatter& f,
                const std::string& prefix) {
  for (const lab::ProbeRow& row : series.rows) {
    ReportRow out{series.name, row.n, {}};
    if (row.quantity) {
      out.values = {{prefix + "re", f.fixed(row.quantity->re())},
                    {prefix + "im", f.fixed(row.quantity->im())},
                    {prefix + "deviation", Formatter::sci(*row.deviation)}};
    } else {
      out.values = {{prefix + "re", "undefined"}, {prefix + "im", "undefined"},
                    {prefix + "deviation", "undefined"}};
    }
    r.add(std::move(out));
  }
}

Report probe_lemma1(const RunConfig& cfg, const Formatter& f) {
  const Precision prec = cfg.precision();
  const BigComplex s = parse_complex(or_default(cfg.s_literal, kDefaultS), prec);
  const lab::Lemma1Series l1 = lab::lemma1_ratios(s, schedule(cfg, "1e3:1e6"), prec);
  Report r = start("probe lemma1", cfg);
  probe_rows(r, l1.backward, f, "");
  probe_rows(r, l1.forward, f, "");
  add_fit_note(r, l1.backward);
  add_fit_note(r, l1.forward);
  return r;
}

Report probe_series(const RunConfig& cfg, const Formatter& f, const char* command,
                    const char* fallback_n,
                    lab::ProbeSeries (*probe)(const BigComplex&, const lab::Schedule&, Precision)) {
  const Precision prec = cfg.precision();
  const BigComplex s = parse_complex(or_default(cfg.s_literal, kDefaultS), prec);
  const lab::ProbeSeries series = probe(s, schedule(cfg, fallback_n), prec);
  Report r = start(command, cfg);
  probe_rows(r, series, f, "");
  add_fit_note(r, series);
  return r;
}

Report probe_uniform(const RunConfig& cfg, const Formatter& f) {
  const Precision prec = cfg.precision();
  const BigReal sigma = parse_real(or_default(cfg.sigma_literal, "0.5"), prec);
  std::vector<BigReal> grid;
  for (long t = 0; t <= 100; ++t) grid.emplace_back(t, prec);
  Report r = start("probe uniform", cfg);
  for (const TailIndex n : parse_schedule(or_default(cfg.n_schedule, "100"))) {
    const lab::UniformScan scan = lab::uniform_bound_scan(sigma, grid, n, prec);
    r.add({"uniform", n,
           {{"sigma", f.fixed(sigma)},
            {"sup_tail", f.fixed(scan.sup_tail)},
            {"t_at_sup", mp::format_fixed(scan.t_at_sup, 0)},
            {"bound", f.fixed(scan.bound)},
            {"pass", scan.pass ? "PASS" : "FAIL"}}});
  }
  r.notes.push_back("grid t = 0, 1, ..., 100; bound n^{-sigma}");
  return r;
}

Report probe_exchange(const RunConfig& cfg, const Formatter& f) {
  const Precision prec = cfg.precision();
  const BigReal sigma = parse_real(or_default(cfg.sigma_literal, "0.75"), prec);
  const auto [lo, hi] = parse_range(or_default(cfg.zero_bracket, "14:15"), prec);
  const lab::ZeroResult zero = lab::locate_zero(lo, hi, prec);
  const std::vector<BigReal> offsets =
      cfg.offsets.empty() ? lab::default_offsets(prec) : parse_reals(cfg.offsets, prec);
  const lab::ExchangeReport ex =
      lab::exchange_report(sigma, zero.t0, schedule(cfg, "1e2:1e6"), offsets, prec);

  Report r = start("probe exchange", cfg);
  const BigReal two_sigma_minus_one = sigma * 2L - BigReal(1L, prec);
  for (const lab::ExchangeRow& row : ex.rows) {
    const BigReal base = row.n.to_real(prec) + BigReal::parse("0.5", prec);
    const BigReal modulus_growth = mp::exp(two_sigma_minus_one * mp::log(base));
    ReportRow out{"exchange", row.n, {{"dt", plain(row.dt)}}};
    if (row.partial_ratio) {
      out.values.emplace_back("partial_re", f.fixed(row.partial_ratio->re()));
      out.values.emplace_back("partial_im", f.fixed(row.partial_ratio->im()));
      out.values.emplace_back("partial_minus_lambda",
                              Formatter::sci(mp::abs(*row.partial_ratio - row.lambda)));
    } else {
      out.values.emplace_back("partial_re", "flagged");
      out.values.emplace_back("partial_im", "flagged");
      out.values.emplace_back("partial_minus_lambda", "flagged");
    }
    out.values.emplace_back("tail_re", f.fixed(row.tail_ratio.re()));
    out.values.emplace_back("tail_im", f.fixed(row.tail_ratio.im()));
    out.values.emplace_back("tail_over_growth",
                            f.fixed(mp::abs(row.tail_ratio) / modulus_growth));
    out.values.emplace_back("growth_re", f.fixed(row.growth.re()));
    out.values.emplace_back("growth_im", f.fixed(row.growth.im()));
    out.values.emplace_back("lambda_re", f.fixed(row.lambda.re()));
    out.values.emplace_back("lambda_im", f.fixed(row.lambda.im()));
    out.values.emplace_back("zero_gap", row.zero_gap ? Formatter::sci(*row.zero_gap) : "");
    r.add(std::move(out));
  }
  r.notes.push_back("t0 = " + f.fixed(zero.t0) + ", |eta(1/2 + i t0)| = " +
                    Formatter::sci(zero.residual));
  r.notes.push_back("s = sigma + i (t0 + dt); partial = eta_n(1-s)/eta_n(s), tail = "
                    "R_n(1-s)/R_n(s), growth = (n+0.5)^{2s-1}, tail_over_growth = "
                    "|tail| / (n+0.5)^{2 sigma - 1}");
  return r;
}

}  // namespace

void RunConfig::validate() const {
  const Precision prec = precision();
  const long cap = prec.decimal_digits() - 8;
  if (digits < 0) throw ParseError("--digits must be non-negative", 1);
  if (digits > cap) {
    throw PrecisionError(std::to_string(digits) + " digits requested but " +
                         std::to_string(precision_bits) + "-bit precision supports at most " +
                         std::to_string(cap) + "; raise --prec");
  }
}

Probe parse_probe(const std::string& name) {
  if (name == "lemma1") return Probe::kLemma1;
  if (name == "f-seq") return Probe::kFSeq;
  if (name == "eps-scaled") return Probe::kEpsScaled;
  if (name == "uniform") return Probe::kUniform;
  if (name == "exchange") return Probe::kExchange;
  throw ParseError("unknown probe '" + name + "' (lemma1, f-seq, eps-scaled, uniform, exchange)",
                   1);
}

Report cmd_eval(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.s_literal.empty()) throw ParseError("eval needs --s", 1);
  const Precision prec = cfg.precision();
  const Formatter f{cfg.digits};
  const BigComplex s = parse_complex(cfg.s_literal, prec);
  Report r = start("eval", cfg);

  const eta::EvalResult eta_value = eta::eta_full(s, prec);
  r.add({"eta", std::nullopt,
         {{"re", f.fixed(eta_value.value.re())},
          {"im", f.fixed(eta_value.value.im())},
          {"err_bound", Formatter::sci(eta_value.err_bound)}}});
  try {
    const eta::EvalResult check = eta::eta_hurwitz_route(s, prec);
    const int re = mp::agreeing_fraction_digits(f.fixed(eta_value.value.re()),
                                                f.fixed(check.value.re()));
    const int im = mp::agreeing_fraction_digits(f.fixed(eta_value.value.im()),
                                                f.fixed(check.value.im()));
    r.notes.push_back("eta: acceleration and Hurwitz-pair routes agree to " +
                      std::to_string(std::min(re, im)) + " of " + std::to_string(cfg.digits) +
                      " printed digits");
  } catch (const PoleError&) {
    r.notes.push_back("eta: Hurwitz-pair cross-check unavailable at s = 1");
  }

  try {
    const eta::EvalResult zeta = eta::zeta_strip(s, prec);
    r.add({"zeta", std::nullopt,
           {{"re", f.fixed(zeta.value.re())},
            {"im", f.fixed(zeta.value.im())},
            {"err_bound", Formatter::sci(zeta.err_bound)}}});
  } catch (const PoleError& e) {
    r.notes.push_back(std::string("zeta: ") + e.what());
  } catch (const ExcludedPointError& e) {
    r.notes.push_back(std::string("zeta: ") + e.what());
  }

  if (!cfg.n_schedule.empty()) {
    const std::vector<TailIndex> ns = parse_schedule(cfg.n_schedule);
    const auto sums = eta::partial_sums(s, ns, prec);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      r.add({"eta_n", ns[i],
             {{"re", f.fixed(sums[i].value.re())},
              {"im", f.fixed(sums[i].value.im())},
              {"err_bound", Formatter::sci(sums[i].err_bound)}}});
    }
  }
  return r;
}

Report cmd_digits(const RunConfig& cfg) {
  cfg.validate();
  const Precision prec = cfg.precision();
  const Formatter f{cfg.digits};
  const BigComplex s = parse_complex(or_default(cfg.s_literal, kDefaultS), prec);
  const eta::TailMethod method = eta::parse_tail_method(cfg.method);
  Report r = start("digits", cfg);
  for (const TailIndex n : parse_schedule(or_default(cfg.n_schedule, kDefaultN))) {
    const eta::TailResult tail = eta::tail_remainder(s, n, prec, method);
    const BigComplex approx = eta::tail_approx(s, n, prec);
    const std::string r_re = f.fixed(tail.value.re());
    const std::string r_im = f.fixed(tail.value.im());
    const std::string t_re = f.fixed(approx.re());
    const std::string t_im = f.fixed(approx.im());
    r.add({"R", n, {{"re", r_re}, {"im", r_im}, {"method", eta::to_string(tail.method)}}});
    r.add({"T",
           n,
           {{"re", t_re},
            {"im", t_im},
            {"agree_re", std::to_string(mp::agreeing_fraction_digits(r_re, t_re))},
            {"agree_im", std::to_string(mp::agreeing_fraction_digits(r_im, t_im))}}});
  }
  r.notes.push_back("digit strings truncated toward zero; agree_* counts the leading "
                    "places where R_n and T_n coincide");
  return r;
}

Report cmd_table1(const RunConfig& cfg) {
  cfg.validate();
  const Precision prec = cfg.precision();
  const BigComplex s = parse_complex(or_default(cfg.s_literal, kDefaultS), prec);
  const std::vector<TailIndex> ns = parse_schedule(or_default(cfg.n_schedule, kDefaultN));
  Report r = start("table1", cfg);

  std::vector<BigReal> eps_r, eps_i, eps_r_full, eps_i_full;
  for (const TailIndex n : ns) {
    const eta::ErrorReport full = eta::error_term(s, n, prec);
    // The same ratios from R_n and T_n rounded to the published 28 places.
    const BigComplex tail = eta::tail_remainder(s, n, prec).value;
    const BigComplex approx = eta::tail_approx(s, n, prec);
    auto rounded = [](const BigComplex& z) {
      return BigComplex(mp::round_decimal(z.re(), kQuotedPlaces),
                        mp::round_decimal(z.im(), kQuotedPlaces));
    };
    const eta::ErrorReport shown = eta::error_components(n, rounded(tail), rounded(approx));

    r.add({"eps",
           n,
           {{"eps_r", Formatter::opt_sci(shown.eps_r)},
            {"eps_i", Formatter::opt_sci(shown.eps_i)},
            {"eps_r_full", Formatter::opt_sci(full.eps_r)},
            {"eps_i_full", Formatter::opt_sci(full.eps_i)},
            {"eps_rel_full", Formatter::sci(full.eps_rel)}}});
    if (shown.eps_r && shown.eps_i && full.eps_r && full.eps_i) {
      eps_r.push_back(*shown.eps_r);
      eps_i.push_back(*shown.eps_i);
      eps_r_full.push_back(*full.eps_r);
      eps_i_full.push_back(*full.eps_i);
    }
  }
  if (eps_r.size() == ns.size() && ns.size() >= 3) {
    const std::vector<BigReal> xs = as_reals(ns, prec);
    auto slope = [&](const std::vector<BigReal>& q) {
      return mp::format_fixed(lab::decay_fit(xs, q).slope, 4);
    };
    r.add({"fit",
           std::nullopt,
           {{"eps_r", slope(eps_r)},
            {"eps_i", slope(eps_i)},
            {"eps_r_full", slope(eps_r_full)},
            {"eps_i_full", slope(eps_i_full)}}});
    r.notes.push_back("fit: least-squares slope of log10 eps against log10 n");
  }
  r.notes.push_back("eps_r, eps_i: from R_n and T_n rounded to 28 decimal places");
  r.notes.push_back("*_full: from R_n and T_n at full working precision");
  return r;
}

Report cmd_probe(const RunConfig& cfg, Probe which) {
  cfg.validate();
  const Formatter f{cfg.digits};
  switch (which) {
    case Probe::kLemma1:
      return probe_lemma1(cfg, f);
    case Probe::kFSeq:
      return probe_series(cfg, f, "probe f-seq", "1e3:1e6", &lab::f_sequence);
    case Probe::kEpsScaled:
      return probe_series(cfg, f, "probe eps-scaled", "1e2:1e8", &lab::eps_scaled);
    case Probe::kUniform:
      return probe_uniform(cfg, f);
    case Probe::kExchange:
      return probe_exchange(cfg, f);
  }
  throw ParseError("unknown probe", 1);
}

Report cmd_zeros(const RunConfig& cfg) {
  cfg.validate();
  const Precision prec = cfg.precision();
  const Formatter f{cfg.digits};
  const auto [lo, hi] = parse_range(or_default(cfg.zero_bracket, "0:30"), prec);
  Report r = start("zeros", cfg);
  for (const lab::ZeroResult& z : lab::locate_zeros(lo, hi, prec)) {
    r.add({"zero", std::nullopt, {{"t0", f.fixed(z.t0)}, {"residual", Formatter::sci(z.residual)}}});
  }
  r.notes.push_back(std::to_string(r.rows.size()) + " zero(s) of eta(1/2 + it) in (" +
                    plain(lo) + ", " + plain(hi) + ")");
  return r;
}

}  // namespace etalab::report
