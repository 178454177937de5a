#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etalab/eta/types.hpp"

namespace etalab::lab {

using eta::TailIndex;
using mp::BigComplex;
using mp::BigReal;
using mp::Precision;

// Strictly increasing n values, at least two of them.
class Schedule {
 public:
  explicit Schedule(std::vector<TailIndex> n_values);

  // lo, lo*factor, ... up to hi (hi itself is always included).
  static Schedule geometric(std::uint64_t lo, std::uint64_t hi, std::uint64_t factor = 10);

  const std::vector<TailIndex>& values() const { return n_; }
  std::size_t size() const { return n_.size(); }

 private:
  std::vector<TailIndex> n_;
};

// quantity/deviation are empty when the row is undefined (vanishing tail).
struct ProbeRow {
  TailIndex n;
  std::optional<BigComplex> quantity;
  std::optional<BigReal> deviation;  // |quantity - limit|
};

struct ProbeSeries {
  std::string name;
  BigComplex limit;
  std::vector<ProbeRow> rows;
};

// -R_{n-1}/R_n and -R_{n+1}/R_n, both tending to 1.
struct Lemma1Series {
  ProbeSeries backward;
  ProbeSeries forward;
};

Lemma1Series lemma1_ratios(const BigComplex& s, const Schedule& sched, Precision prec);

// F_n = (-1)^n (n+1)^{-s} / R_n, tending to 2.
ProbeSeries f_sequence(const BigComplex& s, const Schedule& sched, Precision prec);

// eps_n (n+0.5)^s with eps_n = R_n - T_n, tending to 0.
ProbeSeries eps_scaled(const BigComplex& s, const Schedule& sched, Precision prec);

// One eps_scaled row for a caller-supplied tail value.
ProbeRow eps_scaled_row(const BigComplex& s, TailIndex n, const BigComplex& tail, Precision prec);

struct UniformScan {
  BigReal sup_tail;  // max |R_n(sigma + it)| over the grid
  BigReal t_at_sup;
  BigReal bound;     // n^{-sigma}
  bool pass;
};

UniformScan uniform_bound_scan(const BigReal& sigma, const std::vector<BigReal>& t_grid,
                               TailIndex n, Precision prec);

struct DecayFit {
  BigReal slope;
  BigReal intercept;
};

// Least squares of log10 q against log10 n. Needs >= 3 points, all q > 0.
DecayFit decay_fit(const std::vector<BigReal>& n, const std::vector<BigReal>& q);

// Fit over the defined rows' deviations.
DecayFit decay_fit(const ProbeSeries& series);

}  // namespace etalab::lab
