#pragma once

#include <optional>
#include <vector>

#include "etalab/lab/probes.hpp"

namespace etalab::lab {

// One (n, dt) row at s = sigma + i (t0 + dt).
struct ExchangeRow {
  TailIndex n;
  BigReal dt;
  std::optional<BigComplex> partial_ratio;  // eta_n(1-s)/eta_n(s); empty when flagged
  BigComplex tail_ratio;                    // R_n(1-s)/R_n(s)
  BigComplex growth;                        // (n+0.5)^{2 sigma - 1 + 2it}
  BigComplex lambda;                        // lambda(s)
  bool flagged;                             // |eta_n(s)| below the near-zero threshold
  std::optional<BigReal> zero_gap;          // |partial - tail| at sigma = 1/2, dt = 0
};

struct ExchangeReport {
  BigReal sigma;
  BigReal t0;
  std::vector<BigReal> offsets;
  std::vector<ExchangeRow> rows;  // ordered by (n, dt)
};

std::vector<BigReal> default_offsets(Precision prec);

// Partial sums are direct (one paired pass per offset), so the schedule must
// stay within the 10^7 summation budget.
ExchangeReport exchange_report(const BigReal& sigma, const BigReal& t0, const Schedule& sched,
                               const std::vector<BigReal>& offsets, Precision prec);

}  // namespace etalab::lab
