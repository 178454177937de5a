#pragma once

#include <string>

#include "etalab/report/report.hpp"

namespace etalab::report {

// Empty strings select the per-command defaults.
struct RunConfig {
  long precision_bits = 192;
  std::string s_literal;
  std::string sigma_literal;
  std::string n_schedule;
  OutputFormat output_format = OutputFormat::kText;
  int digits = 28;
  std::string zero_bracket;
  std::string offsets;
  std::string method = "hurwitz-pair";

  mp::Precision precision() const { return mp::Precision(precision_bits); }
  // digits <= floor(precision_bits log10 2) - 8, else PrecisionError.
  void validate() const;
};

inline constexpr const char* kDefaultS = "0.1234+56.789i";
inline constexpr const char* kDefaultN = "1e8,1e10,1e12,1e14";
// Published digit blocks are 28 places; table1 recomputes eps from values
// rounded there.
inline constexpr int kQuotedPlaces = 28;

enum class Probe { kLemma1, kFSeq, kEpsScaled, kUniform, kExchange };
Probe parse_probe(const std::string& name);

// eta(s), zeta(s) and eta_n(s) for each --n.
Report cmd_eval(const RunConfig& cfg);
// R_n and T_n digit blocks with the agreeing prefix length.
Report cmd_digits(const RunConfig& cfg);
// eps_r, eps_i per n plus a log-log fit row.
Report cmd_table1(const RunConfig& cfg);
Report cmd_probe(const RunConfig& cfg, Probe which);
// Critical-line zeros in --zero-bracket (width <= 100).
Report cmd_zeros(const RunConfig& cfg);

}  // namespace etalab::report
