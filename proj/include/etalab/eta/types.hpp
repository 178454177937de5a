#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "etalab/mp/big_complex.hpp"

namespace etalab::eta {

using mp::BigComplex;
using mp::BigReal;
using mp::Precision;

// Index n of a partial sum or tail; exact integer up to 10^18.
class TailIndex {
 public:
  static constexpr std::uint64_t kMax = 1'000'000'000'000'000'000ULL;

  constexpr TailIndex() = default;
  explicit TailIndex(std::uint64_t n) : n_(n) {
    if (n > kMax) throw DomainError("tail index above 10^18: " + std::to_string(n));
  }

  constexpr std::uint64_t value() const { return n_; }
  bool is_even() const { return n_ % 2 == 0; }
  BigReal to_real(Precision prec) const { return BigReal::from_u64(n_, prec); }

  friend constexpr auto operator<=>(TailIndex, TailIndex) = default;

 private:
  std::uint64_t n_ = 0;
};

enum class EvalMethod { kDirectSum, kEulerMaclaurin, kAcceleration, kHurwitzPair };
enum class TailMethod { kHurwitzPair, kDirectAccel, kBrute };

std::string to_string(EvalMethod m);
std::string to_string(TailMethod m);
TailMethod parse_tail_method(const std::string& name);

struct EvalResult {
  BigComplex value;
  BigReal err_bound;  // heuristic absolute error, >= 0
  EvalMethod method;
};

struct TailResult {
  TailIndex n;
  BigComplex value;  // R_n(s)
  BigReal err_bound;
  TailMethod method;
};

// eps_r / eps_i are empty when the corresponding component of R_n vanishes.
struct ErrorReport {
  TailIndex n;
  BigComplex eps_n;  // R_n - T_n
  std::optional<BigReal> eps_r;
  std::optional<BigReal> eps_i;
  BigReal eps_rel;  // |R_n - T_n| / |R_n|
};

// Euler-Maclaurin knobs for the Hurwitz zeta evaluation.
struct EMConfig {
  long shift_target = 0;          // minimum a + M before the asymptotic part
  long max_correction_terms = 64;
  long guard_bits = 16;

  // shift_target = 2 * decimal digits of prec.
  static EMConfig for_precision(Precision prec);
  void validate(Precision prec) const;
};

}  // namespace etalab::eta
