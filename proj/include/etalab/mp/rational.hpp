#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "etalab/mp/big_real.hpp"

namespace etalab::mp {

// Exact rational in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long num, long den);
  explicit ExactRational(mpq_class value);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }

  BigReal to_real(Precision prec) const;
  std::string to_string() const { return value_.get_str(); }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.value_ + b.value_));
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(mpq_class(a.value_ * b.value_));
  }
  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }

 private:
  mpq_class value_;
};

inline constexpr long kMaxBernoulliCount = 10000;

// Exact B_0..B_count with B_1 = -1/2. Odd indices past 1 are zero.
std::vector<ExactRational> bernoulli_numbers(long count);

// B_{2k} for k >= 1, served from the shared cache.
const mpq_class& bernoulli_even(long k);

}  // namespace etalab::mp
