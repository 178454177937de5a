#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "etalab/mp/precision.hpp"

namespace etalab::mp {

// RAII owner of an mpfr_t. Values are finite by construction: every operation
// that would produce NaN or an infinity throws NonFiniteError instead.
//
// Binary operators produce a result at the larger of the operand precisions,
// rounded to nearest.
class BigReal {
 public:
  explicit BigReal(Precision prec = Precision());
  BigReal(long value, Precision prec);
  BigReal(double value, Precision prec);
  // Exact for |value| < 2^64 as long as prec >= 64.
  static BigReal from_u64(std::uint64_t value, Precision prec);
  // Decimal literal, correctly rounded to prec.
  static BigReal parse(std::string_view text, Precision prec);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  Precision prec() const { return Precision(mpfr_get_prec(value_)); }
  // Copy rounded (or widened exactly) to another precision.
  BigReal at(Precision prec) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Approximate log2 |x|; -inf-like sentinel (-1e300) for zero.
  double log2_abs() const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator*(BigReal lhs, long rhs);
  friend BigReal operator/(BigReal lhs, long rhs);

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  // Debug rendering in scientific notation with the given significant digits.
  std::string to_sci(int significant) const;

 private:
  void check_finite(const char* op) const;
  void grow_to(mpfr_srcptr other);

  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& base, const BigReal& exponent);
// 2^k exactly.
BigReal ldexp(const BigReal& x, long k);

}  // namespace etalab::mp
