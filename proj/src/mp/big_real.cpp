#include "etalab/mp/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace etalab::mp {

namespace {

mpfr_prec_t wider(mpfr_srcptr a, mpfr_srcptr b) {
  return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}

template <typename Fn>
BigReal unary(const BigReal& x, const char* name, Fn fn) {
  BigReal r(x.prec());
  fn(r.raw(), x.raw(), MPFR_RNDN);
  if (!mpfr_number_p(r.raw())) {
    throw NonFiniteError(std::string("non-finite result in ") + name);
  }
  return r;
}

template <typename Fn>
BigReal binary(const BigReal& a, const BigReal& b, const char* name, Fn fn) {
  BigReal r(Precision(wider(a.raw(), b.raw())));
  fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  if (!mpfr_number_p(r.raw())) {
    throw NonFiniteError(std::string("non-finite result in ") + name);
  }
  return r;
}

}  // namespace

BigReal::BigReal(Precision prec) {
  mpfr_init2(value_, prec.bits());
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Precision prec) {
  mpfr_init2(value_, prec.bits());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(double value, Precision prec) {
  if (!std::isfinite(value)) throw NonFiniteError("non-finite double converted to BigReal");
  mpfr_init2(value_, prec.bits());
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigReal BigReal::from_u64(std::uint64_t value, Precision prec) {
  BigReal r(prec);
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  mpfr_set_ui(r.value_, static_cast<unsigned long>(value), MPFR_RNDN);
  return r;
}

BigReal BigReal::parse(std::string_view text, Precision prec) {
  BigReal r(prec);
  const std::string buf(text);
  char* end = nullptr;
  if (!buf.empty()) mpfr_strtofr(r.value_, buf.c_str(), &end, 10, MPFR_RNDN);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw DomainError("not a decimal number: '" + buf + "'");
  }
  r.check_finite("parse");
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::at(Precision prec) const {
  BigReal r(prec);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

double BigReal::log2_abs() const {
  if (is_zero()) return -1e300;
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, value_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

void BigReal::check_finite(const char* op) const {
  if (!mpfr_number_p(value_)) throw NonFiniteError(std::string("non-finite result in ") + op);
}

void BigReal::grow_to(mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(value_)) {
    mpfr_prec_round(value_, mpfr_get_prec(other), MPFR_RNDN);
  }
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  grow_to(rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  check_finite("add");
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  grow_to(rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  check_finite("sub");
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  grow_to(rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  check_finite("mul");
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.is_zero()) throw NonFiniteError("division by zero");
  grow_to(rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  check_finite("div");
  return *this;
}

BigReal operator*(BigReal lhs, long rhs) {
  mpfr_mul_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  lhs.check_finite("mul");
  return lhs;
}

BigReal operator/(BigReal lhs, long rhs) {
  if (rhs == 0) throw NonFiniteError("division by zero");
  mpfr_div_si(lhs.value_, lhs.value_, rhs, MPFR_RNDN);
  return lhs;
}

std::string BigReal::to_sci(int significant) const {
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), value_, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  if (is_zero()) return "0";
  return sign + digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e - 1);
}

BigReal abs(const BigReal& x) { return unary(x, "abs", mpfr_abs); }
BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  return unary(x, "sqrt", mpfr_sqrt);
}
BigReal exp(const BigReal& x) { return unary(x, "exp", mpfr_exp); }
BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log of a non-positive number");
  return unary(x, "log", mpfr_log);
}
BigReal log10(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log10 of a non-positive number");
  return unary(x, "log10", mpfr_log10);
}
BigReal sin(const BigReal& x) { return unary(x, "sin", mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, "cos", mpfr_cos); }
BigReal sinh(const BigReal& x) { return unary(x, "sinh", mpfr_sinh); }
BigReal cosh(const BigReal& x) { return unary(x, "cosh", mpfr_cosh); }
BigReal atan2(const BigReal& y, const BigReal& x) { return binary(y, x, "atan2", mpfr_atan2); }
BigReal hypot(const BigReal& x, const BigReal& y) { return binary(x, y, "hypot", mpfr_hypot); }
BigReal pow(const BigReal& base, const BigReal& exponent) {
  return binary(base, exponent, "pow", mpfr_pow);
}

BigReal ldexp(const BigReal& x, long k) {
  BigReal r(x);
  mpfr_mul_2si(r.raw(), r.raw(), k, MPFR_RNDN);
  if (!mpfr_number_p(r.raw())) throw NonFiniteError("non-finite result in ldexp");
  return r;
}

}  // namespace etalab::mp
