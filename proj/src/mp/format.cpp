#include "etalab/mp/format.hpp"

#include <gmpxx.h>

namespace etalab::mp {

namespace {

// floor(|x| * 10^digits * 2^extra) in exact integer arithmetic.
mpz_class scaled_abs(const BigReal& x, int digits, long extra) {
  mpz_class scaled;
  if (x.is_zero()) return scaled;
  mpz_class m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.raw()) + extra;
  mpz_abs(m.get_mpz_t(), m.get_mpz_t());
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  scaled = m * pow10;
  if (e >= 0) {
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_fdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return scaled;
}

BigReal from_scaled(const mpz_class& scaled, int sign, int digits, Precision prec) {
  mpq_class q(scaled);
  mpz_ui_pow_ui(q.get_den_mpz_t(), 10, static_cast<unsigned long>(digits));
  q.canonicalize();
  if (sign < 0) q = -q;
  BigReal out(prec);
  mpfr_set_q(out.raw(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

}  // namespace

std::string format_fixed(const BigReal& x, int digits) {
  if (digits < 0) throw DomainError("negative digit count");
  const char sign = x.sign() < 0 ? '-' : '+';
  const mpz_class scaled = scaled_abs(x, digits, 0);

  std::string body = scaled.get_str();
  const long significant = (body == "0") ? 0 : static_cast<long>(body.size());
  if (significant > x.prec().decimal_digits()) {
    throw PrecisionError("requested " + std::to_string(significant) +
                         " significant digits but " + std::to_string(x.prec().bits()) +
                         "-bit precision holds only " + std::to_string(x.prec().decimal_digits()));
  }
  if (body.size() < static_cast<std::size_t>(digits) + 1) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  const std::size_t int_len = body.size() - static_cast<std::size_t>(digits);
  std::string out(1, sign);
  out += body.substr(0, int_len);
  if (digits > 0) {
    out += '.';
    out += body.substr(int_len);
  }
  return out;
}

std::string format_sci(const BigReal& x, int significant) {
  if (significant < 1) throw DomainError("need at least one significant digit");
  if (x.is_zero()) return "0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), x.raw(), MPFR_RNDZ);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  std::string out = sign + digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

BigReal truncate_decimal(const BigReal& x, int digits) {
  std::string text = format_fixed(x, digits);
  if (text[0] == '+') text.erase(0, 1);
  return BigReal::parse(text, x.prec());
}

BigReal round_decimal(const BigReal& x, int digits) {
  if (digits < 0) throw DomainError("negative digit count");
  // floor(y + 1/2) == floor((floor(2y) + 1) / 2)
  mpz_class doubled = scaled_abs(x, digits, 1) + 1;
  mpz_fdiv_q_2exp(doubled.get_mpz_t(), doubled.get_mpz_t(), 1);
  return from_scaled(doubled, x.sign(), digits, x.prec());
}

int agreeing_fraction_digits(const std::string& a, const std::string& b) {
  if (a.empty() || b.empty() || a[0] != b[0]) return 0;
  const auto pa = a.find('.');
  const auto pb = b.find('.');
  if (pa == std::string::npos || pb == std::string::npos) return 0;
  if (a.substr(0, pa) != b.substr(0, pb)) return 0;
  int count = 0;
  for (std::size_t i = pa + 1, j = pb + 1; i < a.size() && j < b.size() && a[i] == b[j]; ++i, ++j) {
    ++count;
  }
  return count;
}

}  // namespace etalab::mp
