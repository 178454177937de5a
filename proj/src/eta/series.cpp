#include "etalab/eta/series.hpp"

#include <algorithm>
#include <cmath>

#include "etalab/eta/hurwitz.hpp"
#include "etalab/mp/special.hpp"

namespace etalab::eta {

namespace {

long ceil_log2(double x) { return x <= 1.0 ? 0 : static_cast<long>(std::ceil(std::log2(x))); }

void check_checkpoints(std::span<const TailIndex> checkpoints) {
  if (checkpoints.empty()) throw DomainError("no partial-sum checkpoints given");
  for (std::size_t i = 1; i < checkpoints.size(); ++i) {
    if (!(checkpoints[i - 1] < checkpoints[i])) {
      throw DomainError("partial-sum checkpoints must be strictly increasing");
    }
  }
  if (checkpoints.back().value() > kPartialSumBudget) {
    throw BudgetError("partial sum with n = " + std::to_string(checkpoints.back().value()) +
                      " exceeds the direct summation budget of 10^7; use the tail identities "
                      "eta_n = eta - R_n instead");
  }
}

Precision summation_precision(const BigComplex& s, std::uint64_t n, Precision prec) {
  const double t = std::fabs(s.im().to_double());
  const double logn = std::log(static_cast<double>(n) + 1.0);
  return prec.plus(8 + ceil_log2(static_cast<double>(n) + 1.0) + ceil_log2(t * logn + 1.0));
}

// Upper bound on |k^{-s}| for 1 <= k <= n.
BigReal max_term(const BigComplex& s, std::uint64_t n, Precision prec) {
  if (s.re().sign() >= 0 || n <= 1) return BigReal(1L, prec);
  return mp::exp(-s.re().at(prec) * mp::log(BigReal::from_u64(n, prec)));
}

BigReal summation_error(std::uint64_t n, const BigReal& max_abs, Precision wp, Precision prec) {
  return (mp::ldexp(BigReal::from_u64(n, prec), 4 - wp.bits()) * max_abs).at(prec);
}

// Streams k^{-s} for k = 1, 2, ... using complete multiplicativity: primes are
// evaluated directly, a composite k = p m (p its smallest prime factor) costs
// one complex product with cached values. The cache holds k <= kCacheLimit;
// cofactors beyond it fall back to direct evaluation.
class PowerStream {
 public:
  static constexpr std::uint64_t kCacheLimit = 1ULL << 19;

  PowerStream(const BigComplex& s, std::uint64_t n_max, Precision wp)
      : wp_(wp),
        sigma_(s.re().at(wp)),
        t_(s.im().at(wp)),
        lnk_(wp), tmp_(wp), sn_(wp), cs_(wp),
        re_(wp), im_(wp) {
    const std::uint64_t sieve_max = n_max;
    smallest_factor_.assign(sieve_max + 1, 0);
    for (std::uint64_t i = 2; i <= sieve_max; ++i) {
      if (smallest_factor_[i] != 0) continue;
      for (std::uint64_t j = i; j <= sieve_max; j += i) {
        if (smallest_factor_[j] == 0) smallest_factor_[j] = static_cast<std::uint32_t>(i);
      }
    }
    const std::uint64_t cached = std::min<std::uint64_t>(n_max, kCacheLimit);
    cache_re_.reserve(cached + 1);
    cache_im_.reserve(cached + 1);
    cache_re_.emplace_back(wp);
    cache_im_.emplace_back(wp);
  }

  // Advances to k (which must be the previous k + 1) and returns re/im of k^{-s}.
  void next(std::uint64_t k) {
    if (k == 1) {
      mpfr_set_ui(re_.raw(), 1, MPFR_RNDN);
      mpfr_set_zero(im_.raw(), 1);
    } else {
      const std::uint64_t p = smallest_factor_[k];
      const std::uint64_t m = k / p;
      if (p == k || m >= cache_re_.size() || p >= cache_re_.size()) {
        direct(k);
      } else {
        // (a + ib)(c + id)
        const BigReal& a = cache_re_[p];
        const BigReal& b = cache_im_[p];
        const BigReal& c = cache_re_[m];
        const BigReal& d = cache_im_[m];
        mpfr_mul(re_.raw(), a.raw(), c.raw(), MPFR_RNDN);
        mpfr_mul(tmp_.raw(), b.raw(), d.raw(), MPFR_RNDN);
        mpfr_sub(re_.raw(), re_.raw(), tmp_.raw(), MPFR_RNDN);
        mpfr_mul(im_.raw(), a.raw(), d.raw(), MPFR_RNDN);
        mpfr_mul(tmp_.raw(), b.raw(), c.raw(), MPFR_RNDN);
        mpfr_add(im_.raw(), im_.raw(), tmp_.raw(), MPFR_RNDN);
      }
    }
    if (k < cache_re_.capacity() && k == cache_re_.size()) {
      cache_re_.push_back(re_);
      cache_im_.push_back(im_);
    }
  }

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }

 private:
  // k^{-s} = k^{-sigma} (cos(t ln k) - i sin(t ln k))
  void direct(std::uint64_t k) {
    mpfr_set_ui(tmp_.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_log(lnk_.raw(), tmp_.raw(), MPFR_RNDN);
    mpfr_mul(tmp_.raw(), sigma_.raw(), lnk_.raw(), MPFR_RNDN);
    mpfr_neg(tmp_.raw(), tmp_.raw(), MPFR_RNDN);
    mpfr_exp(tmp_.raw(), tmp_.raw(), MPFR_RNDN);
    mpfr_mul(lnk_.raw(), t_.raw(), lnk_.raw(), MPFR_RNDN);
    mpfr_sin_cos(sn_.raw(), cs_.raw(), lnk_.raw(), MPFR_RNDN);
    mpfr_mul(re_.raw(), cs_.raw(), tmp_.raw(), MPFR_RNDN);
    mpfr_mul(im_.raw(), sn_.raw(), tmp_.raw(), MPFR_RNDN);
    mpfr_neg(im_.raw(), im_.raw(), MPFR_RNDN);
  }

  Precision wp_;
  BigReal sigma_, t_;
  BigReal lnk_, tmp_, sn_, cs_;
  BigReal re_, im_;
  std::vector<std::uint32_t> smallest_factor_;
  std::vector<BigReal> cache_re_, cache_im_;
};

}  // namespace

std::vector<EvalResult> partial_sums(const BigComplex& s, std::span<const TailIndex> checkpoints,
                                     Precision prec) {
  check_checkpoints(checkpoints);
  const std::uint64_t n_max = checkpoints.back().value();
  const Precision wp = summation_precision(s, n_max, prec);
  BigReal sum_re(wp), sum_im(wp);
  PowerStream powers(s, n_max, wp);

  std::vector<EvalResult> out;
  out.reserve(checkpoints.size());
  std::size_t next = 0;
  while (next < checkpoints.size() && checkpoints[next].value() == 0) {
    out.push_back({BigComplex(prec), BigReal(prec), EvalMethod::kDirectSum});
    ++next;
  }
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    powers.next(k);
    const auto accumulate = k % 2 == 1 ? mpfr_add : mpfr_sub;
    accumulate(sum_re.raw(), sum_re.raw(), powers.re().raw(), MPFR_RNDN);
    accumulate(sum_im.raw(), sum_im.raw(), powers.im().raw(), MPFR_RNDN);
    while (next < checkpoints.size() && checkpoints[next].value() == k) {
      out.push_back({BigComplex(sum_re.at(prec), sum_im.at(prec)),
                     summation_error(k, max_term(s, k, prec), wp, prec), EvalMethod::kDirectSum});
      ++next;
    }
  }
  return out;
}

std::vector<std::pair<EvalResult, EvalResult>> partial_sum_pairs(
    const BigComplex& s, std::span<const TailIndex> checkpoints, Precision prec) {
  check_checkpoints(checkpoints);
  const std::uint64_t n_max = checkpoints.back().value();
  const BigComplex reflected = BigComplex(BigReal(1L, prec)) - s;
  // The reflected series has modulus k^{sigma-1}; size the guard for both.
  const Precision wp = summation_precision(s, n_max, prec).plus(4);
  PowerStream powers(s, n_max, wp);

  BigReal a_re(wp), a_im(wp), b_re(wp), b_im(wp), norm(wp), tmp(wp), scale(wp);
  std::vector<std::pair<EvalResult, EvalResult>> out;
  out.reserve(checkpoints.size());
  std::size_t next = 0;
  while (next < checkpoints.size() && checkpoints[next].value() == 0) {
    out.emplace_back(EvalResult{BigComplex(prec), BigReal(prec), EvalMethod::kDirectSum},
                     EvalResult{BigComplex(prec), BigReal(prec), EvalMethod::kDirectSum});
    ++next;
  }
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    powers.next(k);
    const BigReal& re = powers.re();
    const BigReal& im = powers.im();
    // k^{-(1-s)} = conj(k^{-s}) / (k |k^{-s}|^2)
    mpfr_sqr(norm.raw(), re.raw(), MPFR_RNDN);
    mpfr_sqr(tmp.raw(), im.raw(), MPFR_RNDN);
    mpfr_add(norm.raw(), norm.raw(), tmp.raw(), MPFR_RNDN);
    mpfr_mul_ui(norm.raw(), norm.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_ui_div(scale.raw(), 1, norm.raw(), MPFR_RNDN);

    const auto accumulate = k % 2 == 1 ? mpfr_add : mpfr_sub;
    const auto accumulate_conj = k % 2 == 1 ? mpfr_sub : mpfr_add;
    accumulate(a_re.raw(), a_re.raw(), re.raw(), MPFR_RNDN);
    accumulate(a_im.raw(), a_im.raw(), im.raw(), MPFR_RNDN);
    mpfr_mul(tmp.raw(), re.raw(), scale.raw(), MPFR_RNDN);
    accumulate(b_re.raw(), b_re.raw(), tmp.raw(), MPFR_RNDN);
    mpfr_mul(tmp.raw(), im.raw(), scale.raw(), MPFR_RNDN);
    accumulate_conj(b_im.raw(), b_im.raw(), tmp.raw(), MPFR_RNDN);

    while (next < checkpoints.size() && checkpoints[next].value() == k) {
      out.emplace_back(
          EvalResult{BigComplex(a_re.at(prec), a_im.at(prec)),
                     summation_error(k, max_term(s, k, prec), wp, prec), EvalMethod::kDirectSum},
          EvalResult{BigComplex(b_re.at(prec), b_im.at(prec)),
                     summation_error(k, max_term(reflected, k, prec), wp, prec),
                     EvalMethod::kDirectSum});
      ++next;
    }
  }
  return out;
}

EvalResult partial_sum(const BigComplex& s, TailIndex n, Precision prec) {
  const TailIndex checkpoint[] = {n};
  return partial_sums(s, checkpoint, prec).front();
}

long acceleration_terms(long bits) {
  const double digits = std::ceil(static_cast<double>(bits) * 0.30102999566398119521);
  return static_cast<long>(std::ceil(digits * std::log(10.0) / std::log(3.0 + std::sqrt(8.0)))) + 8;
}

long acceleration_inflation_bits(const BigComplex& s) {
  if (s.im().is_zero()) return 2;
  const double sigma = s.re().to_double();
  const Precision low(64);
  const double log2_gamma_s = mp::abs(mp::complex_gamma(s.at(low), low)).log2_abs();
  const double log2_gamma_sigma = std::lgamma(sigma) / std::log(2.0);
  return std::max<long>(2, static_cast<long>(std::ceil(log2_gamma_sigma - log2_gamma_s)) + 2);
}

BigComplex accelerate_alternating(const std::function<BigComplex(long)>& term, long m,
                                  Precision wp) {
  const BigReal root = BigReal(3L, wp) + mp::sqrt(BigReal(8L, wp));
  BigReal d = mp::pow(root, BigReal(m, wp));
  d = (d + BigReal(1L, wp) / d) / 2L;
  BigReal b(-1L, wp);
  BigReal c = -d;
  BigComplex sum(wp);
  for (long k = 0; k < m; ++k) {
    c = b - c;
    sum += term(k) * c;
    // b <- b (k + m)(k - m) / ((k + 1/2)(k + 1))
    b *= BigReal((k + m) * (k - m) * 2, wp);
    b /= BigReal((2 * k + 1) * (k + 1), wp);
  }
  return sum / d;
}

EvalResult eta_full(const BigComplex& s, Precision prec) {
  if (s.re().sign() <= 0) throw DomainError("eta_full needs Re(s) > 0");
  const long inflation = acceleration_inflation_bits(s);
  const long m = acceleration_terms(prec.bits() + inflation);
  const Precision wp = prec.plus(16 + ceil_log2(static_cast<double>(m)));
  const BigComplex neg_s = -s.at(wp);
  const BigComplex value = accelerate_alternating(
      [&](long k) { return mp::complex_power(BigReal(k + 1, wp), neg_s, wp); }, m, wp);

  // Truncation ~ 2^{inflation+1} (3 + sqrt 8)^{-m}, plus rounding.
  const double trunc_log2 = static_cast<double>(inflation + 1) -
                            static_cast<double>(m) * std::log2(3.0 + std::sqrt(8.0));
  BigReal err = mp::ldexp(BigReal(1L, prec), static_cast<long>(std::ceil(trunc_log2)));
  err += mp::abs(value).at(prec) * mp::ldexp(BigReal(1L, prec), 2 - prec.bits());
  return {value.at(prec), err, EvalMethod::kAcceleration};
}

EvalResult eta_hurwitz_route(const BigComplex& s, Precision prec) {
  const Precision wp = prec.plus(16);
  const EvalResult odd = hurwitz_zeta(s, BigReal(0.5, wp), wp);
  const EvalResult even = hurwitz_zeta(s, BigReal(1L, wp), wp);
  const BigComplex scale = mp::complex_power(BigReal(2L, wp), -s.at(wp), wp);
  const BigComplex value = scale * (odd.value - even.value);
  const BigReal err = mp::abs(scale) * (odd.err_bound + even.err_bound);
  return {value.at(prec), err.at(prec), EvalMethod::kHurwitzPair};
}

EvalResult zeta_strip(const BigComplex& s, Precision prec) {
  if (s.re().sign() <= 0) throw DomainError("zeta_strip needs Re(s) > 0");
  if (s.im().is_zero() && s.re() == BigReal(1L, s.prec())) {
    throw PoleError("zeta has a pole at s = 1", 1);
  }
  const Precision wp = prec.plus(16);
  const BigComplex one(BigReal(1L, wp));
  const BigComplex divisor = one - mp::complex_power(BigReal(2L, wp), one - s.at(wp), wp);
  const BigReal div_abs = mp::abs(divisor);
  if (div_abs < mp::ldexp(BigReal(1L, wp), 8 - prec.bits())) {
    throw ExcludedPointError("1 - 2^{1-s} vanishes: s = 1 + 2 pi i k / ln 2 is excluded");
  }
  const EvalResult eta = eta_full(s, wp);
  const BigComplex value = eta.value / divisor;
  const BigReal err = (eta.err_bound + mp::abs(value) * mp::ldexp(BigReal(1L, wp), 4 - wp.bits())) / div_abs;
  return {value.at(prec), err.at(prec), EvalMethod::kAcceleration};
}

}  // namespace etalab::eta
