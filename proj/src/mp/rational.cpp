#include "etalab/mp/rational.hpp"

#include <deque>
#include <mutex>

namespace etalab::mp {

ExactRational::ExactRational(long num, long den) : value_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

BigReal ExactRational::to_real(Precision prec) const {
  BigReal r(prec);
  mpfr_set_q(r.raw(), value_.get_mpq_t(), MPFR_RNDN);
  return r;
}

namespace {

// Tangent numbers T_1..T_n (Brent-Harvey in-place recurrence), integers only.
std::vector<mpz_class> tangent_numbers(long n) {
  std::vector<mpz_class> t(static_cast<std::size_t>(n + 1));
  if (n < 1) return t;
  t[1] = 1;
  for (long k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (long k = 2; k <= n; ++k) {
    for (long j = k; j <= n; ++j) {
      t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
  }
  return t;
}

// B_{2k} = (-1)^{k-1} 2k T_k / (2^{2k} (2^{2k} - 1))
mpq_class even_from_tangent(long k, const mpz_class& tk) {
  mpz_class pow4 = 1;
  mpz_mul_2exp(pow4.get_mpz_t(), pow4.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * k));
  mpq_class b(mpz_class(2 * k) * tk, pow4 * (pow4 - 1));
  b.canonicalize();
  if (k % 2 == 0) b = -b;
  return b;
}

class BernoulliCache {
 public:
  const mpq_class& even(long k) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (static_cast<long>(even_.size()) < k) {
      const long want = std::max<long>(k, std::max<long>(32, 2 * static_cast<long>(even_.size())));
      const auto t = tangent_numbers(want);
      for (long j = static_cast<long>(even_.size()) + 1; j <= want; ++j) {
        even_.push_back(even_from_tangent(j, t[j]));
      }
    }
    // deque keeps element addresses stable across push_back
    return even_[static_cast<std::size_t>(k - 1)];
  }

 private:
  std::mutex mutex_;
  std::deque<mpq_class> even_;  // even_[k-1] = B_{2k}
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

}  // namespace

const mpq_class& bernoulli_even(long k) {
  if (k < 1 || 2 * k > kMaxBernoulliCount) {
    throw DomainError("Bernoulli index out of range: " + std::to_string(2 * k));
  }
  return cache().even(k);
}

std::vector<ExactRational> bernoulli_numbers(long count) {
  if (count < 1 || count > kMaxBernoulliCount) {
    throw DomainError("Bernoulli count must be in [1, 10000], got " + std::to_string(count));
  }
  std::vector<ExactRational> out;
  out.reserve(static_cast<std::size_t>(count + 1));
  out.emplace_back(1, 1);
  out.emplace_back(-1, 2);
  for (long m = 2; m <= count; ++m) {
    if (m % 2 == 1) {
      out.emplace_back(0, 1);
    } else {
      out.emplace_back(bernoulli_even(m / 2));
    }
  }
  return out;
}

}  // namespace etalab::mp
