#include "etalab/mp/special.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "etalab/mp/rational.hpp"

namespace etalab::mp {

namespace {

long ceil_log2(double x) {
  return x <= 1.0 ? 0 : static_cast<long>(std::ceil(std::log2(x)));
}

double approx_abs(const BigComplex& z) {
  return std::hypot(z.re().to_double(), z.im().to_double());
}

void reject_gamma_pole(const BigComplex& z) {
  if (z.im().is_zero() && z.re().sign() <= 0 && z.re().is_integer()) {
    const long at = mpfr_get_si(z.re().raw(), MPFR_RNDN);
    throw PoleError("gamma pole at " + std::to_string(at), at);
  }
}

// Extra bits lost when evaluating sin(pi z) near an integer.
long reflection_guard(const BigComplex& z) {
  const double re = z.re().to_double();
  const double im = z.im().to_double();
  const double dist = std::hypot(re - std::round(re), im);
  long guard = 16 + ceil_log2(std::fabs(re) + std::fabs(im) + 2.0);
  if (dist < 0.5) guard += ceil_log2(1.0 / std::max(dist, 1e-300));
  return guard;
}

// Gamma(z) = pi / (sin(pi z) Gamma(1 - z)), evaluated with `inner` for the
// reflected argument.
template <typename Inner>
BigComplex reflect(const BigComplex& z, Precision prec, Inner inner) {
  const Precision wp = prec.plus(reflection_guard(z));
  const BigReal pi = constant_pi(wp);
  const BigComplex zw = z.at(wp);
  const BigComplex one_minus = BigComplex(BigReal(1L, wp)) - zw;
  const BigComplex s = sin(zw * pi);
  if (s.is_zero()) {
    const long at = mpfr_get_si(z.re().raw(), MPFR_RNDN);
    throw PoleError("gamma pole at " + std::to_string(at), at);
  }
  const BigComplex g = inner(one_minus, wp);
  return (BigComplex(pi) / (s * g)).at(prec);
}

// ---------------------------------------------------------------- Spouge --

struct SpougeCoefficients {
  long a = 0;
  Precision wp;
  std::vector<BigReal> c;  // c[0] = sqrt(2 pi), c[k] for 1 <= k < a
};

double log2_max_spouge_coefficient(long a) {
  double best = 2.0;
  for (long k = 1; k < a; ++k) {
    const double ak = static_cast<double>(a - k);
    const double lg = (static_cast<double>(k) - 0.5) * std::log(ak) + ak - std::lgamma(static_cast<double>(k));
    best = std::max(best, lg / std::log(2.0));
  }
  return best;
}

std::shared_ptr<const SpougeCoefficients> spouge_coefficients(long a, Precision wp) {
  static std::mutex mutex;
  static std::map<std::pair<long, long>, std::shared_ptr<const SpougeCoefficients>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({a, wp.bits()});
    if (it != cache.end()) return it->second;
  }
  auto coeffs = std::make_shared<SpougeCoefficients>();
  coeffs->a = a;
  coeffs->wp = wp;
  coeffs->c.reserve(static_cast<std::size_t>(a));
  coeffs->c.push_back(sqrt(constant_pi(wp) * 2L));
  BigReal factorial(1L, wp);  // (k-1)!
  for (long k = 1; k < a; ++k) {
    if (k > 1) factorial *= BigReal(k - 1, wp);
    const BigReal base(a - k, wp);
    BigReal term = pow(base, BigReal(static_cast<double>(k) - 0.5, wp)) * exp(base) / factorial;
    if (k % 2 == 0) term = -term;
    coeffs->c.push_back(std::move(term));
  }
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(a, wp.bits()), std::move(coeffs));
  return it->second;
}

// Gamma(x + 1) for Re x > 0.
BigComplex spouge_shifted(const BigComplex& x, Precision prec) {
  const long a = spouge_parameter(prec);
  const double mag = approx_abs(x) + static_cast<double>(a);
  const long guard = 12 + static_cast<long>(std::ceil(log2_max_spouge_coefficient(a))) +
                     ceil_log2(mag * std::log(mag + 2.0) + 1.0);
  const Precision wp = prec.plus(guard);
  const auto coeffs = spouge_coefficients(a, wp);

  const BigComplex xw = x.at(wp);
  BigComplex sum(coeffs->c[0]);
  for (long k = 1; k < a; ++k) {
    const BigComplex den = xw + BigComplex(BigReal(k, wp));
    sum += BigComplex(coeffs->c[static_cast<std::size_t>(k)]) / den;
  }
  const BigComplex xa = xw + BigComplex(BigReal(a, wp));
  const BigComplex half(BigReal(0.5, wp));
  const BigComplex lead = exp((xw + half) * log(xa) - xa);
  return (lead * sum).at(prec);
}

BigComplex spouge_gamma(const BigComplex& z, Precision prec) {
  if (z.re().to_double() < 0.5) return reflect(z, prec, spouge_gamma);
  const Precision wp = prec.plus(8);
  const BigComplex zw = z.at(wp);
  return (spouge_shifted(zw, wp) / zw).at(prec);
}

// -------------------------------------------------------------- Stirling --

BigComplex stirling_gamma(const BigComplex& z, Precision prec) {
  if (z.re().to_double() < 0.5) return reflect(z, prec, stirling_gamma);

  const double re = z.re().to_double();
  const double im = z.im().to_double();
  const double radius = 0.15 * static_cast<double>(prec.bits()) + 8.0;
  long shift = 0;
  if (std::hypot(re, im) < radius && std::fabs(im) < radius) {
    shift = static_cast<long>(std::ceil(std::sqrt(radius * radius - im * im) - re));
    shift = std::max(shift, 0L);
  }
  const double wmag = std::hypot(re + static_cast<double>(shift), im);
  const Precision wp = prec.plus(16 + ceil_log2(wmag * std::log(wmag + 2.0) + 1.0) +
                                 ceil_log2(static_cast<double>(shift) + 1.0));

  const BigComplex zw = z.at(wp);
  const BigComplex w = zw + BigComplex(BigReal(shift, wp));
  const BigComplex half(BigReal(0.5, wp));
  BigComplex lg = (w - half) * log(w) - w + BigComplex(log(constant_pi(wp) * 2L) / 2L);

  const BigComplex w2 = w * w;
  BigComplex wpow = w;  // w^{2k-1}
  const BigReal tol = ldexp(BigReal(1L, wp), -wp.bits());
  const long kmax = static_cast<long>(std::floor(3.14159 * wmag));
  bool converged = false;
  for (long k = 1; k <= kmax; ++k) {
    const BigReal b = ExactRational(bernoulli_even(k)).to_real(wp) / ((2 * k) * (2 * k - 1));
    const BigComplex term = BigComplex(b) / wpow;
    lg += term;
    if (abs(term) < tol * (abs(lg) + BigReal(1L, wp))) {
      converged = true;
      break;
    }
    wpow *= w2;
  }
  if (!converged) throw ConfigError("Stirling series did not converge at the chosen shift");

  BigComplex g = exp(lg);
  if (shift > 0) {
    BigComplex prod(BigReal(1L, wp));
    for (long j = 0; j < shift; ++j) prod *= zw + BigComplex(BigReal(j, wp));
    g /= prod;
  }
  return g.at(prec);
}

}  // namespace

BigReal constant_pi(Precision prec) {
  BigReal r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigReal constant_ln2(Precision prec) {
  BigReal r(prec);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

BigComplex complex_power(const BigReal& base, const BigComplex& exponent, Precision prec) {
  if (base.sign() <= 0) throw DomainError("complex_power needs a positive base");
  const double lnb = std::fabs(base.log2_abs()) * 0.6931471805599453 + 1.0;
  const long guard = 10 + ceil_log2(approx_abs(exponent) * lnb + 1.0);
  const Precision wp = prec.plus(guard);
  BigReal lb(wp);
  mpfr_log(lb.raw(), base.raw(), MPFR_RNDN);
  const BigReal modulus = exp(exponent.re().at(wp) * lb);
  const BigReal phase = exponent.im().at(wp) * lb;
  BigReal s(wp), c(wp);
  mpfr_sin_cos(s.raw(), c.raw(), phase.raw(), MPFR_RNDN);
  return BigComplex((modulus * c).at(prec), (modulus * s).at(prec));
}

long spouge_parameter(Precision prec) {
  const double target = static_cast<double>(prec.bits() + 4);
  long a = 2;
  while (0.5 * std::log2(static_cast<double>(a)) +
             (static_cast<double>(a) + 0.5) * std::log2(2.0 * 3.141592653589793) <
         target) {
    ++a;
  }
  return a;
}

BigComplex complex_gamma(const BigComplex& z, Precision prec) {
  reject_gamma_pole(z);
  return spouge_gamma(z, prec);
}

BigComplex gamma_stirling(const BigComplex& z, Precision prec) {
  reject_gamma_pole(z);
  return stirling_gamma(z, prec);
}

}  // namespace etalab::mp
