#pragma once

#include <cmath>
#include <random>
#include <vector>
#include <algorithm>
#include <string>

#include "etalab/eta/hurwitz.hpp"
#include "etalab/mp/big_complex.hpp"
#include "etalab/mp/special.hpp"

namespace etalab::testing {

using mp::BigComplex;
using mp::BigReal;
using mp::Precision;

// Number of agreeing bits, -log2(|a - b| / |b|); large sentinel when equal.
inline double agreeing_bits(const BigComplex& a, const BigComplex& b) {
  const BigReal d = mp::relative_distance(a, b);
  if (d.is_zero()) return 1e9;
  return -d.log2_abs();
}

inline double agreeing_bits(const BigReal& a, const BigReal& b) {
  return agreeing_bits(BigComplex(a), BigComplex(b));
}

inline bool within(double value, double target, double abs_tol) {
  return std::fabs(value - target) <= abs_tol;
}

// Deterministic sample of the open strip, sigma in [0.05, 0.95], |t| <= t_max.
class StripSampler {
 public:
  explicit StripSampler(std::uint64_t seed, double t_max = 60.0) : rng_(seed), t_max_(t_max) {}

  BigComplex next(Precision prec) {
    std::uniform_real_distribution<double> sigma(0.05, 0.95);
    std::uniform_real_distribution<double> t(-t_max_, t_max_);
    const double a = sigma(rng_);
    const double b = t(rng_);
    return BigComplex(a, b, prec);
  }

 private:
  std::mt19937_64 rng_;
  double t_max_;
};

inline BigComplex literal(const char* re, const char* im, Precision prec) {
  return BigComplex(BigReal::parse(re, prec), BigReal::parse(im, prec));
}

// Hardy's Z(t) = Re(e^{i theta(t)} zeta(1/2 + it)), theta from the Stirling
// gamma and zeta from the Hurwitz series; shares no code with locate_zero.
inline double hardy_z(double t) {
  const Precision p(128);
  const BigReal tr(t, p);
  const BigComplex g = mp::gamma_stirling(BigComplex(BigReal::parse("0.25", p), tr / 2L), p);
  const BigComplex phase = g / mp::abs(g) *
                           mp::complex_power(mp::constant_pi(p), BigComplex(BigReal(p), -tr / 2L), p);
  const BigComplex s(BigReal::parse("0.5", p), tr);
  return (phase * eta::hurwitz_zeta(s, BigReal(1L, p), p).value).re().to_double();
}

// Fine-grid sign change of Z plus bisection.
inline std::vector<double> oracle_zeros(double lo, double hi) {
  std::vector<double> out;
  const double step = 0.01;
  double a = lo;
  double fa = hardy_z(a);
  while (a < hi) {
    const double b = std::min(a + step, hi);
    const double fb = hardy_z(b);
    if ((fa < 0) != (fb < 0)) {
      double l = a, r = b, fl = fa;
      while (r - l > 1e-10) {
        const double m = 0.5 * (l + r);
        const double fm = hardy_z(m);
        if ((fm < 0) == (fl < 0)) {
          l = m;
          fl = fm;
        } else {
          r = m;
        }
      }
      out.push_back(0.5 * (l + r));
    }
    a = b;
    fa = fb;
  }
  return out;
}

}  // namespace etalab::testing
