#include "etalab/lab/zeros.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "etalab/eta/series.hpp"

namespace etalab::lab {

namespace {

using mp::BigComplex;

BigReal eta_abs(const BigReal& t, Precision prec) {
  const BigComplex s(BigReal::parse("0.5", prec), t.at(prec));
  return mp::abs(eta::eta_full(s, prec).value);
}

struct Grid {
  std::vector<BigReal> t;
  std::vector<BigReal> f;
};

void check_range(const BigReal& lo, const BigReal& hi, double max_width, const char* what) {
  if (!(lo < hi)) throw DomainError(std::string(what) + " needs lo < hi");
  if ((hi - lo).to_double() > max_width) {
    std::ostringstream msg;
    msg << what << " range wider than " << max_width;
    throw DomainError(msg.str());
  }
}

Grid scan(const BigReal& lo, const BigReal& hi, Precision prec) {
  Grid g;
  const BigReal step = BigReal::parse("0.05", prec);
  for (long k = 0;; ++k) {
    BigReal t = lo.at(prec) + step * k;
    if (!(t < hi)) break;
    g.t.push_back(t);
  }
  g.t.push_back(hi.at(prec));
  for (const BigReal& t : g.t) g.f.push_back(eta_abs(t, prec));
  return g;
}

struct Refined {
  ZeroResult zero;
  bool abandoned;  // no zero: the minimum levelled off above the no-zero threshold
};

// Golden-section search for the minimum of |eta(1/2 + it)| on [a, b].
Refined golden(BigReal a, BigReal b, Precision prec) {
  const BigReal inv_phi = (mp::sqrt(BigReal(5L, prec)) - BigReal(1L, prec)) / 2L;
  const BigReal tol = mp::ldexp(BigReal(1L, prec), -(prec.bits() / 2));
  const BigReal give_up_width = BigReal::parse("1e-8", prec);
  const BigReal no_zero = BigReal(kNoZeroResidual, prec);

  BigReal c = b - (b - a) * inv_phi;
  BigReal d = a + (b - a) * inv_phi;
  BigReal fc = eta_abs(c, prec);
  BigReal fd = eta_abs(d, prec);
  while ((b - a) > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = eta_abs(c, prec);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = eta_abs(d, prec);
    }
    if ((b - a) < give_up_width && fc > no_zero && fd > no_zero) break;
  }
  const bool left = fc < fd;
  BigReal t = left ? c : d;
  BigReal f = left ? fc : fd;
  const bool abandoned = f > no_zero;
  return {{std::move(t), std::move(f), {std::move(a), std::move(b)}}, abandoned};
}

Refined refine_around(const Grid& g, std::size_t k, Precision prec) {
  const BigReal& a = g.t[k == 0 ? 0 : k - 1];
  const BigReal& b = g.t[k + 1 < g.t.size() ? k + 1 : k];
  return golden(a, b, prec);
}

}  // namespace

ZeroResult locate_zero(const BigReal& lo, const BigReal& hi, Precision prec) {
  check_range(lo, hi, 5.0, "locate_zero");
  const Grid g = scan(lo, hi, prec);
  std::size_t best = 0;
  for (std::size_t k = 1; k < g.f.size(); ++k) {
    if (g.f[k] < g.f[best]) best = k;
  }
  Refined r = refine_around(g, best, prec);
  if (r.abandoned || r.zero.residual >= BigReal(kNoZeroResidual, prec)) {
    std::ostringstream msg;
    msg << "no critical-line zero in (" << lo.to_double() << ", " << hi.to_double()
        << "): minimum |eta| is " << r.zero.residual.to_double();
    throw NoZeroError(msg.str());
  }
  if (r.zero.residual >= BigReal(kAcceptResidual, prec)) {
    throw PrecisionError("zero near t = " + r.zero.t0.to_sci(12) + " only resolved to |eta| = " +
                         r.zero.residual.to_sci(4) + "; raise the precision");
  }
  return std::move(r.zero);
}

std::vector<ZeroResult> locate_zeros(const BigReal& lo, const BigReal& hi, Precision prec) {
  check_range(lo, hi, 100.0, "locate_zeros");
  const Grid g = scan(lo, hi, prec);
  const BigReal accept(kAcceptResidual, prec);
  const BigReal same = BigReal::parse("1e-10", prec);
  std::vector<ZeroResult> out;
  for (std::size_t k = 0; k < g.f.size(); ++k) {
    const bool below_left = k == 0 || !(g.f[k - 1] < g.f[k]);
    const bool below_right = k + 1 == g.f.size() || !(g.f[k + 1] < g.f[k]);
    if (!below_left || !below_right) continue;
    Refined r = refine_around(g, k, prec);
    if (r.abandoned || !(r.zero.residual < accept)) continue;
    if (!(r.zero.t0 > lo) || !(r.zero.t0 < hi)) continue;
    if (!out.empty() && mp::abs(out.back().t0 - r.zero.t0) < same) continue;
    out.push_back(std::move(r.zero));
  }
  return out;
}

}  // namespace etalab::lab
