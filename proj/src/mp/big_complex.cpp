#include "etalab/mp/big_complex.hpp"

namespace etalab::mp {

BigComplex::BigComplex(Precision prec) : re_(prec), im_(prec) {}

BigComplex::BigComplex(const BigReal& re, const BigReal& im)
    : re_(re.at(max(re.prec(), im.prec()))), im_(im.at(max(re.prec(), im.prec()))) {}

BigComplex::BigComplex(const BigReal& re) : re_(re), im_(re.prec()) {}

BigComplex::BigComplex(double re, double im, Precision prec) : re_(re, prec), im_(im, prec) {}

BigComplex BigComplex::at(Precision prec) const { return {re_.at(prec), im_.at(prec)}; }

BigComplex BigComplex::operator-() const { return {-re_, -im_}; }

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigReal re = re_ * rhs.re_ - im_ * rhs.im_;
  BigReal im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  if (rhs.is_zero()) throw NonFiniteError("complex division by zero");
  const BigReal den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  BigReal re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
  BigReal im = (im_ * rhs.re_ - re_ * rhs.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigReal& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

std::string BigComplex::to_sci(int significant) const {
  std::string im = im_.to_sci(significant);
  if (im.empty() || im[0] != '-') im = "+" + im;
  return re_.to_sci(significant) + im + "i";
}

BigComplex conj(const BigComplex& z) { return {z.re(), -z.im()}; }

BigReal abs(const BigComplex& z) { return hypot(z.re(), z.im()); }

BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex exp(const BigComplex& z) {
  const BigReal m = exp(z.re());
  BigReal s(z.prec()), c(z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.im().raw(), MPFR_RNDN);
  return {m * c, m * s};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  return {log(abs(z)), arg(z)};
}

// sin(x+iy) = sin x cosh y + i cos x sinh y
BigComplex sin(const BigComplex& z) {
  BigReal s(z.prec()), c(z.prec()), sh(z.prec()), ch(z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.re().raw(), MPFR_RNDN);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im().raw(), MPFR_RNDN);
  return {s * ch, c * sh};
}

// cos(x+iy) = cos x cosh y - i sin x sinh y
BigComplex cos(const BigComplex& z) {
  BigReal s(z.prec()), c(z.prec()), sh(z.prec()), ch(z.prec());
  mpfr_sin_cos(s.raw(), c.raw(), z.re().raw(), MPFR_RNDN);
  mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im().raw(), MPFR_RNDN);
  return {c * ch, -(s * sh)};
}

BigReal relative_distance(const BigComplex& a, const BigComplex& b) {
  const BigReal d = abs(a - b);
  if (b.is_zero()) return d;
  return d / abs(b);
}

}  // namespace etalab::mp
