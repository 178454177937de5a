#pragma once

#include <string>

#include "etalab/mp/big_real.hpp"

namespace etalab::mp {

// Complex value whose parts always carry the same precision.
class BigComplex {
 public:
  explicit BigComplex(Precision prec = Precision());
  BigComplex(const BigReal& re, const BigReal& im);
  explicit BigComplex(const BigReal& re);
  BigComplex(double re, double im, Precision prec);

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  Precision prec() const { return re_.prec(); }
  BigComplex at(Precision prec) const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  BigComplex operator-() const;
  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const BigReal& rhs);
  BigComplex& operator/=(const BigReal& rhs);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
  friend BigComplex operator*(const BigReal& b, BigComplex a) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigReal& b) { return a /= b; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_sci(int significant) const;

 private:
  BigReal re_;
  BigReal im_;
};

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
// |a - b| / |b|, or |a - b| when b is zero.
BigReal relative_distance(const BigComplex& a, const BigComplex& b);

}  // namespace etalab::mp
