#include "funcfield/ratfunc.hpp"

#include "funcfield/errors.hpp"

namespace funcfield {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw zero_denominator_error();
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = poly_gcd(num, den);
  Poly n = divmod(num, g).quot;
  Poly d = divmod(den, g).quot;
  // make the denominator monic, folding its leading coefficient into num
  const Rat lc = d.leading();
  if (lc != 1) {
    d = d.monic();
    n *= Rat(1) / lc;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw invariant_error("constant_value on a nonconstant function");
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::reciprocal() const {
  if (is_zero()) throw division_by_zero_error();
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(Rat(1));
  if (e < 0) {
    if (is_zero()) throw division_by_zero_error();
    return reciprocal().pow(-e);
  }
  // num/den stay coprime under powering, so build the pieces directly.
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned long>(e));
  r.den_ = den_.pow(static_cast<unsigned long>(e));
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw division_by_zero_error();
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

int compare(const RatFunc& a, const RatFunc& b) {
  int c = compare(a.num(), b.num());
  if (c != 0) return c;
  return compare(a.den(), b.den());
}

}  // namespace funcfield
