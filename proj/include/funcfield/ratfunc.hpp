#pragma once

#include "funcfield/poly.hpp"

namespace funcfield {

// Rational function over Q in canonical form: coprime numerator and
// denominator, monic denominator, zero represented as 0/1.  Values are
// immutable after construction and safe to share between threads.
class RatFunc {
public:
  RatFunc() : num_(), den_(Rat(1)) {}
  explicit RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
  explicit RatFunc(long c) : num_(c), den_(Rat(1)) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
  RatFunc(const Poly& num, const Poly& den);  // throws zero_denominator_error

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // pre: is_constant()
  Rat constant_value() const;

  RatFunc operator-() const;
  RatFunc reciprocal() const;  // pre: !is_zero()
  RatFunc pow(long e) const;   // pre: e >= 0 or !is_zero(); pow(f, 0) == 1

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  Poly num_;
  Poly den_;
};

int compare(const RatFunc& a, const RatFunc& b);

}  // namespace funcfield
