#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <vector>

namespace funcfield {

using Rat = mpq_class;
using Int = mpz_class;

// Canonicalized rational from a numerator/denominator pair.
Rat make_rat(long num, long den = 1);

// Dense univariate polynomial over the rationals.  Coefficient i belongs to
// x^i.  All arithmetic is exact; the zero polynomial has an empty coefficient
// vector and degree() == kNegInf.
class Poly {
public:
  static constexpr int kNegInf = std::numeric_limits<int>::min();

  Poly() = default;
  explicit Poly(const Rat& c);
  explicit Poly(long c);

  static Poly x();
  static Poly monomial(const Rat& c, int k);
  static Poly from_coeffs(std::vector<Rat> cs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const {
    return coeffs_.empty() ? kNegInf : static_cast<int>(coeffs_.size()) - 1;
  }
  const Rat& coeff(int i) const;  // zero outside the stored range
  const Rat& leading() const;     // pre: !is_zero()
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  Poly monic() const;  // pre: !is_zero()
  Poly derivative() const;
  Poly pow(unsigned long e) const;
  Rat eval(const Rat& v) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  void trim();
  std::vector<Rat> coeffs_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rat& c);

struct PolyDivMod {
  Poly quot;
  Poly rem;
};

// Euclidean division; pre: b != 0.
PolyDivMod divmod(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);  // b | a exactly; pre: b != 0

// Monic greatest common divisor; poly_gcd(0, 0) == 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Largest e with p^e | f.  pre: f != 0, p nonconstant.
int multiplicity(const Poly& f, const Poly& p);

// Monic product of the distinct irreducible factors (f / gcd(f, f')).
Poly squarefree_part(const Poly& f);  // pre: f != 0
bool is_squarefree(const Poly& f);    // pre: f != 0

// Yun decomposition: monic squarefree pairwise-coprime parts with their
// multiplicities, f = lc * prod part^mult.  pre: f != 0.
struct SquarefreeFactor {
  Poly part;
  int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& f);

// Total order used for canonical sorting of supports: by degree, then
// lexicographically on coefficients from the leading one down.
int compare(const Poly& a, const Poly& b);

}  // namespace funcfield
