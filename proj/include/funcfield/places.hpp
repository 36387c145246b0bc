#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "funcfield/gcd_free.hpp"
#include "funcfield/poly.hpp"
#include "funcfield/ratfunc.hpp"

namespace funcfield {

// A place of Q(x), seen over the algebraic closure: a finite place is a monic
// nonconstant polynomial standing for deg(poly) closure points that share one
// valuation, plus the single infinite place.  Squarefreeness of finite-place
// polynomials is verified here; irreducibility is the producer's contract.
class Place {
public:
  static Place finite(const Poly& p);
  static Place infinite();

  bool is_infinite() const { return infinite_; }
  const Poly& poly() const { return poly_; }  // pre: !is_infinite()
  int degree() const { return degree_; }

private:
  Place() = default;
  bool infinite_ = false;
  Poly poly_;
  int degree_ = 1;
};

// ord of f at p: multiplicity in num minus multiplicity in den for a finite
// place, deg den - deg num at infinity.  pre: f != 0.
long valuation(const RatFunc& f, const Place& p);

struct DivisorEntry {
  Poly support;   // gcd-free basis element
  long val;       // nonzero
  int degree;     // degree weight
};

// Zeros and poles of f with degree weights; entries are sorted canonically
// and the degree-weighted valuations (finite plus infinite) sum to zero.
struct Divisor {
  std::vector<DivisorEntry> finite;
  long infinite = 0;

  long weighted_sum() const;
};

Divisor divisor(const RatFunc& f);  // pre: f != 0

// Projective height of a single function: max(deg num, deg den) in canonical
// form.  height_from_divisor computes -sum min(0, v) over the divisor instead;
// the two must always agree.
long height(const RatFunc& f);               // pre: f != 0
long height_from_divisor(const RatFunc& f);  // pre: f != 0

// Projective height of a tuple: -sum over places of the minimum valuation,
// zero functions excluded from the minimum.  pre: not all entries zero.
long height_tuple(const std::vector<RatFunc>& us);

// A finite set of places: squarefree pairwise-coprime monic polynomials plus
// an optional infinite place.  size_over_closure is the degree-weighted count.
class SSet {
public:
  SSet(std::vector<Poly> finite_polys, bool include_infinity);

  const std::vector<Poly>& finite_polys() const { return finite_polys_; }
  bool include_infinity() const { return include_infinity_; }
  long size_over_closure() const { return size_; }

  // Smallest valid superset also containing the support of every f.
  SSet enlarged_with(const std::vector<RatFunc>& fs) const;

private:
  std::vector<Poly> finite_polys_;
  bool include_infinity_ = false;
  long size_ = 0;
};

bool is_s_unit(const RatFunc& f, const SSet& s);  // zero input returns false

// Multiplicative independence via divisor exponent vectors over the common
// gcd-free refinement: dependent iff the vectors are rationally parallel or
// one of them is zero.  dependence_witness returns (a, b) != (0, 0) with
// g^a * d^b constant when dependent, verified exactly.
bool mult_independent(const RatFunc& g, const RatFunc& d);
std::optional<std::pair<long, long>> dependence_witness(const RatFunc& g,
                                                        const RatFunc& d);

// The effective constant of the multiplicative-independence height bound:
// c > 0 with H(g^n / d^m) >= c * max(n, m) for all natural n, m, computed by
// minimizing the piecewise-linear height form over the boundary of the unit
// square.  lemma2_bound(g, d, M) returns ceil(M / c), so H(g^n/d^m) <= M
// forces max(n, m) <= lemma2_bound(g, d, M).
Rat lemma2_constant(const RatFunc& g, const RatFunc& d);
Int lemma2_bound(const RatFunc& g, const RatFunc& d, const Int& M);

// Degree-weighted sum of all valuations of f is zero; exposed as a self-test.
bool sum_formula_check(const RatFunc& f);  // pre: f != 0

// Complete description of the natural solutions (e, f) of the two-term
// exponential equation  coefA * rootA^e + coefB * rootB^f = 0  over Q(x):
// either no solution, finitely many isolated points, or a full arithmetic
// progression ("line").  Lines occur exactly when the root divisor vectors
// are parallel with matching orientation, the constant offset is consistent,
// and the step ratio rootA^step_e / rootB^step_f is a root of unity (+-1
// over the rationals; recorded as the witness).
struct TermPairRelation {
  enum class Kind { none, points, line };
  Kind kind = Kind::none;
  std::vector<std::pair<long, long>> points;
  long base_e = 0, base_f = 0;
  long step_e = 0, step_f = 0;
  int witness = 1;
};

TermPairRelation analyze_term_pair(const RatFunc& coefA, const RatFunc& rootA,
                                   const RatFunc& coefB, const RatFunc& rootB);

// The divisor-level exponent relation of the same pair, before any constant
// matching: the natural-number progression solving e*v(rootA) = f*v(rootB) +
// v(-coefB/coefA) at every place.  nullopt when the root vectors are not
// parallel with matching orientation or the offsets are inconsistent.
struct ExponentLine {
  long base_e = 0, base_f = 0;
  long step_e = 0, step_f = 0;
};

std::optional<ExponentLine> pair_exponent_line(const RatFunc& coefA,
                                               const RatFunc& rootA,
                                               const RatFunc& coefB,
                                               const RatFunc& rootB);

}  // namespace funcfield
