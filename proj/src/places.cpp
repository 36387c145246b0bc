#include "funcfield/places.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "funcfield/errors.hpp"
#include "funcfield/text.hpp"

namespace funcfield {

Place Place::finite(const Poly& p) {
  if (p.is_zero() || p.is_constant()) {
    throw invariant_error("finite place polynomial must be nonconstant");
  }
  if (!p.is_monic()) throw invariant_error("finite place polynomial must be monic");
  if (!is_squarefree(p)) {
    throw invariant_error("finite place polynomial must be squarefree");
  }
  Place pl;
  pl.infinite_ = false;
  pl.poly_ = p;
  pl.degree_ = p.degree();
  return pl;
}

Place Place::infinite() {
  Place pl;
  pl.infinite_ = true;
  pl.degree_ = 1;
  return pl;
}

long valuation(const RatFunc& f, const Place& p) {
  if (f.is_zero()) throw zero_function_error("valuation");
  if (p.is_infinite()) return f.den().degree() - f.num().degree();
  long vn = f.num().is_constant() ? 0 : multiplicity(f.num(), p.poly());
  long vd = f.den().is_constant() ? 0 : multiplicity(f.den(), p.poly());
  return vn - vd;
}

long Divisor::weighted_sum() const {
  long s = infinite;
  for (const auto& e : finite) s += e.val * e.degree;
  return s;
}

Divisor divisor(const RatFunc& f) {
  if (f.is_zero()) throw zero_function_error("divisor");
  SupportVectors sv = support_vectors({f});
  Divisor d;
  const auto& row = sv.rows[0];
  for (std::size_t j = 0; j < sv.basis.size(); ++j) {
    if (row[j] != 0) d.finite.push_back({sv.basis[j], row[j], sv.basis[j].degree()});
  }
  d.infinite = row.back();
  return d;
}

long height(const RatFunc& f) {
  if (f.is_zero()) throw zero_function_error("height");
  return std::max(f.num().degree(), f.den().degree());
}

long height_from_divisor(const RatFunc& f) {
  Divisor d = divisor(f);
  long h = 0;
  for (const auto& e : d.finite) {
    if (e.val < 0) h -= e.val * e.degree;
  }
  if (d.infinite < 0) h -= d.infinite;
  return h;
}

long height_tuple(const std::vector<RatFunc>& us) {
  std::vector<RatFunc> nonzero;
  for (const auto& u : us) {
    if (!u.is_zero()) nonzero.push_back(u);
  }
  if (nonzero.empty()) throw zero_function_error("tuple height");
  SupportVectors sv = support_vectors(nonzero);
  long h = 0;
  for (std::size_t j = 0; j < sv.basis.size(); ++j) {
    long mn = sv.rows[0][j];
    for (const auto& row : sv.rows) mn = std::min(mn, row[j]);
    h -= mn * sv.basis[j].degree();
  }
  long mi = sv.rows[0].back();
  for (const auto& row : sv.rows) mi = std::min(mi, row.back());
  h -= mi;
  return h;
}

SSet::SSet(std::vector<Poly> finite_polys, bool include_infinity)
    : finite_polys_(std::move(finite_polys)), include_infinity_(include_infinity) {
  for (const auto& p : finite_polys_) {
    if (p.is_zero() || p.is_constant()) {
      throw invariant_error("S-set polynomial must be nonconstant");
    }
    if (!p.is_monic()) throw invariant_error("S-set polynomial must be monic");
    if (!is_squarefree(p)) {
      throw invariant_error("S-set polynomial must be squarefree: " + to_string(p));
    }
  }
  for (std::size_t i = 0; i < finite_polys_.size(); ++i) {
    for (std::size_t j = i + 1; j < finite_polys_.size(); ++j) {
      if (!poly_gcd(finite_polys_[i], finite_polys_[j]).is_constant()) {
        throw invariant_error("S-set polynomials must be pairwise coprime");
      }
    }
  }
  std::sort(finite_polys_.begin(), finite_polys_.end(),
            [](const Poly& a, const Poly& b) { return compare(a, b) < 0; });
  size_ = include_infinity_ ? 1 : 0;
  for (const auto& p : finite_polys_) size_ += p.degree();
}

SSet SSet::enlarged_with(const std::vector<RatFunc>& fs) const {
  std::vector<Poly> parts = finite_polys_;
  bool inf = include_infinity_;
  for (const auto& f : fs) {
    if (f.is_zero()) throw zero_function_error("S-set enlargement");
    if (!f.num().is_constant()) parts.push_back(squarefree_part(f.num()));
    if (!f.den().is_constant()) parts.push_back(squarefree_part(f.den()));
    if (f.num().degree() != f.den().degree()) inf = true;
  }
  if (parts.empty()) return SSet({}, inf);
  // gcd-free refinement of squarefree inputs stays squarefree
  GcdFreeBasis gfb = gcd_free_basis(parts);
  return SSet(gfb.basis, inf);
}

bool is_s_unit(const RatFunc& f, const SSet& s) {
  if (f.is_zero()) return false;
  if (!s.include_infinity() && f.num().degree() != f.den().degree()) return false;
  for (Poly part : {f.num(), f.den()}) {
    if (part.is_constant()) continue;
    for (const auto& p : s.finite_polys()) {
      for (;;) {
        Poly g = poly_gcd(part, p);
        if (g.is_constant()) break;
        part = divmod(part, g).quot;
        if (part.is_constant()) break;
      }
      if (part.is_constant()) break;
    }
    if (!part.is_constant()) return false;
  }
  return true;
}

namespace {

// Number of entries: basis size + 1 (infinite place last).
struct PairVectors {
  std::vector<long> g, d;
  std::vector<int> weight;
};

PairVectors pair_vectors(const RatFunc& g, const RatFunc& d) {
  SupportVectors sv = support_vectors({g, d});
  PairVectors pv;
  pv.g = sv.rows[0];
  pv.d = sv.rows[1];
  for (const auto& b : sv.basis) pv.weight.push_back(b.degree());
  pv.weight.push_back(1);
  return pv;
}

bool vector_is_zero(const std::vector<long>& v) {
  for (long x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool vectors_parallel(const std::vector<long>& a, const std::vector<long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      // cross products as exact big integers to dodge overflow
      if (Int(a[i]) * Int(b[j]) != Int(a[j]) * Int(b[i])) return false;
    }
  }
  return true;
}

}  // namespace

bool mult_independent(const RatFunc& g, const RatFunc& d) {
  return !dependence_witness(g, d).has_value();
}

std::optional<std::pair<long, long>> dependence_witness(const RatFunc& g,
                                                        const RatFunc& d) {
  if (g.is_zero() || d.is_zero()) throw zero_function_error("multiplicative independence");
  if (g.is_constant()) return std::make_pair(1L, 0L);
  if (d.is_constant()) return std::make_pair(0L, 1L);
  PairVectors pv = pair_vectors(g, d);
  if (!vectors_parallel(pv.g, pv.d)) return std::nullopt;
  // parallel nonzero vectors: a*G + b*D = 0 with (a, b) = (D_k, -G_k)
  for (std::size_t k = 0; k < pv.g.size(); ++k) {
    if (pv.g[k] != 0 || pv.d[k] != 0) {
      long a = pv.d[k];
      long b = -pv.g[k];
      long gg = std::gcd(std::abs(a), std::abs(b));
      if (gg > 1) {
        a /= gg;
        b /= gg;
      }
      if (!(g.pow(a) * d.pow(b)).is_constant()) {
        throw invariant_error("dependence witness failed exact verification");
      }
      return std::make_pair(a, b);
    }
  }
  return std::nullopt;  // unreachable: both nonconstant
}

Rat lemma2_constant(const RatFunc& g, const RatFunc& d) {
  if (g.is_zero() || d.is_zero()) throw zero_function_error("lemma2 constant");
  if (g.is_constant() || d.is_constant()) {
    throw constant_input_error("lemma2 constant requires nonconstant arguments");
  }
  if (!mult_independent(g, d)) throw dependence_error();
  PairVectors pv = pair_vectors(g, d);

  // phi(s, t) = 1/2 sum w |s*G - t*D|, evaluated exactly at rational points
  auto phi = [&pv](const Rat& s, const Rat& t) {
    Rat acc(0);
    for (std::size_t i = 0; i < pv.g.size(); ++i) {
      Rat term = s * Rat(pv.g[i]) - t * Rat(pv.d[i]);
      if (term < 0) term = -term;
      acc += term * Rat(pv.weight[i]);
    }
    return Rat(acc / 2);
  };

  std::vector<std::pair<Rat, Rat>> candidates = {
      {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  for (std::size_t i = 0; i < pv.g.size(); ++i) {
    if (pv.d[i] != 0) {
      Rat t(pv.g[i], pv.d[i]);
      t.canonicalize();
      if (t > 0 && t < 1) candidates.emplace_back(Rat(1), t);
    }
    if (pv.g[i] != 0) {
      Rat s(pv.d[i], pv.g[i]);
      s.canonicalize();
      if (s > 0 && s < 1) candidates.emplace_back(s, Rat(1));
    }
  }
  Rat best = phi(candidates[0].first, candidates[0].second);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Rat v = phi(candidates[i].first, candidates[i].second);
    if (v < best) best = v;
  }
  if (best <= 0) throw invariant_error("lemma2 constant must be positive");
  return best;
}

Int lemma2_bound(const RatFunc& g, const RatFunc& d, const Int& M) {
  if (M < 0) throw invariant_error("lemma2 bound needs M >= 0");
  Rat c = lemma2_constant(g, d);
  Rat ratio = Rat(M) / c;
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
  return q;
}

bool sum_formula_check(const RatFunc& f) {
  return divisor(f).weighted_sum() == 0;
}

namespace {

// first index where v is nonzero, or npos
std::size_t first_nonzero(const std::vector<long>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return static_cast<std::size_t>(-1);
}

// v = c * prim for a primitive integer vector prim with positive first
// nonzero entry; returns c.
long split_primitive(const std::vector<long>& v, std::vector<long>& prim) {
  long content = 0;
  for (long x : v) content = std::gcd(content, std::abs(x));
  if (content == 0) return 0;
  std::size_t k = first_nonzero(v);
  long sign = v[k] > 0 ? 1 : -1;
  long c = sign * content;
  prim.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) prim[i] = v[i] / c;
  return c;
}

// x with a*x == tau (mod m), for gcd(a, m) | tau, m > 0
long solve_congruence(long a, long tau, long m) {
  long g = std::gcd(std::abs(a), m);
  long m2 = m / g;
  if (m2 == 1) return 0;
  Int inv;
  Int am(a / g), mm(m2);
  mpz_invert(inv.get_mpz_t(), am.get_mpz_t(), mm.get_mpz_t());
  Int x = (inv * Int(tau / g)) % mm;
  if (x < 0) x += mm;
  return x.get_si();
}

}  // namespace

namespace {

struct PairSetup {
  std::vector<long> ra, rb, kv;  // support rows of rootA, rootB, -coefB/coefA
};

PairSetup pair_setup(const RatFunc& coefA, const RatFunc& rootA,
                     const RatFunc& coefB, const RatFunc& rootB) {
  if (coefA.is_zero() || coefB.is_zero()) throw zero_function_error("term pair");
  if (rootA.is_constant() || rootB.is_constant()) {
    throw constant_input_error("term pair analysis requires nonconstant roots");
  }
  const RatFunc kappa = -coefB / coefA;  // rootA^e / rootB^f must equal kappa
  SupportVectors sv = support_vectors({rootA, rootB, kappa});
  return {sv.rows[0], sv.rows[1], sv.rows[2]};
}

// Solves e*ra - f*rb = kv over naturals when ra, rb are parallel with the
// same orientation; yields the progression (base + u*step).
std::optional<ExponentLine> parallel_line(const PairSetup& ps) {
  const auto& ra = ps.ra;
  const auto& rb = ps.rb;
  const auto& kv = ps.kv;
  if (!vectors_parallel(ra, rb)) return std::nullopt;

  std::vector<long> prim;
  long pA = split_primitive(ra, prim);
  std::size_t k = first_nonzero(ra);
  if (rb[k] % prim[k] != 0) return std::nullopt;
  long pB = rb[k] / prim[k];
  for (std::size_t t = 0; t < prim.size(); ++t) {
    if (rb[t] != pB * prim[t]) return std::nullopt;
  }
  if (kv[k] % prim[k] != 0) return std::nullopt;
  long tau = kv[k] / prim[k];
  for (std::size_t t = 0; t < prim.size(); ++t) {
    if (kv[t] != tau * prim[t]) return std::nullopt;
  }
  if (pA < 0) {
    pA = -pA;
    pB = -pB;
    tau = -tau;
  }
  if (pB <= 0) return std::nullopt;  // opposite orientation: no progression

  long gamma = std::gcd(pA, pB);
  if (tau % gamma != 0) return std::nullopt;
  ExponentLine line;
  line.step_e = pB / gamma;
  line.step_f = pA / gamma;
  line.base_e = solve_congruence(pA, tau, pB);
  line.base_f = (line.base_e * pA - tau) / pB;
  while (line.base_f < 0) {
    line.base_e += line.step_e;
    line.base_f += line.step_f;
  }
  return line;
}

}  // namespace

std::optional<ExponentLine> pair_exponent_line(const RatFunc& coefA,
                                               const RatFunc& rootA,
                                               const RatFunc& coefB,
                                               const RatFunc& rootB) {
  return parallel_line(pair_setup(coefA, rootA, coefB, rootB));
}

TermPairRelation analyze_term_pair(const RatFunc& coefA, const RatFunc& rootA,
                                   const RatFunc& coefB, const RatFunc& rootB) {
  TermPairRelation rel;
  PairSetup ps = pair_setup(coefA, rootA, coefB, rootB);
  const auto& ra = ps.ra;
  const auto& rb = ps.rb;
  const auto& kv = ps.kv;

  auto exact_check = [&](long e, long f) {
    return (coefA * rootA.pow(e) + coefB * rootB.pow(f)).is_zero();
  };
  auto add_point = [&](long e, long f) {
    if (e >= 0 && f >= 0 && exact_check(e, f)) {
      rel.points.emplace_back(e, f);
      rel.kind = TermPairRelation::Kind::points;
    }
  };

  if (!vectors_parallel(ra, rb)) {
    // unique candidate from two independent coordinates
    std::size_t i = 0, j = 0;
    Int det(0);
    bool found = false;
    for (i = 0; i < ra.size() && !found; ++i) {
      for (j = i + 1; j < ra.size(); ++j) {
        det = Int(rb[i]) * Int(ra[j]) - Int(ra[i]) * Int(rb[j]);
        if (det != 0) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    Int en = Int(rb[i]) * Int(kv[j]) - Int(kv[i]) * Int(rb[j]);
    Int fn = Int(ra[i]) * Int(kv[j]) - Int(kv[i]) * Int(ra[j]);
    if (en % det != 0 || fn % det != 0) return rel;
    Int e = en / det, f = fn / det;
    if (!e.fits_slong_p() || !f.fits_slong_p()) return rel;
    // remaining coordinates must agree; exact_check settles it anyway
    add_point(e.get_si(), f.get_si());
    return rel;
  }

  std::optional<ExponentLine> lineOpt = parallel_line(ps);
  if (!lineOpt) {
    // parallel with opposite orientation: finitely many candidates on
    // e*pA + f*|pB| = tau
    std::vector<long> prim;
    long pA = split_primitive(ra, prim);
    std::size_t k = first_nonzero(ra);
    if (rb[k] % prim[k] != 0 || kv[k] % prim[k] != 0) return rel;
    long pB = rb[k] / prim[k];
    long tau = kv[k] / prim[k];
    for (std::size_t t = 0; t < prim.size(); ++t) {
      if (rb[t] != pB * prim[t] || kv[t] != tau * prim[t]) return rel;
    }
    if (pA < 0) {
      pA = -pA;
      pB = -pB;
      tau = -tau;
    }
    if (pB > 0) return rel;  // inconsistent offsets already rejected
    if (tau < 0) return rel;
    for (long e = 0; e * pA <= tau; ++e) {
      long rest = tau - e * pA;
      if (rest % (-pB) == 0) add_point(e, rest / (-pB));
    }
    return rel;
  }

  const ExponentLine line = *lineOpt;
  RatFunc stepRatio = rootA.pow(line.step_e) / rootB.pow(line.step_f);
  if (!stepRatio.is_constant()) {
    throw invariant_error("pair step ratio must be constant");
  }
  Rat w = stepRatio.constant_value();

  if (w == 1 || w == -1) {
    const int wit = (w == 1) ? 1 : -1;
    for (int shift = 0; shift < (wit == 1 ? 1 : 2); ++shift) {
      long e = line.base_e + shift * line.step_e;
      long f = line.base_f + shift * line.step_f;
      if (exact_check(e, f)) {
        rel.kind = TermPairRelation::Kind::line;
        rel.base_e = e;
        rel.base_f = f;
        rel.step_e = (wit == 1) ? line.step_e : 2 * line.step_e;
        rel.step_f = (wit == 1) ? line.step_f : 2 * line.step_f;
        rel.witness = wit;
        return rel;
      }
    }
    return rel;
  }

  // |w| != 1: the value ratio moves by w each step, so at most one u matches
  RatFunc r0 = (coefA * rootA.pow(line.base_e)) / (-coefB * rootB.pow(line.base_f));
  if (!r0.is_constant()) throw invariant_error("pair base ratio must be constant");
  Rat c0 = r0.constant_value();
  Rat target = 1 / c0;
  Rat pw(1);
  const bool grow = (abs(w) > 1);
  for (long u = 0; u <= 8192; ++u) {
    if (pw == target) {
      add_point(line.base_e + u * line.step_e, line.base_f + u * line.step_f);
      return rel;
    }
    if (grow ? (abs(pw) > abs(target)) : (abs(pw) < abs(target))) break;
    pw *= w;
  }
  return rel;
}

}  // namespace funcfield
