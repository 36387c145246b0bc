#include "funcfield/selfcheck.hpp"

#include <cstdlib>
#include <vector>

#include "funcfield/gcd_free.hpp"
#include "funcfield/places.hpp"
#include "funcfield/randomgen.hpp"

namespace funcfield {

namespace {

bool height_axioms(RandomGen& gen, int count, std::ostream& os) {
  int failures = 0;
  for (int it = 0; it < count; ++it) {
    RatFunc f = gen.ratfunc(12);
    RatFunc g = gen.ratfunc(12);
    long hf = height(f), hg = height(g);
    if (hf < 0 || hf != height(f.reciprocal())) ++failures;                   // (a)
    RatFunc sum = f + g;
    if (!sum.is_zero()) {
      long hs = height(sum);
      if (!(hf - hg <= hs && hs <= hf + hg)) ++failures;                      // (b)
    }
    long hp = height(f * g);
    if (!(hf - hg <= hp && hp <= hf + hg)) ++failures;                        // (c)
    long n = gen.uniform(-3, 3);
    if (height(f.pow(n)) != std::labs(n) * hf && !f.is_zero()) ++failures;    // (d)
    if ((hf == 0) != f.is_constant()) ++failures;                             // (e)
    if (!f.is_constant()) {
      int dP = static_cast<int>(gen.uniform(0, 4));
      std::vector<Rat> cs(static_cast<std::size_t>(dP) + 1);
      for (auto& c : cs) c = gen.rat(9, 4);
      Poly P = Poly::from_coeffs(std::move(cs));
      if (P.is_zero()) P = Poly(Rat(1));
      RatFunc acc;
      for (int i = P.degree(); i >= 0; --i) {
        acc = acc * f + RatFunc(P.coeff(i));
      }
      if (height(acc) != static_cast<long>(P.degree()) * hf) ++failures;      // (f)
    }
  }
  os << "height axioms (a)-(f): " << (failures == 0 ? "ok" : "FAIL") << "\n";
  return failures == 0;
}

bool sum_formula(RandomGen& gen, int count, std::ostream& os) {
  int failures = 0;
  for (int it = 0; it < count; ++it) {
    if (!sum_formula_check(gen.ratfunc(12))) ++failures;
  }
  os << "sum formula: " << (failures == 0 ? "ok" : "FAIL") << "\n";
  return failures == 0;
}

bool height_consistency(RandomGen& gen, int count, std::ostream& os) {
  int failures = 0;
  for (int it = 0; it < count; ++it) {
    RatFunc f = gen.ratfunc(12);
    if (height(f) != height_from_divisor(f)) ++failures;
  }
  os << "height consistency: " << (failures == 0 ? "ok" : "FAIL") << "\n";
  return failures == 0;
}

bool gcd_free_reconstruction(RandomGen& gen, int count, std::ostream& os) {
  int failures = 0;
  for (int it = 0; it < count; ++it) {
    // products of small factors with multiplicities keep degrees <= 12
    std::vector<Poly> inputs;
    int k = static_cast<int>(gen.uniform(1, 3));
    for (int i = 0; i < k; ++i) {
      Poly prod(Rat(1));
      int parts = static_cast<int>(gen.uniform(1, 3));
      for (int j = 0; j < parts; ++j) {
        Poly f = gen.poly(2, true);
        int e = static_cast<int>(gen.uniform(1, 2));
        prod = prod * f.pow(static_cast<unsigned long>(e));
      }
      if (prod.degree() > 12 || prod.is_zero()) prod = gen.poly(3, true);
      inputs.push_back(prod);
    }
    GcdFreeBasis basis = gcd_free_basis(inputs);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      Poly rebuilt(basis.constants[i]);
      for (std::size_t j = 0; j < basis.basis.size(); ++j) {
        long e = basis.exponents[i][j];
        if (e > 0) rebuilt = rebuilt * basis.basis[j].pow(static_cast<unsigned long>(e));
      }
      if (!(rebuilt == inputs[i])) ++failures;
    }
    for (std::size_t a = 0; a < basis.basis.size(); ++a) {
      for (std::size_t b = a + 1; b < basis.basis.size(); ++b) {
        if (!poly_gcd(basis.basis[a], basis.basis[b]).is_constant()) ++failures;
      }
    }
  }
  os << "gcd-free reconstruction: " << (failures == 0 ? "ok" : "FAIL") << "\n";
  return failures == 0;
}

bool independence_witnesses(RandomGen& gen, int count, std::ostream& os) {
  int failures = 0;
  for (int it = 0; it < count; ++it) {
    RatFunc g = gen.ratfunc(4);
    if (g.is_constant()) continue;
    long k = gen.uniform(1, 3);
    Rat c = gen.rat(5, 3);
    if (c == 0) c = Rat(1);
    RatFunc d = g.pow(k) * RatFunc(c);
    auto witness = dependence_witness(g, d);
    if (!witness) {
      ++failures;
      continue;
    }
    auto [a, b] = *witness;
    if ((a == 0 && b == 0) || !(g.pow(a) * d.pow(b)).is_constant()) ++failures;
  }
  os << "independence witnesses: " << (failures == 0 ? "ok" : "FAIL") << "\n";
  return failures == 0;
}

}  // namespace

bool run_selfcheck(std::uint64_t seed, int count, std::ostream& os) {
  os << "seed: " << seed << "\n";
  RandomGen gen(seed);
  bool ok = true;
  ok &= height_axioms(gen, count, os);
  ok &= sum_formula(gen, count, os);
  ok &= height_consistency(gen, count, os);
  ok &= gcd_free_reconstruction(gen, count, os);
  ok &= independence_witnesses(gen, count, os);
  os << (ok ? "selfcheck passed" : "selfcheck FAILED") << "\n";
  return ok;
}

}  // namespace funcfield
