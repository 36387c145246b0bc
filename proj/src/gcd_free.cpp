#include "funcfield/gcd_free.hpp"

#include <algorithm>

#include "funcfield/errors.hpp"

namespace funcfield {

namespace {

void push_unique(std::vector<Poly>& work, const Poly& p) {
  if (p.is_constant()) return;
  for (const auto& q : work) {
    if (q == p) return;
  }
  work.push_back(p);
}

// Factor refinement: replace a pair with common factor g by (a/g, b/g, g)
// until the list is pairwise coprime.  The total degree of the list strictly
// drops at every step, so this terminates.
void refine(std::vector<Poly>& work) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        Poly g = poly_gcd(work[i], work[j]);
        if (g.is_constant()) continue;
        Poly a = divmod(work[i], g).quot.monic();
        Poly b = divmod(work[j], g).quot.monic();
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        push_unique(work, g);
        push_unique(work, a);
        push_unique(work, b);
        changed = true;
      }
    }
  }
}

}  // namespace

GcdFreeBasis gcd_free_basis(const std::vector<Poly>& inputs) {
  for (const auto& p : inputs) {
    if (p.is_zero()) throw zero_input_error();
  }

  // seeding with the squarefree parts keeps distinct multiplicity classes of
  // one input in distinct basis elements
  std::vector<Poly> work;
  for (const auto& p : inputs) {
    if (p.is_constant()) continue;
    for (const auto& sf : squarefree_decomposition(p)) push_unique(work, sf.part);
  }
  refine(work);
  std::sort(work.begin(), work.end(),
            [](const Poly& a, const Poly& b) { return compare(a, b) < 0; });

  GcdFreeBasis out;
  out.basis = std::move(work);
  out.exponents.reserve(inputs.size());
  out.constants.reserve(inputs.size());
  for (const auto& p : inputs) {
    std::vector<long> row(out.basis.size(), 0);
    Rat c = p.leading();
    if (!p.is_constant()) {
      Poly rest = p.monic();
      for (std::size_t j = 0; j < out.basis.size(); ++j) {
        while (!rest.is_constant()) {
          auto [q, r] = divmod(rest, out.basis[j]);
          if (!r.is_zero()) break;
          ++row[j];
          rest = std::move(q);
        }
      }
      if (!rest.is_constant()) {
        throw invariant_error("gcd-free basis failed to reconstruct an input");
      }
      c *= rest.coeff(0);
    }
    out.exponents.push_back(std::move(row));
    out.constants.push_back(c);
  }
  return out;
}

SupportVectors support_vectors(const std::vector<RatFunc>& fs) {
  std::vector<Poly> parts;
  for (const auto& f : fs) {
    if (f.is_zero()) throw zero_function_error("support vector");
    if (!f.num().is_constant()) parts.push_back(f.num());
    if (!f.den().is_constant()) parts.push_back(f.den());
  }
  GcdFreeBasis gfb = gcd_free_basis(parts);

  SupportVectors out;
  out.basis = gfb.basis;
  out.rows.reserve(fs.size());
  std::size_t k = 0;
  for (const auto& f : fs) {
    std::vector<long> row(out.basis.size() + 1, 0);
    if (!f.num().is_constant()) {
      const auto& e = gfb.exponents[k++];
      for (std::size_t j = 0; j < e.size(); ++j) row[j] += e[j];
    }
    if (!f.den().is_constant()) {
      const auto& e = gfb.exponents[k++];
      for (std::size_t j = 0; j < e.size(); ++j) row[j] -= e[j];
    }
    row.back() = f.den().degree() - f.num().degree();
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace funcfield
