#pragma once

#include <vector>

#include "funcfield/poly.hpp"
#include "funcfield/ratfunc.hpp"

namespace funcfield {

// Pairwise-coprime multiplicative basis for a list of nonzero polynomials.
// Every input equals constants[i] * prod basis[j]^exponents[i][j] exactly.
// The basis substitutes for irreducible factorization in all divisor,
// height and independence computations.
struct GcdFreeBasis {
  std::vector<Poly> basis;                    // monic, nonconstant, sorted
  std::vector<std::vector<long>> exponents;   // one row per input
  std::vector<Rat> constants;                 // leftover constant per input
};

GcdFreeBasis gcd_free_basis(const std::vector<Poly>& inputs);

// Exponent rows of a set of rational functions over one shared basis,
// including a trailing entry for the infinite place (deg den - deg num).
// Zero functions are not allowed.
struct SupportVectors {
  std::vector<Poly> basis;
  std::vector<std::vector<long>> rows;  // row size = basis.size() + 1
};

SupportVectors support_vectors(const std::vector<RatFunc>& fs);

}  // namespace funcfield
