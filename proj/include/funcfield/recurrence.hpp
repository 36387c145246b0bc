#pragma once

#include <utility>
#include <vector>

#include "funcfield/ratfunc.hpp"

namespace funcfield {

// Simple linear recurrence over Q(x) in root/coefficient form:
// U_n = sum_i coeffs[i] * roots[i]^n, with pairwise distinct nonzero roots
// and nonzero coefficients, order >= 2.
class SimpleRecurrence {
public:
  SimpleRecurrence(std::vector<RatFunc> roots, std::vector<RatFunc> coeffs);

  int order() const { return static_cast<int>(roots_.size()); }
  const std::vector<RatFunc>& roots() const { return roots_; }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }

private:
  std::vector<RatFunc> roots_;
  std::vector<RatFunc> coeffs_;
};

// Exact n-th term (may be the zero function).
RatFunc term(const SimpleRecurrence& rec, long n);

// Coefficients w_1..w_d of X^d - w_1 X^(d-1) - ... - w_d, the characteristic
// polynomial with the recurrence's roots.
std::vector<RatFunc> char_poly_coeffs(const SimpleRecurrence& rec);

// Unique a_1..a_d with sum a_i roots[i]^n = initials[n] for n = 0..d-1,
// solved exactly (the Vandermonde system is invertible for distinct roots).
std::vector<RatFunc> coeffs_from_initials(const std::vector<RatFunc>& roots,
                                          const std::vector<RatFunc>& initials);

// Hypotheses of the finiteness theorems, checked exactly.  Each witness list
// is nonempty exactly when its flag is false.
struct HypothesisReport {
  bool simple = true;
  bool non_degenerate = true;
  bool roots_nonconstant = true;
  bool pairwise_mult_independent = true;
  std::vector<std::pair<int, int>> simple_witnesses;
  std::vector<std::pair<int, int>> degenerate_witnesses;
  std::vector<int> constant_root_witnesses;
  std::vector<std::pair<int, int>> dependent_witnesses;

  bool all_ok() const {
    return simple && non_degenerate && roots_nonconstant && pairwise_mult_independent;
  }
  std::string describe() const;
};

HypothesisReport validate(const SimpleRecurrence& rec);

}  // namespace funcfield
