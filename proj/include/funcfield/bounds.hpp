#pragma once

#include <string>
#include <vector>

#include "funcfield/errors.hpp"
#include "funcfield/places.hpp"
#include "funcfield/recurrence.hpp"

namespace funcfield {

// Thrown when a solver or bound is asked about a recurrence that fails the
// theorems' hypotheses; carries the exact diagnosis.
class hypothesis_error : public ff_error {
public:
  explicit hypothesis_error(HypothesisReport rep)
      : ff_error("hypothesis violation: " + rep.describe()), rep_(std::move(rep)) {}
  const HypothesisReport& report() const { return rep_; }

private:
  HypothesisReport rep_;
};

// Parameters every bound formula depends on: the genus of the ambient
// function field (0 for Q(x); configurable inside the formulas only) and the
// degree-weighted size of the place set S.
struct BoundContext {
  long genus = 0;
  long s_size = 1;
};

struct TraceEntry {
  std::string label;
  std::string case_tag;
  Int value;
};

// Every intermediate constant of a bound computation, in evaluation order,
// plus the final bound (the maximum of the recorded per-exponent bounds) and
// the S-enlargement performed along the way.
struct BoundTrace {
  std::vector<TraceEntry> entries;
  Int final_bound = 0;
  std::vector<std::string> enlargement;

  void add(const std::string& label, const std::string& case_tag, const Int& v) {
    entries.push_back({label, case_tag, v});
  }
};

// Height bound for nonvanishing S-unit relations 1 + u_1 + ... + u_n = 0:
// binom(n, 2) * (|S| + max(0, 2g - 2)).
Int bm_bound(long n_terms, const BoundContext& ctx);

// Same-exponent case: two terms a_i alpha_i^t, a_j alpha_j^t in a minimal
// vanishing subsum give t <= ceil((C + max H(a_j/a_i)) / min H(a_eta/a_zeta)).
Int case1_bound(const SimpleRecurrence& rec, const Int& C);

// Mixed-exponent case where one exponent is already bounded by n_t_bound:
// the other is at most ceil((C + 2 max H(a_i) + n_t_bound max H(alpha_i)) /
// min H(alpha_i)).
Int case2_bound(const SimpleRecurrence& rec, const Int& C, const Int& n_t_bound);

// Distinct exponents, distinct roots: the power-ratio height bound feeds the
// multiplicative-independence constant of each root pair.
Int case3_bound(const SimpleRecurrence& rec, const Int& C);

// Bound N such that sum a_i alpha_i^n in O_S^* implies n <= N, after
// enlarging S so that every root and coefficient is an S-unit.
Int heintze_base_bound(const SimpleRecurrence& rec, const SSet& s,
                       const BoundContext& ctx);

// Full cascade for U_{n_1} + ... + U_{n_r} in O_S^*: cases I-III at every
// reduction level, and the same-root reduction closed either by height
// estimates over the offset range (default) or, for r = 2 with
// strict_case4, by exhaustive offset enumeration.
BoundTrace thm1_bound(const SimpleRecurrence& rec, long r, const SSet& s,
                      const BoundContext& ctx, bool strict_case4 = false);

// Constants for U_n + V_m + W_l = 0: the same-exponent chains for each of
// n, m, l, per-pair bounds for cross-sequence two-term subsums, and the
// independence bounds for three-term per-index subsums.
BoundTrace thm2_constants(const SimpleRecurrence& U, const SimpleRecurrence& V,
                          const SimpleRecurrence& W, const SSet& s,
                          const BoundContext& ctx);

// Helpers shared with the solvers.
Int ceil_div(const Int& num, const Int& den);  // pre: den > 0
long max_coeff_height(const SimpleRecurrence& rec);
long max_root_height(const SimpleRecurrence& rec);
long min_root_height(const SimpleRecurrence& rec);           // constant-root error if 0
long max_pair_coeff_ratio_height(const SimpleRecurrence& rec);
long min_pair_root_ratio_height(const SimpleRecurrence& rec);  // degeneracy error if 0

}  // namespace funcfield
