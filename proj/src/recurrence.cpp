#include "funcfield/recurrence.hpp"

#include <string>

#include "funcfield/errors.hpp"
#include "funcfield/places.hpp"

namespace funcfield {

SimpleRecurrence::SimpleRecurrence(std::vector<RatFunc> roots,
                                   std::vector<RatFunc> coeffs)
    : roots_(std::move(roots)), coeffs_(std::move(coeffs)) {
  if (roots_.size() != coeffs_.size()) {
    throw invariant_error("recurrence needs as many coefficients as roots");
  }
  if (roots_.size() < 2) throw invariant_error("recurrence order must be at least 2");
  for (const auto& r : roots_) {
    if (r.is_zero()) throw invariant_error("recurrence roots must be nonzero");
  }
  for (const auto& c : coeffs_) {
    if (c.is_zero()) throw invariant_error("recurrence coefficients must be nonzero");
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    for (std::size_t j = i + 1; j < roots_.size(); ++j) {
      if (roots_[i] == roots_[j]) {
        throw invariant_error("recurrence roots must be pairwise distinct");
      }
    }
  }
}

RatFunc term(const SimpleRecurrence& rec, long n) {
  RatFunc acc;
  for (int i = 0; i < rec.order(); ++i) {
    acc = acc + rec.coeffs()[static_cast<std::size_t>(i)] *
                    rec.roots()[static_cast<std::size_t>(i)].pow(n);
  }
  return acc;
}

std::vector<RatFunc> char_poly_coeffs(const SimpleRecurrence& rec) {
  // elementary symmetric functions by iterated convolution
  const int d = rec.order();
  std::vector<RatFunc> e(static_cast<std::size_t>(d) + 1);
  e[0] = RatFunc(Rat(1));
  for (int i = 0; i < d; ++i) {
    const RatFunc& alpha = rec.roots()[static_cast<std::size_t>(i)];
    for (int k = i + 1; k >= 1; --k) {
      e[static_cast<std::size_t>(k)] =
          e[static_cast<std::size_t>(k)] + alpha * e[static_cast<std::size_t>(k - 1)];
    }
  }
  // X^d - w_1 X^(d-1) - ... - w_d = prod (X - alpha_i): w_k = (-1)^(k+1) e_k
  std::vector<RatFunc> w(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) {
    w[static_cast<std::size_t>(k - 1)] =
        (k % 2 == 1) ? e[static_cast<std::size_t>(k)] : -e[static_cast<std::size_t>(k)];
  }
  return w;
}

std::vector<RatFunc> coeffs_from_initials(const std::vector<RatFunc>& roots,
                                          const std::vector<RatFunc>& initials) {
  if (roots.size() != initials.size()) {
    throw invariant_error("initial values must match the number of roots");
  }
  const std::size_t d = roots.size();
  if (d == 0) throw invariant_error("empty root list");
  for (const auto& r : roots) {
    if (r.is_zero()) throw invariant_error("roots must be nonzero");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (roots[i] == roots[j]) throw degeneracy_error("repeated root in Vandermonde solve");
    }
  }
  // Gaussian elimination on [V | U] with V[n][i] = roots[i]^n
  std::vector<std::vector<RatFunc>> m(d, std::vector<RatFunc>(d + 1));
  for (std::size_t n = 0; n < d; ++n) {
    for (std::size_t i = 0; i < d; ++i) {
      m[n][i] = roots[i].pow(static_cast<long>(n));
    }
    m[n][d] = initials[n];
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col].is_zero()) ++piv;
    if (piv == d) throw invariant_error("singular Vandermonde system");
    std::swap(m[piv], m[col]);
    RatFunc inv = m[col][col].reciprocal();
    for (std::size_t j = col; j <= d; ++j) m[col][j] = m[col][j] * inv;
    for (std::size_t row = 0; row < d; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      RatFunc factor = m[row][col];
      for (std::size_t j = col; j <= d; ++j) {
        m[row][j] = m[row][j] - factor * m[col][j];
      }
    }
  }
  std::vector<RatFunc> a(d);
  for (std::size_t i = 0; i < d; ++i) a[i] = m[i][d];
  return a;
}

HypothesisReport validate(const SimpleRecurrence& rec) {
  HypothesisReport rep;
  const auto& roots = rec.roots();
  const int d = rec.order();
  for (int i = 0; i < d; ++i) {
    if (roots[static_cast<std::size_t>(i)].is_constant()) {
      rep.roots_nonconstant = false;
      rep.constant_root_witnesses.push_back(i);
    }
    for (int j = i + 1; j < d; ++j) {
      const RatFunc& a = roots[static_cast<std::size_t>(i)];
      const RatFunc& b = roots[static_cast<std::size_t>(j)];
      if (a == b) {
        rep.simple = false;
        rep.simple_witnesses.emplace_back(i, j);
        continue;
      }
      if ((a / b).is_constant()) {
        rep.non_degenerate = false;
        rep.degenerate_witnesses.emplace_back(i, j);
      }
      if (!a.is_constant() && !b.is_constant() && !mult_independent(a, b)) {
        rep.pairwise_mult_independent = false;
        rep.dependent_witnesses.emplace_back(i, j);
      } else if (a.is_constant() || b.is_constant()) {
        // a constant root is multiplicatively dependent with anything
        rep.pairwise_mult_independent = false;
        rep.dependent_witnesses.emplace_back(i, j);
      }
    }
  }
  return rep;
}

std::string HypothesisReport::describe() const {
  if (all_ok()) return "all hypotheses hold";
  std::string out;
  auto add_pairs = [&out](const char* what, const std::vector<std::pair<int, int>>& ps) {
    if (ps.empty()) return;
    out += what;
    for (const auto& [i, j] : ps) {
      out += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    out += "; ";
  };
  add_pairs("repeated roots at", simple_witnesses);
  add_pairs("constant root ratios at", degenerate_witnesses);
  if (!constant_root_witnesses.empty()) {
    out += "constant roots at";
    for (int i : constant_root_witnesses) out += " " + std::to_string(i);
    out += "; ";
  }
  add_pairs("multiplicatively dependent roots at", dependent_witnesses);
  if (out.size() >= 2) out.resize(out.size() - 2);
  return out;
}

}  // namespace funcfield
