#include "funcfield/solvers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "funcfield/errors.hpp"

#include "funcfield/text.hpp"

namespace funcfield {

const char* kind_name(InfiniteFamily::Kind k) {
  switch (k) {
    case InfiniteFamily::Kind::pairing:
      return "pairing";
    case InfiniteFamily::Kind::dependent_ap:
      return "dependent_ap";
    case InfiniteFamily::Kind::lemfuchs_match:
      return "lemfuchs_match";
  }
  return "?";
}

bool InfiniteFamily::contains(const std::vector<long>& tuple) const {
  if (tuple.size() != base.size()) return false;
  long u = -1;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (steps[i] != 0) {
      long diff = tuple[i] - base[i];
      if (diff < 0 || diff % steps[i] != 0) return false;
      u = diff / steps[i];
      break;
    }
  }
  if (u < 0) return tuple == base;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (tuple[i] != base[i] + steps[i] * u) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> min_vanishing_subsums(
    const std::vector<RatFunc>& terms) {
  const std::size_t n = terms.size();
  if (n == 0) throw invariant_error("empty term list");
  if (n > 16) throw invariant_error("too many terms for subset enumeration");
  std::vector<std::uint32_t> masks;
  masks.reserve((1u << n) - 1);
  for (std::uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  std::vector<std::uint32_t> found;
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t m : masks) {
    bool has_smaller = false;
    for (std::uint32_t f : found) {
      if ((m & f) == f && f != m) {
        has_smaller = true;
        break;
      }
    }
    if (has_smaller) continue;
    RatFunc sum;
    for (std::size_t i = 0; i < n; ++i) {
      if (m & (1u << i)) sum = sum + terms[i];
    }
    if (sum.is_zero()) {
      found.push_back(m);
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (m & (1u << i)) idx.push_back(i);
      }
      out.push_back(std::move(idx));
    }
  }
  return out;
}

namespace {

const SimpleRecurrence& seq_of(const TripleZeroProblem& p, int s) {
  return s == 0 ? p.U : (s == 1 ? p.V : p.W);
}

const char* seq_letter(int s) { return s == 0 ? "U" : (s == 1 ? "V" : "W"); }

// Exact test that U_{b0+h0 u} + V_{b1+h1 u} + W_{b2+h2 u} vanishes for every
// u >= 0: group the terms by their step factor root^h and require each
// class sum of coef * root^b to vanish (a Vandermonde argument over the
// distinct step factors makes this necessary and sufficient).
bool family_holds(const TripleZeroProblem& p, const std::vector<long>& base,
                  const std::vector<long>& steps) {
  for (int s = 0; s < 3; ++s) {
    if (base[static_cast<std::size_t>(s)] < 0 || steps[static_cast<std::size_t>(s)] <= 0) {
      return false;
    }
  }
  std::vector<std::pair<RatFunc, RatFunc>> items;
  for (int s = 0; s < 3; ++s) {
    const auto& rec = seq_of(p, s);
    for (int i = 0; i < rec.order(); ++i) {
      const auto& root = rec.roots()[static_cast<std::size_t>(i)];
      items.emplace_back(root.pow(steps[static_cast<std::size_t>(s)]),
                         rec.coeffs()[static_cast<std::size_t>(i)] *
                             root.pow(base[static_cast<std::size_t>(s)]));
    }
  }
  std::vector<bool> used(items.size(), false);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (used[i]) continue;
    RatFunc acc = items[i].second;
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (!used[j] && items[j].first == items[i].first) {
        acc = acc + items[j].second;
        used[j] = true;
      }
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool verify_family_samples(const TripleZeroProblem& p, const InfiniteFamily& fam) {
  for (long u : {0L, 1L, 5L}) {
    RatFunc s = term(p.U, fam.base[0] + fam.steps[0] * u) +
                term(p.V, fam.base[1] + fam.steps[1] * u) +
                term(p.W, fam.base[2] + fam.steps[2] * u);
    if (!s.is_zero()) return false;
  }
  return true;
}

bool family_eq11_ok(const TripleZeroProblem& p, const InfiniteFamily& fam) {
  for (long u : {0L, 1L}) {
    if (violates_c11(p.U, p.V, p.W, fam.base[0] + fam.steps[0] * u,
                     fam.base[1] + fam.steps[1] * u,
                     fam.base[2] + fam.steps[2] * u)) {
      return false;
    }
  }
  return true;
}

struct TermRef {
  int seq;
  int idx;
};

std::string term_name(const TermRef& t) {
  return std::string(seq_letter(t.seq)) + std::to_string(t.idx + 1);
}

// all perfect matchings of the term list with cross-sequence pairs only
void enum_matchings(const std::vector<TermRef>& terms, std::vector<int>& partner,
                    const std::function<void(const std::vector<int>&)>& cb) {
  std::size_t i = 0;
  while (i < partner.size() && partner[i] >= 0) ++i;
  if (i == partner.size()) {
    cb(partner);
    return;
  }
  for (std::size_t j = i + 1; j < partner.size(); ++j) {
    if (partner[j] >= 0 || terms[j].seq == terms[i].seq) continue;
    partner[i] = static_cast<int>(j);
    partner[j] = static_cast<int>(i);
    enum_matchings(terms, partner, cb);
    partner[i] = partner[j] = -1;
  }
}

struct RationalStep {
  std::array<Rat, 3> h;
  std::array<bool, 3> set{};
};

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

std::vector<InfiniteFamily> detect_pairing_families(const TripleZeroProblem& p,
                                                    long search_box) {
  std::vector<InfiniteFamily> out;
  const int d[3] = {p.U.order(), p.V.order(), p.W.order()};
  const int total = d[0] + d[1] + d[2];
  if (total % 2 != 0) return out;  // no perfect pairing; outside Prop shapes

  std::vector<TermRef> terms;
  for (int s = 0; s < 3; ++s) {
    for (int i = 0; i < d[s]; ++i) terms.push_back({s, i});
  }

  // divisor-level exponent relation for every cross-sequence term pair
  std::map<std::pair<int, int>, std::optional<ExponentLine>> lines;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (terms[i].seq == terms[j].seq) continue;
      const auto& A = seq_of(p, terms[i].seq);
      const auto& B = seq_of(p, terms[j].seq);
      lines[{static_cast<int>(i), static_cast<int>(j)}] = pair_exponent_line(
          A.coeffs()[static_cast<std::size_t>(terms[i].idx)],
          A.roots()[static_cast<std::size_t>(terms[i].idx)],
          B.coeffs()[static_cast<std::size_t>(terms[j].idx)],
          B.roots()[static_cast<std::size_t>(terms[j].idx)]);
    }
  }

  std::set<std::pair<std::vector<long>, std::vector<long>>> seen;

  auto try_matching = [&](const std::vector<int>& partner) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < partner.size(); ++i) {
      if (static_cast<int>(i) < partner[i]) pairs.emplace_back(static_cast<int>(i), partner[i]);
    }
    for (const auto& pr : pairs) {
      if (!lines.at(pr).has_value()) return;
    }

    // combine the per-pair step ratios into one positive integer direction
    RationalStep rs;
    rs.h[static_cast<std::size_t>(terms[static_cast<std::size_t>(pairs[0].first)].seq)] = Rat(1);
    rs.set[static_cast<std::size_t>(terms[static_cast<std::size_t>(pairs[0].first)].seq)] = true;
    for (int pass = 0; pass < 3; ++pass) {
      for (const auto& pr : pairs) {
        const ExponentLine& ln = *lines.at(pr);
        int va = terms[static_cast<std::size_t>(pr.first)].seq;
        int vb = terms[static_cast<std::size_t>(pr.second)].seq;
        if (rs.set[static_cast<std::size_t>(va)] && !rs.set[static_cast<std::size_t>(vb)]) {
          rs.h[static_cast<std::size_t>(vb)] =
              rs.h[static_cast<std::size_t>(va)] * Rat(ln.step_f) / Rat(ln.step_e);
          rs.set[static_cast<std::size_t>(vb)] = true;
        } else if (!rs.set[static_cast<std::size_t>(va)] && rs.set[static_cast<std::size_t>(vb)]) {
          rs.h[static_cast<std::size_t>(va)] =
              rs.h[static_cast<std::size_t>(vb)] * Rat(ln.step_e) / Rat(ln.step_f);
          rs.set[static_cast<std::size_t>(va)] = true;
        }
      }
    }
    if (!(rs.set[0] && rs.set[1] && rs.set[2])) return;
    for (const auto& pr : pairs) {
      const ExponentLine& ln = *lines.at(pr);
      int va = terms[static_cast<std::size_t>(pr.first)].seq;
      int vb = terms[static_cast<std::size_t>(pr.second)].seq;
      if (rs.h[static_cast<std::size_t>(va)] * Rat(ln.step_f) !=
          rs.h[static_cast<std::size_t>(vb)] * Rat(ln.step_e)) {
        return;  // inconsistent step ratios
      }
    }
    // scale to integers, then force every per-pair multiplier integral
    Int den_lcm(1);
    for (int v = 0; v < 3; ++v) {
      Int den(rs.h[static_cast<std::size_t>(v)].get_den());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::array<long, 3> H{};
    for (int v = 0; v < 3; ++v) {
      Rat scaled = rs.h[static_cast<std::size_t>(v)] * Rat(den_lcm);
      H[static_cast<std::size_t>(v)] = static_cast<long>(scaled.get_num().get_si());
    }
    long g = std::gcd(std::gcd(H[0], H[1]), H[2]);
    for (auto& x : H) x /= g;
    long mult = 1;
    for (const auto& pr : pairs) {
      const ExponentLine& ln = *lines.at(pr);
      int va = terms[static_cast<std::size_t>(pr.first)].seq;
      long num = H[static_cast<std::size_t>(va)];
      long q = ln.step_e / std::gcd(num, ln.step_e);
      mult = lcm_long(mult, q);
    }
    for (auto& x : H) x *= mult;

    // base candidates: propagate a value of n through the pair relations
    for (long n0 = 0; n0 <= search_box; ++n0) {
      std::array<long, 3> base{-1, -1, -1};
      base[0] = n0;
      bool ok = true;
      for (int pass = 0; pass < 3 && ok; ++pass) {
        for (const auto& pr : pairs) {
          const ExponentLine& ln = *lines.at(pr);
          int va = terms[static_cast<std::size_t>(pr.first)].seq;
          int vb = terms[static_cast<std::size_t>(pr.second)].seq;
          long& ea = base[static_cast<std::size_t>(va)];
          long& eb = base[static_cast<std::size_t>(vb)];
          if (ea >= 0) {
            long diff = ea - ln.base_e;
            if (diff < 0 || diff % ln.step_e != 0) {
              ok = false;
              break;
            }
            long want = ln.base_f + diff / ln.step_e * ln.step_f;
            if (eb < 0) {
              eb = want;
            } else if (eb != want) {
              ok = false;
              break;
            }
          } else if (eb >= 0) {
            long diff = eb - ln.base_f;
            if (diff < 0 || diff % ln.step_f != 0) {
              ok = false;
              break;
            }
            long want = ln.base_e + diff / ln.step_f * ln.step_e;
            ea = want;
          }
        }
      }
      if (!ok || base[1] < 0 || base[2] < 0) continue;
      std::vector<long> bvec(base.begin(), base.end());
      for (int doubling = 1; doubling <= 2; ++doubling) {
        std::vector<long> hvec = {H[0] * doubling, H[1] * doubling, H[2] * doubling};
        if (!family_holds(p, bvec, hvec)) continue;
        // keep only the first base of each progression
        std::vector<long> prev = {bvec[0] - hvec[0], bvec[1] - hvec[1], bvec[2] - hvec[2]};
        if (prev[0] >= 0 && prev[1] >= 0 && prev[2] >= 0 && family_holds(p, prev, hvec)) break;
        if (seen.count({bvec, hvec})) break;

        InfiniteFamily fam;
        fam.kind = InfiniteFamily::Kind::pairing;
        fam.base = bvec;
        fam.steps = hvec;
        std::string pairing_str;
        int splits[3] = {0, 0, 0};  // U-V, U-W, V-W pair counts
        for (const auto& pr : pairs) {
          const TermRef& ta = terms[static_cast<std::size_t>(pr.first)];
          const TermRef& tb = terms[static_cast<std::size_t>(pr.second)];
          if (!pairing_str.empty()) pairing_str += ",";
          pairing_str += term_name(ta) + "-" + term_name(tb);
          int kindix = (ta.seq == 0 && tb.seq == 1)   ? 0
                       : (ta.seq == 0 && tb.seq == 2) ? 1
                                                      : 2;
          ++splits[kindix];
          const ExponentLine& ln = *lines.at(pr);
          const auto& A = seq_of(p, ta.seq);
          const auto& B = seq_of(p, tb.seq);
          RatFunc ratio = A.roots()[static_cast<std::size_t>(ta.idx)].pow(
                              hvec[static_cast<std::size_t>(ta.seq)]) /
                          B.roots()[static_cast<std::size_t>(tb.idx)].pow(
                              hvec[static_cast<std::size_t>(tb.seq)]);
          std::string wit = ratio.is_constant() ? to_string(ratio.constant_value()) : "nonconstant";
          fam.certificate.emplace_back(
              "relation " + term_name(ta) + "-" + term_name(tb),
              std::to_string(ln.step_f) + "*" + std::string(1, "nml"[ta.seq]) + " - " +
                  std::to_string(ln.step_e) + "*" + std::string(1, "nml"[tb.seq]) + " = " +
                  std::to_string(ln.step_f * ln.base_e - ln.step_e * ln.base_f) +
                  "; witness " + wit);
        }
        fam.certificate.emplace_back("pairing", pairing_str);
        fam.certificate.emplace_back("splits", "t_UV=" + std::to_string(splits[0]) +
                                                   ",t_UW=" + std::to_string(splits[1]) +
                                                   ",t_VW=" + std::to_string(splits[2]));
        std::sort(fam.certificate.begin(), fam.certificate.end());
        fam.eq11_ok = family_eq11_ok(p, fam);
        if (!verify_family_samples(p, fam)) break;  // discard unverifiable candidate
        seen.insert({bvec, hvec});
        out.push_back(std::move(fam));
        break;
      }
    }
  };

  std::vector<int> partner(terms.size(), -1);
  enum_matchings(terms, partner, try_matching);

  std::sort(out.begin(), out.end(), [](const InfiniteFamily& a, const InfiniteFamily& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.steps < b.steps;
  });
  return out;
}

namespace {

// perfect matchings between U-indices and another sequence's indices where
// the roots agree up to sign
void enum_alignments(const std::vector<std::vector<int>>& cand, std::size_t i,
                     std::vector<int>& pick, std::vector<bool>& used,
                     const std::function<void(const std::vector<int>&)>& cb) {
  if (i == cand.size()) {
    cb(pick);
    return;
  }
  for (int j : cand[i]) {
    if (used[static_cast<std::size_t>(j)]) continue;
    used[static_cast<std::size_t>(j)] = true;
    pick[i] = j;
    enum_alignments(cand, i + 1, pick, used, cb);
    used[static_cast<std::size_t>(j)] = false;
  }
}

}  // namespace

std::vector<InfiniteFamily> detect_dependent_ap(const TripleZeroProblem& p,
                                                long search_box,
                                                std::string* diagnostic) {
  std::vector<InfiniteFamily> out;
  auto note = [&](const std::string& msg) {
    if (diagnostic) *diagnostic = msg;
  };
  const int d = p.U.order();
  if (p.V.order() != d || p.W.order() != d) {
    note("orders differ; the per-index construction needs d1 = d2 = d3");
    return out;
  }

  // sign-matched candidates per U-index
  std::vector<std::vector<int>> candV(static_cast<std::size_t>(d)),
      candW(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const auto& alpha = p.U.roots()[static_cast<std::size_t>(i)];
    for (int j = 0; j < d; ++j) {
      const auto& beta = p.V.roots()[static_cast<std::size_t>(j)];
      if (beta == alpha || beta == -alpha) candV[static_cast<std::size_t>(i)].push_back(j);
      const auto& gamma = p.W.roots()[static_cast<std::size_t>(j)];
      if (gamma == alpha || gamma == -alpha) candW[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  for (int i = 0; i < d; ++i) {
    if (candV[static_cast<std::size_t>(i)].empty() || candW[static_cast<std::size_t>(i)].empty()) {
      note("per-index roots are not pairwise dependent up to sign; no equal-step family");
      return out;
    }
  }

  std::set<std::vector<long>> seen16;
  std::vector<int> sigma(static_cast<std::size_t>(d)), tau(static_cast<std::size_t>(d));
  std::vector<bool> usedV(static_cast<std::size_t>(d), false),
      usedW(static_cast<std::size_t>(d), false);

  auto with_tau = [&](const std::vector<int>& sg, const std::vector<int>& tu) {
    // dependence exponents per index: ratio +1 gives (1,1), ratio -1 gives (2,2)
    std::vector<int> rV(static_cast<std::size_t>(d)), rW(static_cast<std::size_t>(d));
    long h = 1;
    for (int i = 0; i < d; ++i) {
      const auto& alpha = p.U.roots()[static_cast<std::size_t>(i)];
      rV[static_cast<std::size_t>(i)] =
          (p.V.roots()[static_cast<std::size_t>(sg[static_cast<std::size_t>(i)])] == alpha) ? 1 : 2;
      rW[static_cast<std::size_t>(i)] =
          (p.W.roots()[static_cast<std::size_t>(tu[static_cast<std::size_t>(i)])] == alpha) ? 1 : 2;
      h = lcm_long(h, lcm_long(rV[static_cast<std::size_t>(i)], rW[static_cast<std::size_t>(i)]));
    }

    for (long n0 = 0; n0 <= search_box; ++n0) {
      for (long m0 = 0; m0 <= search_box; ++m0) {
        // index 0 pins l0 through the height of the residual
        const auto& a0 = p.U.coeffs()[0];
        const auto& al0 = p.U.roots()[0];
        const auto& b0 = p.V.coeffs()[static_cast<std::size_t>(sg[0])];
        const auto& be0 = p.V.roots()[static_cast<std::size_t>(sg[0])];
        const auto& c0 = p.W.coeffs()[static_cast<std::size_t>(tu[0])];
        const auto& ga0 = p.W.roots()[static_cast<std::size_t>(tu[0])];
        RatFunc R = -(a0 * al0.pow(n0) + b0 * be0.pow(m0));
        if (R.is_zero()) continue;
        long hr = height(R / c0);
        long hg = height(ga0);
        if (hg <= 0 || hr % hg != 0) continue;
        long l0 = hr / hg;
        if (l0 > search_box) continue;
        if (!((c0 * ga0.pow(l0)) == R)) continue;
        bool all_ok = true;
        for (int i = 1; i < d && all_ok; ++i) {
          RatFunc s = p.U.coeffs()[static_cast<std::size_t>(i)] *
                          p.U.roots()[static_cast<std::size_t>(i)].pow(n0) +
                      p.V.coeffs()[static_cast<std::size_t>(sg[static_cast<std::size_t>(i)])] *
                          p.V.roots()[static_cast<std::size_t>(sg[static_cast<std::size_t>(i)])].pow(m0) +
                      p.W.coeffs()[static_cast<std::size_t>(tu[static_cast<std::size_t>(i)])] *
                          p.W.roots()[static_cast<std::size_t>(tu[static_cast<std::size_t>(i)])].pow(l0);
          if (!s.is_zero()) all_ok = false;
        }
        if (!all_ok) continue;
        std::vector<long> bvec = {n0, m0, l0};
        std::vector<long> hvec = {h, h, h};
        if (!family_holds(p, bvec, hvec)) continue;
        std::vector<long> prev = {n0 - h, m0 - h, l0 - h};
        if (prev[0] >= 0 && prev[1] >= 0 && prev[2] >= 0 && family_holds(p, prev, hvec)) continue;
        std::vector<long> key = bvec;
        key.push_back(h);
        if (seen16.count(key)) continue;
        seen16.insert(key);

        InfiniteFamily fam;
        fam.kind = InfiniteFamily::Kind::dependent_ap;
        fam.base = bvec;
        fam.steps = hvec;
        std::string sig, tas, rss, hs;
        for (int i = 0; i < d; ++i) {
          if (i) {
            sig += ",";
            tas += ",";
            rss += ",";
            hs += ",";
          }
          sig += std::to_string(sg[static_cast<std::size_t>(i)] + 1);
          tas += std::to_string(tu[static_cast<std::size_t>(i)] + 1);
          rss += "(" + std::to_string(rV[static_cast<std::size_t>(i)]) + "," +
                 std::to_string(rV[static_cast<std::size_t>(i)]) + "," +
                 std::to_string(rW[static_cast<std::size_t>(i)]) + "," +
                 std::to_string(rW[static_cast<std::size_t>(i)]) + ")";
          hs += std::to_string(lcm_long(rV[static_cast<std::size_t>(i)],
                                        rW[static_cast<std::size_t>(i)]));
        }
        fam.certificate.emplace_back("alignment V", sig);
        fam.certificate.emplace_back("alignment W", tas);
        fam.certificate.emplace_back("exponents (r,s,t,k)", rss);
        fam.certificate.emplace_back("h_i", hs);
        fam.certificate.emplace_back("h", std::to_string(h));
        fam.eq11_ok = family_eq11_ok(p, fam);
        if (!verify_family_samples(p, fam)) continue;
        out.push_back(std::move(fam));
      }
    }
  };

  auto with_sigma = [&](const std::vector<int>& sg) {
    std::vector<int> pickW(static_cast<std::size_t>(d));
    enum_alignments(candW, 0, pickW, usedW,
                    [&](const std::vector<int>& tu) { with_tau(sg, tu); });
  };
  std::vector<int> pickV(static_cast<std::size_t>(d));
  enum_alignments(candV, 0, pickV, usedV, with_sigma);

  if (out.empty() && diagnostic && diagnostic->empty()) {
    note("no base solution of the per-index equations inside the search box");
  }
  std::sort(out.begin(), out.end(), [](const InfiniteFamily& a, const InfiniteFamily& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.steps < b.steps;
  });
  return out;
}

std::optional<InfiniteFamily> detect_lemfuchs_match(const SimpleRecurrence& A,
                                                    const SimpleRecurrence& B,
                                                    long search_box) {
  for (const auto* rec : {&A, &B}) {
    HypothesisReport rep = validate(*rec);
    if (!rep.all_ok()) throw hypothesis_error(rep);
  }
  if (A.order() != B.order()) return std::nullopt;
  const int d = A.order();

  // minimal (r, s) with alphaA^r == alphaB^s, if any
  struct PairPower {
    bool ok = false;
    long r = 0, s = 0;
  };
  std::vector<std::vector<PairPower>> pairs(static_cast<std::size_t>(d),
                                            std::vector<PairPower>(static_cast<std::size_t>(d)));
  std::vector<std::vector<int>> cand(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const auto& ra = A.roots()[static_cast<std::size_t>(i)];
      const auto& rb = B.roots()[static_cast<std::size_t>(j)];
      auto line = pair_exponent_line(RatFunc(Rat(1)), ra, RatFunc(Rat(-1)), rb);
      // kappa = 1 here, so the line solves e*v(ra) = f*v(rb): step is minimal
      if (!line) continue;
      long r = line->step_e, s = line->step_f;
      RatFunc ratio = ra.pow(r) / rb.pow(s);
      if (!ratio.is_constant()) continue;
      Rat w = ratio.constant_value();
      if (w == -1) {
        r *= 2;
        s *= 2;
      } else if (w != 1) {
        continue;
      }
      pairs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {true, r, s};
      cand[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  for (int i = 0; i < d; ++i) {
    if (cand[static_cast<std::size_t>(i)].empty()) return std::nullopt;
  }

  std::optional<InfiniteFamily> best;
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  std::vector<int> pick(static_cast<std::size_t>(d));

  auto with_pi = [&](const std::vector<int>& pi) {
    if (best) return;
    // consistent global (R, S): all (r_i, s_i) proportional
    long rn = pairs[0][static_cast<std::size_t>(pi[0])].r;
    long sn = pairs[0][static_cast<std::size_t>(pi[0])].s;
    long g0 = std::gcd(rn, sn);
    long pn = rn / g0, pd = sn / g0;
    long L = 1;
    for (int i = 0; i < d; ++i) {
      const PairPower& pp = pairs[static_cast<std::size_t>(i)][static_cast<std::size_t>(pi[i])];
      if (pp.r * pd != pp.s * pn) return;  // inconsistent ratios
      if (pp.r % pn != 0) return;
      L = lcm_long(L, pp.r / pn);
    }
    long R = pn * L, S = pd * L;
    // make sure every pair identity holds at the global step
    for (int i = 0; i < d; ++i) {
      const auto& ra = A.roots()[static_cast<std::size_t>(i)];
      const auto& rb = B.roots()[static_cast<std::size_t>(pi[i])];
      if (!(ra.pow(R) == rb.pow(S))) return;
    }
    for (long n0 = 0; n0 <= search_box && !best; ++n0) {
      // pair 0 pins m0 by height, then every pair is checked exactly
      const auto& a0 = A.coeffs()[0];
      const auto& ra0 = A.roots()[0];
      const auto& b0 = B.coeffs()[static_cast<std::size_t>(pi[0])];
      const auto& rb0 = B.roots()[static_cast<std::size_t>(pi[0])];
      RatFunc target = a0 * ra0.pow(n0) / b0;
      if (target.is_zero()) continue;
      long hb = height(rb0);
      long ht = height(target);
      if (hb <= 0 || ht % hb != 0) continue;
      long m0 = ht / hb;
      if (m0 > search_box) continue;
      bool ok = true;
      for (int i = 0; i < d && ok; ++i) {
        RatFunc lhs = A.coeffs()[static_cast<std::size_t>(i)] *
                      A.roots()[static_cast<std::size_t>(i)].pow(n0);
        RatFunc rhs = B.coeffs()[static_cast<std::size_t>(pi[i])] *
                      B.roots()[static_cast<std::size_t>(pi[i])].pow(m0);
        if (!(lhs == rhs)) ok = false;
      }
      if (!ok) continue;
      InfiniteFamily fam;
      fam.kind = InfiniteFamily::Kind::lemfuchs_match;
      fam.base = {n0, m0};
      fam.steps = {R, S};
      std::string bij;
      for (int i = 0; i < d; ++i) {
        if (i) bij += ",";
        bij += std::to_string(pi[i] + 1);
      }
      fam.certificate.emplace_back("bijection", bij);
      fam.certificate.emplace_back("n0,m0,r,s", std::to_string(n0) + "," + std::to_string(m0) +
                                                    "," + std::to_string(R) + "," +
                                                    std::to_string(S));
      // exact identity at three samples
      bool verified = true;
      for (long u : {0L, 1L, 5L}) {
        if (!(term(A, n0 + R * u) == term(B, m0 + S * u))) verified = false;
      }
      if (verified) best = fam;
    }
  };
  enum_alignments(cand, 0, pick, used, with_pi);
  return best;
}

namespace {

Int binom_int(const Int& n, long k) {
  if (n < k) return Int(0);
  if (!n.fits_ulong_p()) throw cost_limit_error("bound too large to enumerate");
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n.get_ui(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

SolutionReport solve_sunit_sum(const SUnitSumProblem& p, const BoundContext& ctx,
                               const SolveOptions& opts) {
  HypothesisReport rep = validate(p.rec);
  if (!rep.all_ok()) throw hypothesis_error(rep);
  if (p.r < 1) throw invariant_error("need r >= 1");

  SolutionReport out;
  out.trace = thm1_bound(p.rec, p.r, p.s, ctx, opts.strict_case4);
  const Int& N = out.trace.final_bound;
  Int tuples = binom_int(N + 1, p.r);
  if (tuples > opts.enumeration_ceiling) {
    throw cost_limit_error("enumeration of " + tuples.get_str() +
                           " tuples exceeds the ceiling " +
                           opts.enumeration_ceiling.get_str());
  }
  out.solutions = enumerate_sunit_sums(p.rec, p.r, p.s, N.get_si(), opts.jobs);

  if (opts.oracle_check) {
    Int N2 = N * 2;
    if (binom_int(N2 + 1, p.r) <= opts.enumeration_ceiling) {
      auto wide = enumerate_sunit_sums(p.rec, p.r, p.s, N2.get_si(), opts.jobs);
      for (const auto& t : wide) {
        if (Int(t[0]) > N) {
          throw invariant_error("brute force found a solution above the bound");
        }
      }
      out.oracle_checked = true;
    }
  }
  return out;
}

SolutionReport solve_triple(const TripleZeroProblem& p, const BoundContext& ctx,
                            const SolveOptions& opts) {
  for (const auto* rec : {&p.U, &p.V, &p.W}) {
    HypothesisReport rep = validate(*rec);
    if (!rep.all_ok()) throw hypothesis_error(rep);
  }

  SolutionReport out;
  SSet empty({}, false);
  out.trace = thm2_constants(p.U, p.V, p.W, empty, ctx);

  out.families = detect_pairing_families(p, opts.search_box);
  std::string diag;
  auto ap = detect_dependent_ap(p, opts.search_box, &diag);
  for (auto& f : ap) out.families.push_back(std::move(f));
  // drop duplicates found by both detectors
  {
    std::set<std::pair<std::vector<long>, std::vector<long>>> seen;
    std::vector<InfiniteFamily> uniq;
    for (auto& f : out.families) {
      if (seen.insert({f.base, f.steps}).second) uniq.push_back(std::move(f));
    }
    out.families = std::move(uniq);
    std::sort(out.families.begin(), out.families.end(),
              [](const InfiniteFamily& a, const InfiniteFamily& b) {
                if (a.kind != b.kind) return a.kind < b.kind;
                if (a.base != b.base) return a.base < b.base;
                return a.steps < b.steps;
              });
  }

  const Int& N = out.trace.final_bound;
  if (!N.fits_slong_p() || (N + 1) * (N + 1) > opts.enumeration_ceiling) {
    throw cost_limit_error("triple enumeration up to " + N.get_str() +
                           " exceeds the ceiling " + opts.enumeration_ceiling.get_str());
  }
  auto all = enumerate_triple_fast(p.U, p.V, p.W, N.get_si(), false, opts.jobs);
  for (const auto& t : all) {
    std::vector<long> tv(t.begin(), t.end());
    bool in_family = false;
    for (const auto& f : out.families) {
      if (f.contains(tv)) {
        in_family = true;
        break;
      }
    }
    if (in_family) continue;
    if (violates_c11(p.U, p.V, p.W, t[0], t[1], t[2])) {
      out.eq11_flagged.push_back(tv);
      if (!opts.enforce_c11) out.solutions.push_back(tv);
    } else {
      out.solutions.push_back(tv);
    }
  }

  if (opts.oracle_check) {
    Int N2 = N * 2;
    if (N2.fits_slong_p() && (N2 + 1) * (N2 + 1) <= opts.enumeration_ceiling) {
      auto wide = enumerate_triple_fast(p.U, p.V, p.W, N2.get_si(), false, opts.jobs);
      for (const auto& t : wide) {
        if (Int(std::max({t[0], t[1], t[2]})) <= N) continue;
        std::vector<long> tv(t.begin(), t.end());
        bool in_family = false;
        for (const auto& f : out.families) {
          if (f.contains(tv)) {
            in_family = true;
            break;
          }
        }
        if (!in_family) {
          throw invariant_error("brute force found a non-family solution above the bound");
        }
      }
      out.oracle_checked = true;
    }
  }
  return out;
}

}  // namespace funcfield
