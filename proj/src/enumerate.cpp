#include "funcfield/enumerate.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "funcfield/errors.hpp"

namespace funcfield {

std::vector<RatFunc> term_table(const SimpleRecurrence& rec, long N) {
  if (N < 0) return {};
  const int d = rec.order();
  // incremental root powers keep the table O(N) multiplies per root
  std::vector<RatFunc> pows(static_cast<std::size_t>(d), RatFunc(Rat(1)));
  std::vector<RatFunc> table;
  table.reserve(static_cast<std::size_t>(N) + 1);
  for (long n = 0; n <= N; ++n) {
    RatFunc acc;
    for (int i = 0; i < d; ++i) {
      acc = acc + rec.coeffs()[static_cast<std::size_t>(i)] * pows[static_cast<std::size_t>(i)];
    }
    table.push_back(acc);
    if (n < N) {
      for (int i = 0; i < d; ++i) {
        pows[static_cast<std::size_t>(i)] =
            pows[static_cast<std::size_t>(i)] * rec.roots()[static_cast<std::size_t>(i)];
      }
    }
  }
  return table;
}

namespace {

void sunit_rec(const std::vector<RatFunc>& table, const SSet& s, long r,
               long next_max, std::vector<long>& stack, const RatFunc& partial,
               std::vector<std::vector<long>>& out) {
  if (r == 0) {
    if (!partial.is_zero() && is_s_unit(partial, s)) out.push_back(stack);
    return;
  }
  // need r more strictly decreasing indices below next_max+1
  for (long n = next_max; n + 1 >= r; --n) {
    stack.push_back(n);
    sunit_rec(table, s, r - 1, n - 1, stack, partial + table[static_cast<std::size_t>(n)], out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> enumerate_sunit_sums_serial(
    const SimpleRecurrence& rec, long r, const SSet& s, long N) {
  if (r < 1) throw invariant_error("need r >= 1");
  std::vector<std::vector<long>> out;
  if (N < 0 || N + 1 < r) return out;
  std::vector<RatFunc> table = term_table(rec, N);
  std::vector<long> stack;
  sunit_rec(table, s, r, N, stack, RatFunc(), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<long>> enumerate_sunit_sums(
    const SimpleRecurrence& rec, long r, const SSet& s, long N, int jobs) {
  if (jobs <= 1) return enumerate_sunit_sums_serial(rec, r, s, N);
  if (r < 1) throw invariant_error("need r >= 1");
  std::vector<std::vector<long>> out;
  if (N < 0 || N + 1 < r) return out;
  std::vector<RatFunc> table = term_table(rec, N);
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs)
  {
    std::vector<std::vector<long>> local;
#pragma omp for schedule(dynamic)
    for (long n1 = r - 1; n1 <= N; ++n1) {
      std::vector<long> stack{n1};
      sunit_rec(table, s, r - 1, n1 - 1, stack, table[static_cast<std::size_t>(n1)], local);
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
#else
  std::vector<long> stack;
  sunit_rec(table, s, r, N, stack, RatFunc(), out);
#endif
  std::sort(out.begin(), out.end());
  return out;
}

bool violates_c11(const SimpleRecurrence& U, const SimpleRecurrence& V,
                  const SimpleRecurrence& W, long n, long m, long l) {
  for (int i = 0; i < U.order(); ++i) {
    RatFunc un = U.coeffs()[static_cast<std::size_t>(i)] *
                 U.roots()[static_cast<std::size_t>(i)].pow(n);
    for (int j = 0; j < V.order(); ++j) {
      RatFunc vm = V.coeffs()[static_cast<std::size_t>(j)] *
                   V.roots()[static_cast<std::size_t>(j)].pow(m);
      for (int k = 0; k < W.order(); ++k) {
        RatFunc wl = W.coeffs()[static_cast<std::size_t>(k)] *
                     W.roots()[static_cast<std::size_t>(k)].pow(l);
        if ((un + vm + wl).is_zero()) return true;
      }
    }
  }
  return false;
}

std::vector<std::array<long, 3>> enumerate_triple_serial(
    const SimpleRecurrence& U, const SimpleRecurrence& V,
    const SimpleRecurrence& W, long N, bool enforce_c11) {
  std::vector<std::array<long, 3>> out;
  if (N < 0) return out;
  std::vector<RatFunc> ut = term_table(U, N), vt = term_table(V, N), wt = term_table(W, N);
  for (long n = 0; n <= N; ++n) {
    for (long m = 0; m <= N; ++m) {
      RatFunc uv = ut[static_cast<std::size_t>(n)] + vt[static_cast<std::size_t>(m)];
      for (long l = 0; l <= N; ++l) {
        if (!(uv + wt[static_cast<std::size_t>(l)]).is_zero()) continue;
        if (enforce_c11 && violates_c11(U, V, W, n, m, l)) continue;
        out.push_back({n, m, l});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<long, 3>> enumerate_triple(
    const SimpleRecurrence& U, const SimpleRecurrence& V,
    const SimpleRecurrence& W, long N, bool enforce_c11, int jobs) {
  if (jobs <= 1) return enumerate_triple_serial(U, V, W, N, enforce_c11);
  std::vector<std::array<long, 3>> out;
  if (N < 0) return out;
  std::vector<RatFunc> ut = term_table(U, N), vt = term_table(V, N), wt = term_table(W, N);
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs)
  {
    std::vector<std::array<long, 3>> local;
#pragma omp for schedule(dynamic)
    for (long n = 0; n <= N; ++n) {
      for (long m = 0; m <= N; ++m) {
        RatFunc uv = ut[static_cast<std::size_t>(n)] + vt[static_cast<std::size_t>(m)];
        for (long l = 0; l <= N; ++l) {
          if (!(uv + wt[static_cast<std::size_t>(l)]).is_zero()) continue;
          if (enforce_c11 && violates_c11(U, V, W, n, m, l)) continue;
          local.push_back({n, m, l});
        }
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
#else
  return enumerate_triple_serial(U, V, W, N, enforce_c11);
#endif
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// order-insensitive fingerprint of a canonical rational function; equal
// functions always collide, unequal ones almost never do, and buckets are
// compared exactly
std::uint64_t fingerprint(const RatFunc& f) {
  constexpr std::uint64_t kMod = (1ULL << 61) - 1;
  auto poly_fp = [&](const Poly& p, std::uint64_t x0) {
    std::uint64_t acc = 0;
    for (int i = p.degree(); i >= 0; --i) {
      const Rat& c = p.coeff(i);
      std::uint64_t cn = mpz_fdiv_ui(c.get_num_mpz_t(), kMod);
      std::uint64_t cd = mpz_fdiv_ui(c.get_den_mpz_t(), kMod - 2);
      unsigned __int128 t = static_cast<unsigned __int128>(acc) * x0 + cn + (cd << 1);
      acc = static_cast<std::uint64_t>(t % kMod);
    }
    return acc;
  };
  std::uint64_t hn = poly_fp(f.num(), 1315423911ULL);
  std::uint64_t hd = poly_fp(f.den(), 2654435761ULL);
  return hn * 1000003ULL + hd;
}

struct TripleScan {
  const std::vector<RatFunc>* ut;
  const std::vector<RatFunc>* vt;
  const std::vector<RatFunc>* wt;
  const std::unordered_map<std::uint64_t, std::vector<long>>* buckets;
  const std::vector<long>* zero_w;
};

void scan_row(const TripleScan& ts, long n, long N,
              std::vector<std::array<long, 3>>& out) {
  for (long m = 0; m <= N; ++m) {
    RatFunc sum = (*ts.ut)[static_cast<std::size_t>(n)] + (*ts.vt)[static_cast<std::size_t>(m)];
    if (sum.is_zero()) {
      for (long l : *ts.zero_w) out.push_back({n, m, l});
      continue;
    }
    RatFunc target = -sum;
    auto it = ts.buckets->find(fingerprint(target));
    if (it == ts.buckets->end()) continue;
    for (long l : it->second) {
      if ((*ts.wt)[static_cast<std::size_t>(l)] == target) out.push_back({n, m, l});
    }
  }
}

}  // namespace

std::vector<std::array<long, 3>> enumerate_triple_fast(
    const SimpleRecurrence& U, const SimpleRecurrence& V,
    const SimpleRecurrence& W, long N, bool enforce_c11, int jobs) {
  std::vector<std::array<long, 3>> out;
  if (N < 0) return out;
  std::vector<RatFunc> ut = term_table(U, N), vt = term_table(V, N), wt = term_table(W, N);
  std::unordered_map<std::uint64_t, std::vector<long>> buckets;
  std::vector<long> zero_w;
  for (long l = 0; l <= N; ++l) {
    const RatFunc& w = wt[static_cast<std::size_t>(l)];
    if (w.is_zero()) {
      zero_w.push_back(l);
    } else {
      buckets[fingerprint(w)].push_back(l);
    }
  }
  TripleScan ts{&ut, &vt, &wt, &buckets, &zero_w};

  if (jobs <= 1) {
    for (long n = 0; n <= N; ++n) scan_row(ts, n, N, out);
  } else {
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs)
    {
      std::vector<std::array<long, 3>> local;
#pragma omp for schedule(dynamic)
      for (long n = 0; n <= N; ++n) scan_row(ts, n, N, local);
#pragma omp critical
      out.insert(out.end(), local.begin(), local.end());
    }
#else
    for (long n = 0; n <= N; ++n) scan_row(ts, n, N, out);
#endif
  }

  if (enforce_c11) {
    std::vector<std::array<long, 3>> kept;
    for (const auto& t : out) {
      if (!violates_c11(U, V, W, t[0], t[1], t[2])) kept.push_back(t);
    }
    out = std::move(kept);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace funcfield
