#include <doctest.h>

#include "funcfield/problem.hpp"
#include "funcfield/randomgen.hpp"
#include "funcfield/report.hpp"
#include "funcfield/text.hpp"

using namespace funcfield;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }
RatFunc F(const std::string& s) { return parse_ratfunc(s); }

SimpleRecurrence rec2(const std::string& r1, const std::string& r2,
                      const std::string& c1, const std::string& c2) {
  return SimpleRecurrence({F(r1), F(r2)}, {F(c1), F(c2)});
}

// the Remark 3 instance at t = 1 (with the sign of V's second coefficient
// fixed so the displayed subsums actually vanish)
TripleZeroProblem remark3() {
  return TripleZeroProblem{rec2("x-1", "x-2", "1", "1"), rec2("x-1", "x-2", "1", "-2"),
                           rec2("x-2", "x-1", "1", "-2")};
}

}  // namespace

TEST_CASE("minimal vanishing subsums examples") {
  {
    auto subs = min_vanishing_subsums({F("1"), F("-1"), F("x"), F("-x")});
    REQUIRE(subs.size() == 2);
    CHECK(subs[0] == std::vector<std::size_t>{0, 1});
    CHECK(subs[1] == std::vector<std::size_t>{2, 3});
  }
  {
    auto subs = min_vanishing_subsums({F("x"), F("1-x"), F("-1")});
    REQUIRE(subs.size() == 1);
    CHECK(subs[0] == std::vector<std::size_t>{0, 1, 2});
  }
  CHECK(min_vanishing_subsums({F("1"), F("x")}).empty());
  {
    auto subs = min_vanishing_subsums({F("0"), F("x"), F("-x")});
    REQUIRE(subs.size() == 2);
    CHECK(subs[0] == std::vector<std::size_t>{0});  // zero term as a singleton
    CHECK(subs[1] == std::vector<std::size_t>{1, 2});
  }
}

TEST_CASE("minimal vanishing subsums match exhaustive search") {
  RandomGen gen(123);
  for (int it = 0; it < 60; ++it) {
    int n = static_cast<int>(gen.uniform(2, 7));
    std::vector<RatFunc> terms;
    for (int i = 0; i < n; ++i) {
      long kind = gen.uniform(0, 2);
      if (kind == 0 && !terms.empty()) {
        terms.push_back(-terms[static_cast<std::size_t>(gen.uniform(
            0, static_cast<long>(terms.size()) - 1))]);
      } else {
        terms.push_back(gen.ratfunc(2));
      }
    }
    auto fast = min_vanishing_subsums(terms);
    // blind oracle: all vanishing subsets, then drop those with a vanishing
    // proper nonempty subset
    std::vector<std::vector<std::size_t>> slow;
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      RatFunc sum;
      for (int i = 0; i < n; ++i) {
        if (m & (1u << i)) sum = sum + terms[static_cast<std::size_t>(i)];
      }
      if (!sum.is_zero()) continue;
      bool minimal = true;
      for (std::uint32_t sub = (m - 1) & m; sub; sub = (sub - 1) & m) {
        RatFunc s2;
        for (int i = 0; i < n; ++i) {
          if (sub & (1u << i)) s2 = s2 + terms[static_cast<std::size_t>(i)];
        }
        if (s2.is_zero()) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      std::vector<std::size_t> idx;
      for (int i = 0; i < n; ++i) {
        if (m & (1u << i)) idx.push_back(static_cast<std::size_t>(i));
      }
      slow.push_back(idx);
    }
    std::sort(slow.begin(), slow.end());
    std::sort(fast.begin(), fast.end());
    CHECK(fast == slow);
  }
}

TEST_CASE("s-unit sum enumeration examples") {
  SimpleRecurrence rec = rec2("x", "x+1", "1", "-1");
  SSet s({P("x"), P("x+1")}, true);
  {
    auto sols = enumerate_sunit_sums(rec, 2, s, 6, 1);
    bool found = false;
    for (const auto& t : sols) found = found || (t[0] == 2 && t[1] == 1);
    CHECK(found);  // U_2 + U_1 = -2x - 2 = -2(x+1)
  }
  {
    auto sols = enumerate_sunit_sums(rec, 1, s, 2, 1);
    bool found = false;
    for (const auto& t : sols) found = found || t[0] == 1;
    CHECK(found);
  }
  CHECK(enumerate_sunit_sums(rec, 2, s, 0, 1).empty());
}

TEST_CASE("triple enumeration on the diagonal instance") {
  TripleZeroProblem p = remark3();
  auto sols = enumerate_triple(p.U, p.V, p.W, 10, false, 1);
  REQUIRE(sols.size() == 11);
  for (long n = 0; n <= 10; ++n) {
    CHECK(sols[static_cast<std::size_t>(n)] == std::array<long, 3>{n, n, n});
  }
  // the same-root triples violate the cross-triple condition, so enforcing
  // it filters the diagonal out
  CHECK(enumerate_triple(p.U, p.V, p.W, 10, true, 1).empty());
  CHECK(enumerate_triple(p.U, p.V, p.W, -1, false, 1).empty());
  auto only_origin = enumerate_triple(p.U, p.V, p.W, 0, false, 1);
  REQUIRE(only_origin.size() == 1);
  CHECK(only_origin[0] == std::array<long, 3>{0, 0, 0});
}

TEST_CASE("fast triple enumeration agrees with the plain scan") {
  TripleZeroProblem p{rec2("x", "x+1", "1", "1"), rec2("x^2+2*x+1", "x+2", "-1", "1"),
                      rec2("x^3", "x+2", "-1", "-1")};
  for (bool c11 : {false, true}) {
    CHECK(enumerate_triple(p.U, p.V, p.W, 12, c11, 1) ==
          enumerate_triple_fast(p.U, p.V, p.W, 12, c11, 1));
  }
  TripleZeroProblem r3 = remark3();
  CHECK(enumerate_triple(r3.U, r3.V, r3.W, 9, false, 1) ==
        enumerate_triple_fast(r3.U, r3.V, r3.W, 9, false, 1));
}

TEST_CASE("pairing detector discards inconsistent candidates") {
  // the n=3l / n=2m / m=l relations only meet at the origin, so no family
  TripleZeroProblem p{rec2("x", "x+1", "1", "1"), rec2("x^2+2*x+1", "x+2", "-1", "1"),
                      rec2("x^3", "x+2", "-1", "-1")};
  CHECK(detect_pairing_families(p).empty());
}

TEST_CASE("pairing detector finds a consistent two-term family") {
  // U1 pairs with W1 (n = 3l), U2 with V1 (n = 2m), V2 with W2 (2m = 3l);
  // all three relations hold along (n, m, l) = (6u, 3u, 2u)
  TripleZeroProblem p{rec2("x", "x+1", "1", "1"),
                      rec2("x^2+2*x+1", "x^2+4*x+4", "-1", "1"),
                      rec2("x^3", "x^3+6*x^2+12*x+8", "-1", "-1")};
  auto fams = detect_pairing_families(p);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].kind == InfiniteFamily::Kind::pairing);
  CHECK(fams[0].base == std::vector<long>{0, 0, 0});
  CHECK(fams[0].steps == std::vector<long>{6, 3, 2});
  CHECK(fams[0].eq11_ok);
  // exact check at a sampled parameter
  long u = 4;
  RatFunc sum = term(p.U, 6 * u) + term(p.V, 3 * u) + term(p.W, 2 * u);
  CHECK(sum.is_zero());
}

TEST_CASE("dependent-ap detector on the diagonal instance") {
  TripleZeroProblem p = remark3();
  std::string diag;
  auto fams = detect_dependent_ap(p, 64, &diag);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].kind == InfiniteFamily::Kind::dependent_ap);
  CHECK(fams[0].base == std::vector<long>{0, 0, 0});
  CHECK(fams[0].steps == std::vector<long>{1, 1, 1});
  CHECK_FALSE(fams[0].eq11_ok);
}

TEST_CASE("dependent-ap detector diagnostics") {
  TripleZeroProblem p{rec2("x", "x+1", "1", "1"), rec2("x+2", "x+3", "1", "1"),
                      rec2("x+4", "x+5", "1", "1")};
  std::string diag;
  CHECK(detect_dependent_ap(p, 16, &diag).empty());
  CHECK(!diag.empty());
}

TEST_CASE("sign-matched dependent family uses step 2") {
  // V's first root is -x: the per-index ratio is -1, so the family advances
  // by 2 to keep the signs aligned
  TripleZeroProblem p{rec2("x", "x+1", "1", "1"), rec2("-x", "x+1", "1", "1"),
                      rec2("x", "x+1", "-2", "-2")};
  std::string diag;
  auto fams = detect_dependent_ap(p, 16, &diag);
  REQUIRE(!fams.empty());
  CHECK(fams[0].steps == std::vector<long>{2, 2, 2});
  CHECK(fams[0].base == std::vector<long>{0, 0, 0});
  for (long u : {0L, 1L, 3L}) {
    RatFunc s = term(p.U, 2 * u) + term(p.V, 2 * u) + term(p.W, 2 * u);
    CHECK(s.is_zero());
  }
}

TEST_CASE("lemfuchs matching") {
  SimpleRecurrence A = rec2("x", "x+1", "1", "1");
  {
    auto fam = detect_lemfuchs_match(A, A);
    REQUIRE(fam.has_value());
    CHECK(fam->base == std::vector<long>{0, 0});
    CHECK(fam->steps == std::vector<long>{1, 1});
  }
  {
    SimpleRecurrence B = rec2("x^2", "x^2+2*x+1", "1", "1");
    auto fam = detect_lemfuchs_match(A, B);
    REQUIRE(fam.has_value());
    CHECK(fam->base == std::vector<long>{0, 0});
    CHECK(fam->steps == std::vector<long>{2, 1});  // n = 2m
    for (long u : {0L, 1L, 5L}) {
      CHECK(term(A, 2 * u) == term(B, u));
    }
  }
  {
    SimpleRecurrence B = rec2("x+2", "x+3", "1", "1");
    CHECK_FALSE(detect_lemfuchs_match(A, B).has_value());
  }
}

TEST_CASE("solve_sunit_sum end to end") {
  SUnitSumProblem p{rec2("x", "x+1", "1", "-1"), 2, SSet({P("x"), P("x+1")}, true)};
  SolveOptions opts;
  opts.jobs = 2;
  SolutionReport rep = solve_sunit_sum(p, {0, 1}, opts);
  bool has21 = false;
  for (const auto& t : rep.solutions) has21 = has21 || (t[0] == 2 && t[1] == 1);
  CHECK(has21);
  CHECK(rep.families.empty());

  SUnitSumProblem bad{rec2("x", "x^2", "1", "1"), 1, SSet({P("x")}, true)};
  CHECK_THROWS_AS(solve_sunit_sum(bad, {0, 1}, opts), hypothesis_error);
}

TEST_CASE("solve_triple on the diagonal instance") {
  TripleZeroProblem p = remark3();
  SolveOptions opts;
  opts.jobs = 2;
  SolutionReport rep = solve_triple(p, {0, 1}, opts);
  REQUIRE(rep.families.size() == 1);
  CHECK(rep.families[0].base == std::vector<long>{0, 0, 0});
  CHECK(rep.families[0].steps == std::vector<long>{1, 1, 1});
  CHECK_FALSE(rep.families[0].eq11_ok);
  CHECK(rep.solutions.empty());  // no sporadic solutions beyond the family
  CHECK(rep.eq11_flagged.empty());
}

TEST_CASE("solve_triple cost guard") {
  TripleZeroProblem p = remark3();
  SolveOptions opts;
  opts.enumeration_ceiling = Int(10);
  CHECK_THROWS_AS(solve_triple(p, {0, 1}, opts), cost_limit_error);
}

TEST_CASE("reports are deterministic") {
  ProblemFile pf = parse_problem(
      "[recurrence U]\n"
      "roots = [\"x-1\", \"x-2\"]\n"
      "coeffs = [\"1\", \"1\"]\n"
      "[recurrence V]\n"
      "roots = [\"x-1\", \"x-2\"]\n"
      "coeffs = [\"1\", \"-2\"]\n"
      "[recurrence W]\n"
      "roots = [\"x-2\", \"x-1\"]\n"
      "coeffs = [\"1\", \"-2\"]\n"
      "[problem]\n"
      "kind = triple_zero\n"
      "U = U\nV = V\nW = W\n");
  SolutionReport r1 = solve_triple(pf.triple_problem(), pf.context(), pf.options());
  SolutionReport r2 = solve_triple(pf.triple_problem(), pf.context(), pf.options());
  CHECK(report_to_json(pf, r1) == report_to_json(pf, r2));
  // human and machine renderings list the same solution set
  std::string human = report_to_text(pf, r1);
  for (const auto& t : r1.solutions) {
    std::string needle = "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                         std::to_string(t[2]) + ")";
    CHECK(human.find(needle) != std::string::npos);
  }
}
