#include <doctest.h>

#include "funcfield/errors.hpp"
#include "funcfield/randomgen.hpp"
#include "funcfield/recurrence.hpp"
#include "funcfield/text.hpp"

using namespace funcfield;

namespace {

RatFunc F(const std::string& s) { return parse_ratfunc(s); }

SimpleRecurrence rec2(const std::string& r1, const std::string& r2,
                      const std::string& c1, const std::string& c2) {
  return SimpleRecurrence({F(r1), F(r2)}, {F(c1), F(c2)});
}

}  // namespace

TEST_CASE("construction invariants") {
  CHECK_THROWS_AS(SimpleRecurrence({F("x")}, {F("1")}), invariant_error);
  CHECK_THROWS_AS(rec2("x", "x", "1", "1"), invariant_error);  // repeated root
  CHECK_THROWS_AS(rec2("x", "0", "1", "1"), invariant_error);  // zero root
  CHECK_THROWS_AS(rec2("x", "x+1", "1", "0"), invariant_error);
  CHECK_THROWS_AS(SimpleRecurrence({F("x"), F("x+1")}, {F("1")}), invariant_error);
}

TEST_CASE("term examples") {
  CHECK(term(rec2("x-1", "x-2", "1", "1"), 2) == F("2*x^2-6*x+5"));
  CHECK(term(rec2("x", "x+1", "1", "-1"), 0) == RatFunc());
  CHECK(term(rec2("x-1", "x-2", "1", "1"), 0) == F("2"));
  CHECK(term(rec2("x", "x+1", "1", "-1"), 1) == F("-1"));
}

TEST_CASE("characteristic polynomial coefficients") {
  {
    auto w = char_poly_coeffs(rec2("x", "x+1", "1", "1"));
    REQUIRE(w.size() == 2);
    CHECK(w[0] == F("2*x+1"));
    CHECK(w[1] == F("-x^2-x"));
  }
  {
    auto w = char_poly_coeffs(rec2("x", "-x", "1", "1"));
    REQUIRE(w.size() == 2);
    CHECK(w[0] == RatFunc());
    CHECK(w[1] == F("x^2"));
  }
}

TEST_CASE("roots are zeros of the characteristic polynomial") {
  RandomGen gen(5);
  for (int it = 0; it < 30; ++it) {
    RatFunc a = gen.ratfunc(3), b = gen.ratfunc(3);
    if (a.is_zero() || b.is_zero() || a == b) continue;
    SimpleRecurrence rec({a, b}, {F("1"), F("2")});
    auto w = char_poly_coeffs(rec);
    for (const auto& root : rec.roots()) {
      RatFunc value = root.pow(2) - w[0] * root - w[1];
      CHECK(value.is_zero());
    }
  }
}

TEST_CASE("recurrence identity from the characteristic coefficients") {
  RandomGen gen(17);
  for (int it = 0; it < 6; ++it) {
    RatFunc a = gen.ratfunc(1), b = gen.ratfunc(1), c = gen.ratfunc(1);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    if (a == b || a == c || b == c) continue;
    SimpleRecurrence rec({a, b, c}, {F("1"), F("-1"), F("1/2")});
    auto w = char_poly_coeffs(rec);
    const int d = rec.order();
    for (long n = d; n <= d + 5; ++n) {
      RatFunc rhs;
      for (int i = 1; i <= d; ++i) {
        rhs = rhs + w[static_cast<std::size_t>(i - 1)] * term(rec, n - i);
      }
      CHECK(term(rec, n) == rhs);
    }
  }
}

TEST_CASE("coefficients from initial values") {
  {
    auto a = coeffs_from_initials({F("x"), F("x+1")}, {F("2"), F("2*x+1")});
    REQUIRE(a.size() == 2);
    CHECK(a[0] == F("1"));
    CHECK(a[1] == F("1"));
  }
  {
    auto a = coeffs_from_initials({F("x"), F("2*x")}, {F("0"), F("-x")});
    CHECK(a[0] == F("1"));
    CHECK(a[1] == F("-1"));
  }
  CHECK_THROWS_AS(coeffs_from_initials({F("x"), F("x")}, {F("1"), F("2")}),
                  degeneracy_error);
  CHECK_THROWS_AS(coeffs_from_initials({F("x")}, {F("1"), F("2")}), invariant_error);
}

TEST_CASE("initials round trip") {
  RandomGen gen(23);
  for (int it = 0; it < 25; ++it) {
    RatFunc r1 = gen.ratfunc(2), r2 = gen.ratfunc(2);
    RatFunc c1 = gen.ratfunc(2), c2 = gen.ratfunc(2);
    if (r1.is_zero() || r2.is_zero() || c1.is_zero() || c2.is_zero() || r1 == r2) continue;
    SimpleRecurrence rec({r1, r2}, {c1, c2});
    std::vector<RatFunc> initials = {term(rec, 0), term(rec, 1)};
    auto back = coeffs_from_initials(rec.roots(), initials);
    CHECK(back[0] == c1);
    CHECK(back[1] == c2);
  }
}

TEST_CASE("hypothesis validation") {
  {
    HypothesisReport rep = validate(rec2("x", "x+1", "1", "1"));
    CHECK(rep.all_ok());
    CHECK(rep.describe() == "all hypotheses hold");
  }
  {
    HypothesisReport rep = validate(rec2("x", "2*x", "1", "1"));
    CHECK_FALSE(rep.non_degenerate);
    REQUIRE(rep.degenerate_witnesses.size() == 1);
    CHECK(rep.degenerate_witnesses[0] == std::pair<int, int>{0, 1});
    CHECK_FALSE(rep.pairwise_mult_independent);  // constant ratio is also dependent
  }
  {
    HypothesisReport rep = validate(rec2("x", "x^2", "1", "1"));
    CHECK(rep.non_degenerate);
    CHECK_FALSE(rep.pairwise_mult_independent);
    REQUIRE(rep.dependent_witnesses.size() == 1);
  }
  {
    HypothesisReport rep = validate(rec2("3", "x", "1", "1"));
    CHECK_FALSE(rep.roots_nonconstant);
    CHECK(rep.constant_root_witnesses == std::vector<int>{0});
    CHECK_FALSE(rep.all_ok());
  }
}
