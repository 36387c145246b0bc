#pragma once

#include <optional>
#include <string>
#include <vector>

#include "funcfield/solvers.hpp"

namespace funcfield {

// Parsed form of a problem file.  The text format is sectioned key-value:
//
//   [recurrence U]
//   roots = ["x", "x+1"]
//   coeffs = ["1", "-1"]
//
//   [sset S]
//   polys = ["x", "x+1"]
//   infinity = true
//
//   [problem]
//   kind = sunit_sum          # or triple_zero
//   sequence = U              # sunit_sum
//   r = 2                     # sunit_sum
//   sset = S                  # sunit_sum
//   U = U                     # triple_zero: the three sequence names
//   V = V
//   W = W
//   enforce_c11 = false       # triple_zero
//
//   [context]                 # optional
//   genus = 0
//   enumeration_ceiling = 1000000
//   search_box = 64
//   strict_case4 = false
//
// '#' starts a comment; all referenced names must resolve; every polynomial
// string follows the expression grammar.  Diagnostics carry line and column.
struct ProblemFile {
  enum class Kind { sunit_sum, triple_zero };

  struct NamedRecurrence {
    std::string name;
    std::vector<std::string> root_text;
    std::vector<std::string> coeff_text;
    std::optional<SimpleRecurrence> rec;  // always set after parsing
  };
  struct NamedSSet {
    std::string name;
    std::vector<std::string> poly_text;
    bool include_infinity = false;
    std::optional<SSet> sset;
  };

  std::vector<NamedRecurrence> recurrences;
  std::vector<NamedSSet> ssets;
  Kind kind = Kind::sunit_sum;
  std::string sequence_name;          // sunit_sum
  long r = 1;                         // sunit_sum
  std::string sset_name;              // sunit_sum
  std::string u_name, v_name, w_name; // triple_zero
  bool enforce_c11 = false;
  long genus = 0;
  Int enumeration_ceiling = Int(1000000);
  long search_box = 64;
  bool strict_case4 = false;

  const NamedRecurrence& recurrence(const std::string& name) const;
  const NamedSSet& sset(const std::string& name) const;

  SUnitSumProblem sunit_problem() const;     // pre: kind == sunit_sum
  TripleZeroProblem triple_problem() const;  // pre: kind == triple_zero
  BoundContext context() const;
  SolveOptions options() const;
};

ProblemFile parse_problem(const std::string& text);
std::string serialize_problem(const ProblemFile& pf);

// Bare S-set file: the two keys without a section header.
SSet parse_sset_text(const std::string& text);

}  // namespace funcfield
