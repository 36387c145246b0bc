#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "funcfield/bounds.hpp"
#include "funcfield/enumerate.hpp"

namespace funcfield {

struct SUnitSumProblem {
  SimpleRecurrence rec;
  long r = 1;
  SSet s;
};

struct TripleZeroProblem {
  SimpleRecurrence U, V, W;
};

// Certified arithmetic progression of solutions.  base/steps are over the
// problem's exponent tuple; the certificate lists the pairing bijections,
// exponent relations and root-of-unity witnesses that produce the family.
// Families are always verified exactly at three parameter values before
// being returned.
struct InfiniteFamily {
  enum class Kind { pairing, dependent_ap, lemfuchs_match };
  Kind kind = Kind::pairing;
  std::vector<long> base;
  std::vector<long> steps;
  std::vector<std::pair<std::string, std::string>> certificate;
  bool eq11_ok = true;

  bool contains(const std::vector<long>& tuple) const;
};

const char* kind_name(InfiniteFamily::Kind k);

struct SolutionReport {
  BoundTrace trace;
  std::vector<std::vector<long>> solutions;      // sorted, exact, verified
  std::vector<std::vector<long>> eq11_flagged;   // cross-triple violators
  std::vector<InfiniteFamily> families;
  bool oracle_checked = false;
};

struct SolveOptions {
  Int enumeration_ceiling = Int(1000000);
  long search_box = 64;
  bool enforce_c11 = false;
  bool strict_case4 = false;
  bool oracle_check = false;
  int jobs = 1;
};

// All index subsets whose term sum is exactly zero while no proper nonempty
// subset vanishes; zero terms come back as singletons.
std::vector<std::vector<std::size_t>> min_vanishing_subsums(
    const std::vector<RatFunc>& terms);

// Families built from perfect cross-sequence pairings of the three term
// sets, with exponent relations read off parallel divisor vectors.
std::vector<InfiniteFamily> detect_pairing_families(const TripleZeroProblem& p,
                                                    long search_box = 64);

// Equal-step families from index-aligned term triples whose roots agree up
// to sign, following the lcm construction.  When the alignment precondition
// fails the result is empty and *diagnostic (if given) says why.
std::vector<InfiniteFamily> detect_dependent_ap(const TripleZeroProblem& p,
                                                long search_box = 64,
                                                std::string* diagnostic = nullptr);

// A_n = B_m matching: searches for a bijection of (coefficient, root) pairs
// making A_{n0+ru} = B_{m0+su} hold identically.
std::optional<InfiniteFamily> detect_lemfuchs_match(const SimpleRecurrence& A,
                                                    const SimpleRecurrence& B,
                                                    long search_box = 64);

SolutionReport solve_sunit_sum(const SUnitSumProblem& p, const BoundContext& ctx,
                               const SolveOptions& opts = {});

SolutionReport solve_triple(const TripleZeroProblem& p, const BoundContext& ctx,
                            const SolveOptions& opts = {});

}  // namespace funcfield
