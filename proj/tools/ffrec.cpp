// ffrec: heights, valuations, S-units and complete solvers for sums of
// recurrence terms over the rational function field.
//
// Exit codes: 0 success, 1 diagnostics (parse errors, cost guard, bad
// arguments), 2 hypothesis violations.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "funcfield/enumerate.hpp"
#include "funcfield/problem.hpp"
#include "funcfield/report.hpp"
#include "funcfield/selfcheck.hpp"
#include "funcfield/text.hpp"

using namespace funcfield;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ff_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::ordered_json tuples_json(const std::vector<std::vector<long>>& ts) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& t : ts) j.push_back(t);
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"recurrence/S-unit solver over Q(x)"};
  app.require_subcommand(1);
  bool machine = false;
  int jobs = 1;
  app.add_flag("--machine", machine, "machine-readable (JSON) output");
  app.add_option("--jobs", jobs, "worker threads for enumeration")->capture_default_str();

  std::string fn_text, place_text, sset_path, problem_path;
  long oracle_max = 0;
  bool oracle_given_c11 = false, oracle_c11 = false;
  bool oracle_check = false;
  std::uint64_t seed = 20250810;
  int selfcheck_count = 500;

  auto* c_height = app.add_subcommand("height", "projective height of a rational function");
  c_height->add_option("function", fn_text)->required();

  auto* c_val = app.add_subcommand("valuation", "valuation at a place ('inf' or a monic polynomial)");
  c_val->add_option("function", fn_text)->required();
  c_val->add_option("place", place_text)->required();

  auto* c_div = app.add_subcommand("divisor", "zeros and poles with degree weights");
  c_div->add_option("function", fn_text)->required();

  auto* c_sunit = app.add_subcommand("sunit", "S-unit membership test");
  c_sunit->add_option("function", fn_text)->required();
  c_sunit->add_option("--sset", sset_path, "S-set file")->required();

  auto* c_bound = app.add_subcommand("bound", "bound trace for a problem file");
  c_bound->add_option("problem", problem_path)->required();

  auto* c_solve = app.add_subcommand("solve", "full solution report for a problem file");
  c_solve->add_option("problem", problem_path)->required();
  c_solve->add_flag("--oracle-check", oracle_check,
                    "also brute-force up to twice the bound and compare");

  auto* c_oracle = app.add_subcommand("oracle", "brute-force enumeration only");
  c_oracle->add_option("problem", problem_path)->required();
  c_oracle->add_option("--max", oracle_max, "enumerate exponents up to this value")->required();
  auto* c11opt = c_oracle->add_flag("--enforce-c11,!--no-enforce-c11", oracle_c11,
                                    "override the problem file's enforce_c11 flag");

  auto* c_self = app.add_subcommand("selfcheck", "run the seeded property suites");
  c_self->add_option("--seed", seed)->capture_default_str();
  c_self->add_option("--count", selfcheck_count)->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  oracle_given_c11 = c11opt->count() > 0;

  if (c_height->parsed()) {
    long h = height(parse_ratfunc(fn_text));
    if (machine) {
      std::cout << nlohmann::ordered_json{{"height", h}}.dump() << "\n";
    } else {
      std::cout << h << "\n";
    }
    return 0;
  }

  if (c_val->parsed()) {
    RatFunc f = parse_ratfunc(fn_text);
    Place p = (place_text == "inf" || place_text == "infinity")
                  ? Place::infinite()
                  : Place::finite(parse_poly(place_text));
    long v = valuation(f, p);
    if (machine) {
      std::cout << nlohmann::ordered_json{{"valuation", v}}.dump() << "\n";
    } else {
      std::cout << v << "\n";
    }
    return 0;
  }

  if (c_div->parsed()) {
    Divisor d = divisor(parse_ratfunc(fn_text));
    if (machine) {
      nlohmann::ordered_json entries = nlohmann::ordered_json::array();
      for (const auto& e : d.finite) {
        entries.push_back(
            {{"support", to_string(e.support)}, {"valuation", e.val}, {"degree", e.degree}});
      }
      std::cout << nlohmann::ordered_json{{"entries", entries}, {"infinite", d.infinite}}.dump()
                << "\n";
    } else {
      for (const auto& e : d.finite) {
        std::cout << to_string(e.support) << ": " << e.val << " (deg " << e.degree << ")\n";
      }
      std::cout << "inf: " << d.infinite << "\n";
    }
    return 0;
  }

  if (c_sunit->parsed()) {
    RatFunc f = parse_ratfunc(fn_text);
    SSet s = parse_sset_text(read_file(sset_path));
    bool ok = is_s_unit(f, s);
    if (machine) {
      std::cout << nlohmann::ordered_json{{"s_unit", ok}}.dump() << "\n";
    } else {
      std::cout << (ok ? "true" : "false") << "\n";
    }
    return 0;
  }

  if (c_bound->parsed() || c_solve->parsed()) {
    ProblemFile pf = parse_problem(read_file(problem_path));
    BoundContext ctx = pf.context();
    SolveOptions opts = pf.options();
    opts.jobs = jobs;
    opts.oracle_check = oracle_check;
    if (c_bound->parsed()) {
      BoundTrace trace;
      if (pf.kind == ProblemFile::Kind::sunit_sum) {
        SUnitSumProblem p = pf.sunit_problem();
        trace = thm1_bound(p.rec, p.r, p.s, ctx, opts.strict_case4);
      } else {
        TripleZeroProblem p = pf.triple_problem();
        trace = thm2_constants(p.U, p.V, p.W, SSet({}, false), ctx);
      }
      std::cout << (machine ? trace_to_json(trace) : trace_to_text(trace)) << "\n";
      return 0;
    }
    SolutionReport rep;
    if (pf.kind == ProblemFile::Kind::sunit_sum) {
      rep = solve_sunit_sum(pf.sunit_problem(), ctx, opts);
    } else {
      rep = solve_triple(pf.triple_problem(), ctx, opts);
    }
    std::cout << (machine ? report_to_json(pf, rep) : report_to_text(pf, rep)) << "\n";
    return 0;
  }

  if (c_oracle->parsed()) {
    ProblemFile pf = parse_problem(read_file(problem_path));
    bool c11 = oracle_given_c11 ? oracle_c11 : pf.enforce_c11;
    nlohmann::ordered_json out;
    if (pf.kind == ProblemFile::Kind::sunit_sum) {
      SUnitSumProblem p = pf.sunit_problem();
      auto sols = enumerate_sunit_sums(p.rec, p.r, p.s, oracle_max, jobs);
      if (machine) {
        out["solutions"] = tuples_json(sols);
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& t : sols) {
          for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? " " : "") << t[i];
          std::cout << "\n";
        }
      }
    } else {
      TripleZeroProblem p = pf.triple_problem();
      auto sols = enumerate_triple(p.U, p.V, p.W, oracle_max, c11, jobs);
      if (machine) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& t : sols) arr.push_back({t[0], t[1], t[2]});
        out["solutions"] = arr;
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& t : sols) std::cout << t[0] << " " << t[1] << " " << t[2] << "\n";
      }
    }
    return 0;
  }

  if (c_self->parsed()) {
    return run_selfcheck(seed, selfcheck_count, std::cout) ? 0 : 1;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hypothesis_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what();
    if (e.position() > 0) std::cerr << " (at offset " << e.position() << ")";
    std::cerr << "\n";
    return 1;
  } catch (const ff_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
