#pragma once

#include <string>

#include "funcfield/problem.hpp"
#include "funcfield/solvers.hpp"

namespace funcfield {

// Machine-readable report: a single JSON document with deterministic key
// order and all big integers rendered as decimal strings.  Two runs on the
// same input produce byte-identical output.
std::string report_to_json(const ProblemFile& pf, const SolutionReport& rep);
std::string trace_to_json(const BoundTrace& trace);

// Human-readable rendering of the same content (identical solution sets).
std::string report_to_text(const ProblemFile& pf, const SolutionReport& rep);
std::string trace_to_text(const BoundTrace& trace);

}  // namespace funcfield
