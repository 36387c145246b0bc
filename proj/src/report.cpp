#include "funcfield/report.hpp"

#include <json.hpp>
#include <sstream>

#include "funcfield/text.hpp"

namespace funcfield {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json trace_json(const BoundTrace& trace) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : trace.entries) {
    entries.push_back({{"label", e.label}, {"case", e.case_tag}, {"value", e.value.get_str()}});
  }
  ordered_json j;
  j["entries"] = entries;
  j["final"] = trace.final_bound.get_str();
  j["enlargement"] = trace.enlargement;
  return j;
}

ordered_json family_json(const InfiniteFamily& f) {
  ordered_json j;
  j["kind"] = kind_name(f.kind);
  j["base"] = f.base;
  j["steps"] = f.steps;
  ordered_json cert = ordered_json::array();
  for (const auto& [k, v] : f.certificate) cert.push_back({{"key", k}, {"value", v}});
  j["certificate"] = cert;
  j["eq11"] = f.eq11_ok;
  return j;
}

ordered_json problem_json(const ProblemFile& pf) {
  ordered_json j;
  if (pf.kind == ProblemFile::Kind::sunit_sum) {
    j["kind"] = "sunit_sum";
    j["sequence"] = pf.sequence_name;
    j["r"] = pf.r;
    j["sset"] = pf.sset_name;
  } else {
    j["kind"] = "triple_zero";
    j["U"] = pf.u_name;
    j["V"] = pf.v_name;
    j["W"] = pf.w_name;
    j["enforce_c11"] = pf.enforce_c11;
  }
  ordered_json recs = ordered_json::array();
  for (const auto& r : pf.recurrences) {
    ordered_json rj;
    rj["name"] = r.name;
    ordered_json roots = ordered_json::array(), coeffs = ordered_json::array();
    for (const auto& f : r.rec->roots()) roots.push_back(to_string(f));
    for (const auto& f : r.rec->coeffs()) coeffs.push_back(to_string(f));
    rj["roots"] = roots;
    rj["coeffs"] = coeffs;
    recs.push_back(rj);
  }
  j["recurrences"] = recs;
  ordered_json ss = ordered_json::array();
  for (const auto& s : pf.ssets) {
    ordered_json sj;
    sj["name"] = s.name;
    ordered_json polys = ordered_json::array();
    for (const auto& p : s.sset->finite_polys()) polys.push_back(to_string(p));
    sj["polys"] = polys;
    sj["infinity"] = s.sset->include_infinity();
    ss.push_back(sj);
  }
  j["ssets"] = ss;
  j["genus"] = pf.genus;
  return j;
}

}  // namespace

std::string trace_to_json(const BoundTrace& trace) { return trace_json(trace).dump(2); }

std::string report_to_json(const ProblemFile& pf, const SolutionReport& rep) {
  ordered_json j;
  j["problem"] = problem_json(pf);
  j["trace"] = trace_json(rep.trace);
  j["solutions"] = rep.solutions;
  j["eq11_flagged"] = rep.eq11_flagged;
  ordered_json fams = ordered_json::array();
  for (const auto& f : rep.families) fams.push_back(family_json(f));
  j["families"] = fams;
  j["flags"] = {{"enforce_c11", pf.enforce_c11}, {"oracle_checked", rep.oracle_checked}};
  return j.dump(2);
}

std::string trace_to_text(const BoundTrace& trace) {
  std::ostringstream os;
  for (const auto& e : trace.entries) {
    os << "  " << e.label << " [" << e.case_tag << "] = " << e.value.get_str() << "\n";
  }
  if (!trace.enlargement.empty()) {
    os << "  S enlarged by:";
    for (const auto& s : trace.enlargement) os << " " << s;
    os << "\n";
  }
  os << "  final bound = " << trace.final_bound.get_str() << "\n";
  return os.str();
}

namespace {

std::string tuple_str(const std::vector<long>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  s += ")";
  return s;
}

}  // namespace

std::string report_to_text(const ProblemFile& pf, const SolutionReport& rep) {
  std::ostringstream os;
  os << "problem: "
     << (pf.kind == ProblemFile::Kind::sunit_sum ? "sunit_sum" : "triple_zero") << "\n";
  os << "trace:\n" << trace_to_text(rep.trace);
  os << "solutions (" << rep.solutions.size() << "):";
  for (const auto& t : rep.solutions) os << " " << tuple_str(t);
  os << "\n";
  if (!rep.eq11_flagged.empty()) {
    os << "cross-triple (eq11) violations (" << rep.eq11_flagged.size() << "):";
    for (const auto& t : rep.eq11_flagged) os << " " << tuple_str(t);
    os << "\n";
  }
  os << "families (" << rep.families.size() << "):\n";
  for (const auto& f : rep.families) {
    os << "  kind " << kind_name(f.kind) << ", base " << tuple_str(f.base) << ", steps "
       << tuple_str(f.steps) << (f.eq11_ok ? "" : "  [violates eq11]") << "\n";
    for (const auto& [k, v] : f.certificate) {
      os << "    " << k << ": " << v << "\n";
    }
  }
  if (rep.oracle_checked) os << "oracle check: passed up to twice the bound\n";
  return os.str();
}

}  // namespace funcfield
