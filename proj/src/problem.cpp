#include "funcfield/problem.hpp"

#include <cctype>
#include <sstream>

#include "funcfield/text.hpp"

namespace funcfield {

namespace {

[[noreturn]] void diag(int line, int col, const std::string& msg) {
  throw parse_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                        ": " + msg,
                    0);
}

struct Line {
  int number;
  std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::string cur;
  int n = 1;
  for (char c : text) {
    if (c == '\n') {
      out.push_back({n++, cur});
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back({n, cur});
  return out;
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// `["a", "b"]` -> {"a", "b"}
std::vector<std::string> parse_string_list(const Line& ln, const std::string& value) {
  std::vector<std::string> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) { diag(ln.number, static_cast<int>(i) + 1, msg); };
  auto skip = [&] {
    while (i < value.size() && std::isspace(static_cast<unsigned char>(value[i]))) ++i;
  };
  skip();
  if (i >= value.size() || value[i] != '[') fail("expected [");
  ++i;
  skip();
  if (i < value.size() && value[i] == ']') return out;
  for (;;) {
    skip();
    if (i >= value.size() || value[i] != '"') fail("expected opening quote");
    ++i;
    std::string item;
    while (i < value.size() && value[i] != '"') item.push_back(value[i++]);
    if (i >= value.size()) fail("unterminated string");
    ++i;
    out.push_back(item);
    skip();
    if (i < value.size() && value[i] == ',') {
      ++i;
      continue;
    }
    if (i < value.size() && value[i] == ']') {
      ++i;
      break;
    }
    fail("expected , or ]");
  }
  skip();
  if (i != value.size()) fail("unexpected trailing characters");
  return out;
}

bool parse_bool(const Line& ln, const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  diag(ln.number, 1, "expected true or false, got '" + v + "'");
}

long parse_long(const Line& ln, const std::string& v) {
  try {
    std::size_t used = 0;
    long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    diag(ln.number, 1, "expected an integer, got '" + v + "'");
  }
}

}  // namespace

const ProblemFile::NamedRecurrence& ProblemFile::recurrence(const std::string& name) const {
  for (const auto& r : recurrences) {
    if (r.name == name) return r;
  }
  throw invariant_error("unknown recurrence '" + name + "'");
}

const ProblemFile::NamedSSet& ProblemFile::sset(const std::string& name) const {
  for (const auto& s : ssets) {
    if (s.name == name) return s;
  }
  throw invariant_error("unknown S-set '" + name + "'");
}

SUnitSumProblem ProblemFile::sunit_problem() const {
  if (kind != Kind::sunit_sum) throw invariant_error("not a sunit_sum problem");
  return SUnitSumProblem{*recurrence(sequence_name).rec, r, *sset(sset_name).sset};
}

TripleZeroProblem ProblemFile::triple_problem() const {
  if (kind != Kind::triple_zero) throw invariant_error("not a triple_zero problem");
  return TripleZeroProblem{*recurrence(u_name).rec, *recurrence(v_name).rec,
                           *recurrence(w_name).rec};
}

BoundContext ProblemFile::context() const { return BoundContext{genus, 1}; }

SolveOptions ProblemFile::options() const {
  SolveOptions opts;
  opts.enumeration_ceiling = enumeration_ceiling;
  opts.search_box = search_box;
  opts.enforce_c11 = enforce_c11;
  opts.strict_case4 = strict_case4;
  return opts;
}

ProblemFile parse_problem(const std::string& text) {
  ProblemFile pf;
  enum class Sec { none, recurrence, sset, problem, context };
  Sec sec = Sec::none;
  bool saw_problem = false;
  ProblemFile::NamedRecurrence* cur_rec = nullptr;
  ProblemFile::NamedSSet* cur_sset = nullptr;

  auto finish_rec = [&](ProblemFile::NamedRecurrence& r, int line) {
    if (r.root_text.empty()) diag(line, 1, "recurrence '" + r.name + "' has no roots");
    if (r.root_text.size() != r.coeff_text.size()) {
      diag(line, 1, "recurrence '" + r.name + "': roots and coeffs differ in length");
    }
    std::vector<RatFunc> roots, coeffs;
    try {
      for (const auto& s : r.root_text) roots.push_back(parse_ratfunc(s));
      for (const auto& s : r.coeff_text) coeffs.push_back(parse_ratfunc(s));
      r.rec = SimpleRecurrence(std::move(roots), std::move(coeffs));
    } catch (const ff_error& e) {
      diag(line, 1, "recurrence '" + r.name + "': " + e.what());
    }
  };
  auto finish_sset = [&](ProblemFile::NamedSSet& s, int line) {
    try {
      std::vector<Poly> ps;
      for (const auto& t : s.poly_text) ps.push_back(parse_poly(t));
      s.sset = SSet(std::move(ps), s.include_infinity);
    } catch (const ff_error& e) {
      diag(line, 1, "sset '" + s.name + "': " + e.what());
    }
  };

  std::vector<Line> lines = split_lines(text);
  int last_section_line = 1;
  auto close_section = [&](int line) {
    if (cur_rec) finish_rec(*cur_rec, last_section_line);
    if (cur_sset) finish_sset(*cur_sset, last_section_line);
    cur_rec = nullptr;
    cur_sset = nullptr;
    (void)line;
  };

  for (const auto& ln : lines) {
    std::string s = ln.text;
    std::size_t hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = strip(s);
    if (s.empty()) continue;

    if (s.front() == '[') {
      if (s.back() != ']') diag(ln.number, static_cast<int>(s.size()), "expected ]");
      close_section(ln.number);
      last_section_line = ln.number;
      std::string inner = strip(s.substr(1, s.size() - 2));
      std::istringstream iss(inner);
      std::string kindw, name;
      iss >> kindw >> name;
      if (kindw == "recurrence") {
        if (name.empty()) diag(ln.number, 1, "recurrence section needs a name");
        for (const auto& r : pf.recurrences) {
          if (r.name == name) diag(ln.number, 1, "duplicate recurrence '" + name + "'");
        }
        pf.recurrences.push_back({});
        cur_rec = &pf.recurrences.back();
        cur_rec->name = name;
        sec = Sec::recurrence;
      } else if (kindw == "sset") {
        if (name.empty()) diag(ln.number, 1, "sset section needs a name");
        pf.ssets.push_back({});
        cur_sset = &pf.ssets.back();
        cur_sset->name = name;
        sec = Sec::sset;
      } else if (kindw == "problem") {
        saw_problem = true;
        sec = Sec::problem;
      } else if (kindw == "context") {
        sec = Sec::context;
      } else {
        diag(ln.number, 2, "unknown section '" + kindw + "'");
      }
      continue;
    }

    std::size_t eq = s.find('=');
    if (eq == std::string::npos) diag(ln.number, 1, "expected key = value");
    std::string key = strip(s.substr(0, eq));
    std::string value = strip(s.substr(eq + 1));
    if (key.empty()) diag(ln.number, 1, "empty key");

    switch (sec) {
      case Sec::none:
        diag(ln.number, 1, "key outside any section");
      case Sec::recurrence:
        if (key == "roots") {
          cur_rec->root_text = parse_string_list(ln, value);
        } else if (key == "coeffs") {
          cur_rec->coeff_text = parse_string_list(ln, value);
        } else {
          diag(ln.number, 1, "unknown recurrence key '" + key + "'");
        }
        break;
      case Sec::sset:
        if (key == "polys") {
          cur_sset->poly_text = parse_string_list(ln, value);
        } else if (key == "infinity") {
          cur_sset->include_infinity = parse_bool(ln, value);
        } else {
          diag(ln.number, 1, "unknown sset key '" + key + "'");
        }
        break;
      case Sec::problem:
        if (key == "kind") {
          if (value == "sunit_sum") {
            pf.kind = ProblemFile::Kind::sunit_sum;
          } else if (value == "triple_zero") {
            pf.kind = ProblemFile::Kind::triple_zero;
          } else {
            diag(ln.number, 1, "unknown problem kind '" + value + "'");
          }
        } else if (key == "sequence") {
          pf.sequence_name = value;
        } else if (key == "r") {
          pf.r = parse_long(ln, value);
        } else if (key == "sset") {
          pf.sset_name = value;
        } else if (key == "U") {
          pf.u_name = value;
        } else if (key == "V") {
          pf.v_name = value;
        } else if (key == "W") {
          pf.w_name = value;
        } else if (key == "enforce_c11") {
          pf.enforce_c11 = parse_bool(ln, value);
        } else {
          diag(ln.number, 1, "unknown problem key '" + key + "'");
        }
        break;
      case Sec::context:
        if (key == "genus") {
          pf.genus = parse_long(ln, value);
          if (pf.genus < 0) diag(ln.number, 1, "genus must be nonnegative");
        } else if (key == "enumeration_ceiling") {
          try {
            pf.enumeration_ceiling = Int(value);
          } catch (const std::exception&) {
            diag(ln.number, 1, "expected an integer, got '" + value + "'");
          }
        } else if (key == "search_box") {
          pf.search_box = parse_long(ln, value);
        } else if (key == "strict_case4") {
          pf.strict_case4 = parse_bool(ln, value);
        } else {
          diag(ln.number, 1, "unknown context key '" + key + "'");
        }
        break;
    }
  }
  close_section(lines.empty() ? 1 : lines.back().number);

  if (!saw_problem) diag(1, 1, "missing [problem] section");
  auto require_rec = [&](const std::string& name, const char* what) {
    if (name.empty()) diag(1, 1, std::string("problem is missing '") + what + "'");
    for (const auto& r : pf.recurrences) {
      if (r.name == name) return;
    }
    diag(1, 1, "unknown recurrence '" + name + "' referenced by problem");
  };
  if (pf.kind == ProblemFile::Kind::sunit_sum) {
    require_rec(pf.sequence_name, "sequence");
    if (pf.r < 1) diag(1, 1, "r must be at least 1");
    if (pf.sset_name.empty()) diag(1, 1, "problem is missing 'sset'");
    bool found = false;
    for (const auto& s : pf.ssets) found = found || s.name == pf.sset_name;
    if (!found) diag(1, 1, "unknown S-set '" + pf.sset_name + "' referenced by problem");
  } else {
    require_rec(pf.u_name, "U");
    require_rec(pf.v_name, "V");
    require_rec(pf.w_name, "W");
  }
  return pf;
}

namespace {

std::string quote_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + items[i] + "\"";
  }
  out += "]";
  return out;
}

}  // namespace

std::string serialize_problem(const ProblemFile& pf) {
  std::ostringstream os;
  for (const auto& r : pf.recurrences) {
    os << "[recurrence " << r.name << "]\n";
    std::vector<std::string> roots, coeffs;
    for (const auto& f : r.rec->roots()) roots.push_back(to_string(f));
    for (const auto& f : r.rec->coeffs()) coeffs.push_back(to_string(f));
    os << "roots = " << quote_list(roots) << "\n";
    os << "coeffs = " << quote_list(coeffs) << "\n\n";
  }
  for (const auto& s : pf.ssets) {
    os << "[sset " << s.name << "]\n";
    std::vector<std::string> polys;
    for (const auto& p : s.sset->finite_polys()) polys.push_back(to_string(p));
    os << "polys = " << quote_list(polys) << "\n";
    os << "infinity = " << (s.sset->include_infinity() ? "true" : "false") << "\n\n";
  }
  os << "[problem]\n";
  if (pf.kind == ProblemFile::Kind::sunit_sum) {
    os << "kind = sunit_sum\n";
    os << "sequence = " << pf.sequence_name << "\n";
    os << "r = " << pf.r << "\n";
    os << "sset = " << pf.sset_name << "\n";
  } else {
    os << "kind = triple_zero\n";
    os << "U = " << pf.u_name << "\n";
    os << "V = " << pf.v_name << "\n";
    os << "W = " << pf.w_name << "\n";
    os << "enforce_c11 = " << (pf.enforce_c11 ? "true" : "false") << "\n";
  }
  os << "\n[context]\n";
  os << "genus = " << pf.genus << "\n";
  os << "enumeration_ceiling = " << pf.enumeration_ceiling.get_str() << "\n";
  os << "search_box = " << pf.search_box << "\n";
  os << "strict_case4 = " << (pf.strict_case4 ? "true" : "false") << "\n";
  return os.str();
}

SSet parse_sset_text(const std::string& text) {
  std::vector<Poly> polys;
  bool inf = false;
  for (const auto& ln : split_lines(text)) {
    std::string s = ln.text;
    std::size_t hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = strip(s);
    if (s.empty()) continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) diag(ln.number, 1, "expected key = value");
    std::string key = strip(s.substr(0, eq));
    std::string value = strip(s.substr(eq + 1));
    if (key == "polys") {
      for (const auto& t : parse_string_list(ln, value)) polys.push_back(parse_poly(t));
    } else if (key == "infinity") {
      inf = parse_bool(ln, value);
    } else {
      diag(ln.number, 1, "unknown key '" + key + "'");
    }
  }
  return SSet(std::move(polys), inf);
}

}  // namespace funcfield
