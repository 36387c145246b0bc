#include "funcfield/text.hpp"

#include <cctype>

#include "funcfield/errors.hpp"

namespace funcfield {

namespace {

class Scanner {
public:
  explicit Scanner(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::size_t save() const { return pos_; }
  void restore(std::size_t p) { pos_ = p; }
  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

  Int read_uint() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected a digit");
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Int(s_.substr(start, pos_ - start));
  }

  int read_exponent() {
    Int e = read_uint();
    if (!e.fits_sint_p()) fail("exponent too large");
    return static_cast<int>(e.get_si());
  }

private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

// xpart := 'x' | 'x' '^' uint
int parse_xpart(Scanner& sc) {
  sc.expect('x', "x");
  if (sc.accept('^')) return sc.read_exponent();
  return 1;
}

// term := coeff | coeff '*' xpart | xpart
Poly parse_term(Scanner& sc) {
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    Int num = sc.read_uint();
    Int den(1);
    std::size_t mark = sc.save();
    if (sc.accept('/')) {
      if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        den = sc.read_uint();
        if (den == 0) sc.fail("zero denominator in coefficient");
      } else {
        sc.restore(mark);  // the '/' starts a rational-function denominator
      }
    }
    Rat c(num, den);
    c.canonicalize();
    if (sc.accept('*')) return Poly::monomial(c, parse_xpart(sc));
    return Poly(c);
  }
  if (sc.peek() == 'x') return Poly::monomial(Rat(1), parse_xpart(sc));
  sc.fail("expected a term");
}

// poly := [sign] term { sign term }
Poly parse_sum(Scanner& sc) {
  Poly acc;
  bool negative = sc.accept('-');
  if (!negative) sc.accept('+');
  for (;;) {
    Poly t = parse_term(sc);
    acc += negative ? -t : t;
    if (sc.accept('-')) {
      negative = true;
    } else if (sc.accept('+')) {
      negative = false;
    } else {
      break;
    }
  }
  return acc;
}

}  // namespace

Poly parse_poly(const std::string& text) {
  Scanner sc(text);
  Poly p = parse_sum(sc);
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  return p;
}

RatFunc parse_ratfunc(const std::string& text) {
  Scanner sc(text);
  Poly num;
  if (sc.peek() == '(') {
    sc.accept('(');
    num = parse_sum(sc);
    sc.expect(')', ")");
  } else {
    num = parse_sum(sc);
  }
  if (sc.at_end()) return RatFunc(num, Poly(Rat(1)));
  sc.expect('/', "/ or end of input");
  sc.expect('(', "( before denominator");
  Poly den = parse_sum(sc);
  sc.expect(')', ") after denominator");
  if (!sc.at_end()) sc.fail("unexpected trailing input");
  if (den.is_zero()) throw zero_denominator_error();
  return RatFunc(num, den);
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += a.get_str();
    } else {
      if (a != 1) {
        out += a.get_str();
        out += "*";
      }
      out += "x";
      if (i != 1) {
        out += "^";
        out += std::to_string(i);
      }
    }
  }
  return out;
}

std::string to_string(const RatFunc& f) {
  if (f.den() == Poly(Rat(1))) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace funcfield
