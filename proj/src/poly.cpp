#include "funcfield/poly.hpp"

#include <utility>

#include "funcfield/errors.hpp"

namespace funcfield {

Rat make_rat(long num, long den) {
  if (den == 0) throw zero_denominator_error();
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Poly::Poly(const Rat& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(long c) {
  if (c != 0) coeffs_.push_back(Rat(c));
}

Poly Poly::x() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& c, int k) {
  Poly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rat(0));
    p.coeffs_.back() = c;
  }
  return p;
}

Poly Poly::from_coeffs(std::vector<Rat> cs) {
  Poly p;
  p.coeffs_ = std::move(cs);
  p.trim();
  return p;
}

const Rat& Poly::coeff(int i) const {
  static const Rat zero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const {
  if (is_zero()) throw zero_function_error("leading coefficient");
  return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && leading() == 1; }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator+(Poly a, const Poly& b) {
  a += b;
  return a;
}

Poly operator-(Poly a, const Poly& b) {
  a -= b;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Rat> out(ac.size() + bc.size() - 1, Rat(0));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (bc[j] == 0) continue;
      out[i + j] += ac[i] * bc[j];
    }
  }
  return Poly::from_coeffs(std::move(out));
}

Poly operator*(Poly a, const Rat& c) {
  a *= c;
  return a;
}

Poly Poly::monic() const {
  if (is_zero()) throw zero_function_error("monic normalization");
  Poly r(*this);
  const Rat lc = coeffs_.back();
  if (lc != 1) {
    for (auto& c : r.coeffs_) c /= lc;
  }
  return r;
}

Poly Poly::derivative() const {
  if (is_constant()) return Poly();
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return Poly::from_coeffs(std::move(out));
}

Poly Poly::pow(unsigned long e) const {
  Poly result(Rat(1));
  Poly base(*this);
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1UL;
  }
  return result;
}

Rat Poly::eval(const Rat& v) const {
  Rat acc(0);
  for (std::size_t i = coeffs_.size(); i > 0; --i) {
    acc = acc * v + coeffs_[i - 1];
  }
  return acc;
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw division_by_zero_error();
  if (a.is_zero() || a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const Rat& lead = bc.back();
  const int db = b.degree();
  std::vector<Rat> quot(rem.size() - bc.size() + 1, Rat(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (rem[ui] == 0) continue;
    Rat q = rem[ui] / lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= q * bc[static_cast<std::size_t>(j)];
    }
  }
  return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

bool divides(const Poly& b, const Poly& a) {
  if (a.is_zero()) return true;
  if (a.degree() < b.degree()) return false;
  return divmod(a, b).rem.is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).rem;
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  return u.monic();
}

int multiplicity(const Poly& f, const Poly& p) {
  if (f.is_zero()) throw zero_function_error("multiplicity");
  if (p.is_constant()) throw constant_input_error("multiplicity at a constant polynomial");
  int e = 0;
  Poly g = f;
  for (;;) {
    auto [q, r] = divmod(g, p);
    if (!r.is_zero()) break;
    ++e;
    g = std::move(q);
  }
  return e;
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw zero_function_error("squarefree part");
  if (f.is_constant()) return Poly(Rat(1));
  Poly g = poly_gcd(f, f.derivative());
  return divmod(f, g).quot.monic();
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw zero_function_error("squarefree test");
  if (f.is_constant()) return true;
  return poly_gcd(f, f.derivative()).is_constant();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw zero_function_error("squarefree decomposition");
  std::vector<SquarefreeFactor> out;
  if (f.is_constant()) return out;
  // Yun's algorithm (characteristic zero)
  Poly a = f.monic();
  Poly g = poly_gcd(a, a.derivative());
  if (g.is_constant()) {
    out.push_back({a, 1});
    return out;
  }
  Poly c = divmod(a, g).quot;
  Poly d = divmod(a.derivative(), g).quot - c.derivative();
  for (int i = 1; !c.is_constant(); ++i) {
    Poly p = poly_gcd(c, d);
    if (!p.is_constant()) out.push_back({p.monic(), i});
    c = divmod(c, p).quot;
    d = divmod(d, p).quot - c.derivative();
  }
  return out;
}

int compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace funcfield
