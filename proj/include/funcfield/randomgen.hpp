#pragma once

#include <cstdint>
#include <random>

#include "funcfield/poly.hpp"
#include "funcfield/ratfunc.hpp"

namespace funcfield {

// Seeded generator for random exact inputs.  Draws go through the raw engine
// with modulo reduction, so sequences are identical on every platform.
class RandomGen {
public:
  explicit RandomGen(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rat rat(long max_abs_num, long max_den) {
    Rat r(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
    r.canonicalize();
    return r;
  }

  Poly poly(int max_deg, bool nonzero) {
    for (;;) {
      int deg = static_cast<int>(uniform(0, max_deg));
      std::vector<Rat> cs(static_cast<std::size_t>(deg) + 1);
      for (auto& c : cs) c = rat(9, 4);
      Poly p = Poly::from_coeffs(std::move(cs));
      if (!nonzero || !p.is_zero()) return p;
    }
  }

  // nonzero rational function with num/den degrees at most max_deg
  RatFunc ratfunc(int max_deg) {
    Poly num = poly(max_deg, true);
    Poly den = poly(max_deg, true);
    RatFunc f(num, den);
    if (f.is_zero()) return RatFunc(Rat(1));
    return f;
  }

  std::mt19937_64& engine() { return eng_; }

private:
  std::mt19937_64 eng_;
};

}  // namespace funcfield
