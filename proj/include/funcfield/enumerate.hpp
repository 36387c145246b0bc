#pragma once

#include <array>
#include <vector>

#include "funcfield/places.hpp"
#include "funcfield/recurrence.hpp"

namespace funcfield {

// Exact terms U_0..U_N (entries may be the zero function).
std::vector<RatFunc> term_table(const SimpleRecurrence& rec, long N);

// Brute-force solution listings used both as oracles and, below the computed
// bounds, as the complete solvers.  Each kernel exists as a serial reference
// and an OpenMP-parallel version; results are sorted, so the two agree
// byte-for-byte.  jobs <= 1 selects the serial path.

// Strictly decreasing tuples (n_1 > ... > n_r), n_1 <= N, with
// U_{n_1} + ... + U_{n_r} a nonzero S-unit.
std::vector<std::vector<long>> enumerate_sunit_sums_serial(
    const SimpleRecurrence& rec, long r, const SSet& s, long N);
std::vector<std::vector<long>> enumerate_sunit_sums(
    const SimpleRecurrence& rec, long r, const SSet& s, long N, int jobs);

// Does some cross-sequence term triple vanish at (n, m, l)?
bool violates_c11(const SimpleRecurrence& U, const SimpleRecurrence& V,
                  const SimpleRecurrence& W, long n, long m, long l);

// All (n, m, l) in [0, N]^3 with U_n + V_m + W_l = 0, optionally dropping
// solutions that violate the cross-triple condition.  The plain version
// probes every tuple; the fast version matches U_n + V_m against a table of
// -W_l values and is the one the solver uses for larger boxes.
std::vector<std::array<long, 3>> enumerate_triple_serial(
    const SimpleRecurrence& U, const SimpleRecurrence& V,
    const SimpleRecurrence& W, long N, bool enforce_c11);
std::vector<std::array<long, 3>> enumerate_triple(
    const SimpleRecurrence& U, const SimpleRecurrence& V,
    const SimpleRecurrence& W, long N, bool enforce_c11, int jobs);
std::vector<std::array<long, 3>> enumerate_triple_fast(
    const SimpleRecurrence& U, const SimpleRecurrence& V,
    const SimpleRecurrence& W, long N, bool enforce_c11, int jobs);

}  // namespace funcfield
