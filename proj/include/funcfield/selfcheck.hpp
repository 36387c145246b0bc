#pragma once

#include <cstdint>
#include <ostream>

namespace funcfield {

// Property suites behind the CLI selfcheck subcommand: the height axioms,
// the sum formula, height consistency, gcd-free reconstruction and the
// independence-witness check, all on seeded random inputs.  Prints one line
// per suite plus the seed; returns true when everything passed.
bool run_selfcheck(std::uint64_t seed, int count, std::ostream& os);

}  // namespace funcfield
