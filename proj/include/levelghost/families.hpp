#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levelghost/criterion.hpp"

namespace levelghost {

// Scale a witness from level l to level k*l by multiplying every M and a
// value by k.  The result is re-verified from scratch — a failure there is
// an InternalConsistencyError, because scaling provably preserves all four
// checks — and its age equals the original age as a rational number.
GhostWitness lift_witness(const GhostWitness& witness, std::int64_t k);

// The closed-form three-edge witness at a prime level p > 3:
// M = (n, 2n, n), a = (1, (p-1)/2, 1), age (p+3)/(2p).  Requires 1 <= n < p;
// n = 0 would zero out M and force a = 0.  Re-verified before returning.
GhostWitness construct_prime_family(std::int64_t prime_level, Residue n);

// Hard-coded reference witnesses: "l8" (theta, M=(1,3,2), a=(2,2,2)),
// "l9" (theta, M=(1,2,1), a=(1,4,1)), and "l12codim4" (four parallel edges,
// M=(1,5,2,2), a=(2,2,2,2)).  Each is re-verified before returning.
GhostWitness preset_witness(const std::string& name);

std::vector<std::string> preset_names();

std::vector<GhostWitness> preset_witnesses();

} // namespace levelghost
