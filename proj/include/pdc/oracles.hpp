#pragma once
// oracles.hpp — independent brute-force reference implementations
//
// These deliberately share no code with the fast paths they check: the
// triangle oracles enumerate triples or build the dense matrix, and the walk
// oracle is written as literal nested loops per walk length.

#include <iosfwd>
#include <cstdint>

#include "pdc/standardized.hpp"

namespace pdc::oracle {

// Sum of entry products over all unordered triples, one triple at a time.
double signed_triangle_enumerated(const StandardizedMatrix& M);

// Builds the dense standardized matrix and evaluates trace(M^3)/6 literally.
double signed_triangle_dense_trace(const StandardizedMatrix& M);

// Nested-loop self-avoiding walk sum between vertices 0 and 1; ell in 1..4.
double signed_saw_nested(const StandardizedMatrix& M, int ell);

// Randomized equivalence suites (small n). Prints one line per suite to out;
// returns true when every case agrees to 1e-9 relative.
bool run_oracle_checks(std::ostream& out, std::uint64_t seed);

}  // namespace pdc::oracle
