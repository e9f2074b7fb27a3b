#pragma once

#include "opal/numeric.hpp"
#include "opal/partition.hpp"

namespace opal {

// Signed statistics. Each one is a group homomorphism into (Z, +), (Q+, *),
// or a quotient of Z: overlined parts contribute with a minus sign, so
// oversize(<1^2 2^-1>) == 0 and overlength of the same value is 1.

// Sum of part * multiplicity over all entries.
std::int64_t oversize(const Overpartition& a);

// Sum of multiplicities.
std::int64_t overlength(const Overpartition& a);

// Product of part^multiplicity as an exact rational in lowest terms; unlike
// the prime-indexed map this can collapse distinct values (2^2 and 4^1 both
// give 4).
BigRat overnorm(const Overpartition& a);

// The signed multiplicity of one fixed part size.
Mult multiplicity_of(Part k, const Overpartition& a);

// overlength reduced into [0, m); m >= 1.
std::int64_t overlength_mod(std::int64_t m, const Overpartition& a);

}  // namespace opal
