#pragma once

#include "opal/numeric.hpp"
#include "opal/partition.hpp"
#include "opal/primes.hpp"

namespace opal {

// Sends part i to the i-th prime and multiplicity to exponent: the image of
// <1^2 4^1> is 2^2 * 7 = 28. Multiplicative, injective, and inverted
// exactly by the factoring functions below.
BigNat supernorm(const Partition& p, PrimeTable& table = PrimeTable::global());
BigRat supernorm(const Overpartition& a, PrimeTable& table = PrimeTable::global());

// Preimages under the prime-exponent map. factor_to_partition requires
// n >= 1; factor_to_overpartition requires q > 0. Factors beyond the prime
// table ceiling raise length_error.
Partition factor_to_partition(const BigNat& n, PrimeTable& table = PrimeTable::global());
Overpartition factor_to_overpartition(const BigRat& q, PrimeTable& table = PrimeTable::global());

}  // namespace opal
