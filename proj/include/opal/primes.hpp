#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <vector>

namespace opal {

// Ascending table of primes (nth(1) == 2), grown on demand by a segmented
// sieve. Lookups that are already covered take a shared lock, so concurrent
// readers never block each other; growth takes the exclusive lock. Values
// past the sieve ceiling raise length_error instead of looping forever.
class PrimeTable {
public:
    // The i-th prime, i >= 1, extending the table as needed.
    std::int64_t nth(std::int64_t i);

    // The index i with nth(i) == value, or nullopt for composites. value >= 2.
    std::optional<std::int64_t> index_of(std::int64_t value);

    // Primes currently tabulated, without growing.
    std::size_t known_count() const;

    static PrimeTable& global();

private:
    void sieve_more(std::int64_t at_least_value);

    mutable std::shared_mutex mutex_;
    std::vector<std::int64_t> primes_{2, 3};
    std::int64_t sieved_to_ = 3;  // every prime <= sieved_to_ is tabulated
};

// Conveniences over the process-wide table.
std::int64_t nth_prime(std::int64_t i);
std::optional<std::int64_t> prime_index(std::int64_t value);

}  // namespace opal
