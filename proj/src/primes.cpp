#include "opal/primes.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace opal {

namespace {
// Hard ceiling on sieved values; keeps the table well under a gigabyte.
constexpr std::int64_t kMaxSieveValue = 100'000'000;
constexpr std::int64_t kMaxSegment = 1 << 20;
}  // namespace

// Sieves (sieved_to_, hi] against the primes already known. Requires the
// exclusive lock. The segment never outruns sieved_to_^2, so the known
// primes always cover the needed divisors.
void PrimeTable::sieve_more(std::int64_t at_least_value) {
    while (sieved_to_ < at_least_value) {
        if (sieved_to_ >= kMaxSieveValue)
            throw std::length_error("prime table ceiling reached");
        std::int64_t lo = sieved_to_ + 1;
        std::int64_t hi = std::min({sieved_to_ * 2, sieved_to_ + kMaxSegment, kMaxSieveValue});
        std::vector<bool> composite(static_cast<std::size_t>(hi - lo + 1), false);
        for (std::int64_t p : primes_) {
            if (p * p > hi) break;
            std::int64_t first = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::int64_t m = first; m <= hi; m += p)
                composite[static_cast<std::size_t>(m - lo)] = true;
        }
        for (std::int64_t v = lo; v <= hi; ++v)
            if (!composite[static_cast<std::size_t>(v - lo)]) primes_.push_back(v);
        sieved_to_ = hi;
    }
}

std::int64_t PrimeTable::nth(std::int64_t i) {
    if (i < 1) throw std::invalid_argument("prime indices start at 1");
    auto idx = static_cast<std::size_t>(i - 1);
    {
        std::shared_lock lock(mutex_);
        if (idx < primes_.size()) return primes_[idx];
    }
    std::unique_lock lock(mutex_);
    while (idx >= primes_.size()) sieve_more(sieved_to_ + 1);
    return primes_[idx];
}

std::optional<std::int64_t> PrimeTable::index_of(std::int64_t value) {
    if (value < 2) throw std::invalid_argument("prime values start at 2");
    auto lookup = [&]() -> std::optional<std::int64_t> {
        auto it = std::lower_bound(primes_.begin(), primes_.end(), value);
        if (it != primes_.end() && *it == value)
            return static_cast<std::int64_t>(it - primes_.begin()) + 1;
        return std::nullopt;
    };
    {
        std::shared_lock lock(mutex_);
        if (value <= sieved_to_) return lookup();
    }
    std::unique_lock lock(mutex_);
    sieve_more(value);
    return lookup();
}

std::size_t PrimeTable::known_count() const {
    std::shared_lock lock(mutex_);
    return primes_.size();
}

PrimeTable& PrimeTable::global() {
    static PrimeTable table;
    return table;
}

std::int64_t nth_prime(std::int64_t i) { return PrimeTable::global().nth(i); }

std::optional<std::int64_t> prime_index(std::int64_t value) {
    return PrimeTable::global().index_of(value);
}

}  // namespace opal
