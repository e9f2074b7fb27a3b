#pragma once

// Test-side oracles. Each one deliberately takes a different algorithmic
// route than the library code it checks: a flat sieve instead of the
// segmented one, bounded-part dynamic programming instead of the pentagonal
// recurrence, and a multiplicity-by-multiplicity count instead of the
// polynomial product.

#include <cstdint>
#include <vector>

namespace oracle {

inline std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::int64_t> out;
    for (std::int64_t v = 2; v <= limit; ++v) {
        if (composite[static_cast<std::size_t>(v)]) continue;
        out.push_back(v);
        for (std::int64_t m = v * v; m <= limit; m += v)
            composite[static_cast<std::size_t>(m)] = true;
    }
    return out;
}

// Counts of partitions of 0..n_max via the coin-style recurrence: admit one
// part size at a time. Fits in long long through n_max ~ 100.
inline std::vector<long long> partition_counts_up_to(int n_max) {
    std::vector<long long> ways(static_cast<std::size_t>(n_max) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n_max; ++part)
        for (int v = part; v <= n_max; ++v)
            ways[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(v - part)];
    return ways;
}

// Overpartition counts: like the above, but a part size used with
// multiplicity m >= 1 comes in two variants (first copy overlined or not).
inline std::vector<long long> overpartition_counts_up_to(int n_max) {
    std::vector<long long> f(static_cast<std::size_t>(n_max) + 1, 0);
    f[0] = 1;
    for (int part = 1; part <= n_max; ++part) {
        std::vector<long long> g(static_cast<std::size_t>(n_max) + 1, 0);
        for (int v = 0; v <= n_max; ++v) {
            g[static_cast<std::size_t>(v)] = f[static_cast<std::size_t>(v)];
            for (int m = 1; m * part <= v; ++m)
                g[static_cast<std::size_t>(v)] += 2 * f[static_cast<std::size_t>(v - m * part)];
        }
        f = std::move(g);
    }
    return f;
}

}  // namespace oracle
