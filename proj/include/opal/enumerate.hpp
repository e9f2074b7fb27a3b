#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <shared_mutex>
#include <vector>

#include "opal/numeric.hpp"
#include "opal/partition.hpp"

namespace opal {

// Generalized pentagonal numbers in the order 1, 2, 5, 7, 12, 15, ...
// (j = 1, 2, 3, ... alternating k, -k for k = ceil(j/2)). j >= 1.
std::int64_t pentagonal(std::int64_t j);

// Memoized partition counts, filled by the classic pentagonal-number
// recurrence. Reads of already-computed values take a shared lock; one
// writer at a time extends the table.
class PartitionCountTable {
public:
    BigNat value(std::int64_t n);  // 0 for n < 0
    static PartitionCountTable& global();

private:
    mutable std::shared_mutex mutex_;
    std::vector<BigNat> values_{1};  // values_[n] holds the count for n
};

BigNat partition_count(std::int64_t n);

// Streams the partitions of n in descending lexicographic part order,
// starting from <n^1> and ending at <1^n>, one at a time.
class PartitionGenerator {
public:
    explicit PartitionGenerator(std::int64_t n);
    std::optional<Partition> next();

private:
    std::vector<Part> parts_;  // descending part list of the last value
    bool started_ = false;
    bool done_ = false;
};

PartitionGenerator partitions_of(std::int64_t n);

// All 2^d ways to overline a subset of the d distinct parts, ordered by
// subset bitmask over ascending parts (so the plain partition comes first).
std::vector<Overpartition> overline_variants(const Partition& p);

// Streams the overpartitions of n: every partition of n in generator order,
// each expanded to its overline variants.
class OverpartitionGenerator {
public:
    explicit OverpartitionGenerator(std::int64_t n);
    std::optional<Overpartition> next();

private:
    PartitionGenerator inner_;
    std::vector<Overpartition> batch_;
    std::size_t batch_pos_ = 0;
};

OverpartitionGenerator overpartitions_of(std::int64_t n);

// Counts ordered pairs of partitions of n whose part supports are disjoint,
// by direct enumeration.
std::uint64_t count_size_kernel_pairs_bruteforce(std::int64_t n);

// The same count via the closed form: p(n)^2 plus pentagonal-shifted
// correction terms with signs -, -, +, +, -, -, ...
BigNat count_size_kernel_pairs_formula(std::int64_t n);

// Coefficients 0..n_max of the overpartition counting series, the product
// over i >= 1 of (1 + q^i) / (1 - q^i), computed by truncated polynomial
// arithmetic. Starts 1, 2, 4, 8, 14, 24.
std::vector<BigNat> overpartition_count_series(std::int64_t n_max);

// Bounds for random_overpartition draws.
struct SampleParams {
    Part max_part = 40;
    Mult max_abs_mult = 5;
    int max_distinct = 8;
};

// Uniform-ish scatter over small overpartitions, deterministic for a given
// engine state; draws use plain modular reduction so streams reproduce
// across standard libraries.
Overpartition random_overpartition(std::mt19937_64& rng, const SampleParams& params = {});

}  // namespace opal
