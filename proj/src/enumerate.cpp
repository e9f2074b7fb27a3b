#include "opal/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace opal {

std::int64_t pentagonal(std::int64_t j) {
    if (j < 1) throw std::invalid_argument("pentagonal indices start at 1");
    std::int64_t k = (j + 1) / 2;
    if (j % 2 == 1) return k * (3 * k - 1) / 2;
    return k * (3 * k + 1) / 2;
}

BigNat PartitionCountTable::value(std::int64_t n) {
    if (n < 0) return 0;
    auto idx = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(mutex_);
        if (idx < values_.size()) return values_[idx];
    }
    std::unique_lock lock(mutex_);
    // count(m) = sum over j of sign(j) * count(m - pentagonal(j)), where the
    // sign flips every two terms starting with +.
    while (values_.size() <= idx) {
        auto m = static_cast<std::int64_t>(values_.size());
        BigNat total = 0;
        for (std::int64_t j = 1;; ++j) {
            std::int64_t g = pentagonal(j);
            if (g > m) break;
            if (((j + 1) / 2) % 2 == 1)
                total += values_[static_cast<std::size_t>(m - g)];
            else
                total -= values_[static_cast<std::size_t>(m - g)];
        }
        values_.push_back(total);
    }
    return values_[idx];
}

PartitionCountTable& PartitionCountTable::global() {
    static PartitionCountTable table;
    return table;
}

BigNat partition_count(std::int64_t n) { return PartitionCountTable::global().value(n); }

PartitionGenerator::PartitionGenerator(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    if (n > 0) parts_.assign(1, n);
}

std::optional<Partition> PartitionGenerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return Partition::from_parts(parts_);
    }
    // Successor rule: strip the trailing 1s, lower the last remaining part
    // by one, and redistribute the freed total greedily at that new value.
    std::int64_t freed = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++freed;
    }
    if (parts_.empty()) {
        done_ = true;
        return std::nullopt;
    }
    parts_.back() -= 1;
    Part cap = parts_.back();
    std::int64_t total = freed + 1;
    parts_.insert(parts_.end(), static_cast<std::size_t>(total / cap), cap);
    if (total % cap != 0) parts_.push_back(total % cap);
    return Partition::from_parts(parts_);
}

PartitionGenerator partitions_of(std::int64_t n) { return PartitionGenerator(n); }

std::vector<Overpartition> overline_variants(const Partition& p) {
    auto entries = p.entries();
    auto d = entries.size();
    if (d >= 26) throw std::length_error("too many distinct parts to expand overline variants");
    std::vector<Overpartition> out;
    out.reserve(std::size_t{1} << d);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
        std::vector<PartEntry> signed_entries(entries.begin(), entries.end());
        for (std::size_t bit = 0; bit < d; ++bit)
            if (mask & (std::uint32_t{1} << bit)) signed_entries[bit].mult = -signed_entries[bit].mult;
        out.push_back(Overpartition::from_multiplicities(signed_entries));
    }
    return out;
}

OverpartitionGenerator::OverpartitionGenerator(std::int64_t n) : inner_(n) {}

std::optional<Overpartition> OverpartitionGenerator::next() {
    while (batch_pos_ >= batch_.size()) {
        auto p = inner_.next();
        if (!p) return std::nullopt;
        batch_ = overline_variants(*p);
        batch_pos_ = 0;
    }
    return batch_[batch_pos_++];
}

OverpartitionGenerator overpartitions_of(std::int64_t n) { return OverpartitionGenerator(n); }

namespace {

bool supports_disjoint(const std::vector<Part>& a, const std::vector<Part>& b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (b[j] < a[i])
            ++j;
        else
            return false;
    }
    return true;
}

}  // namespace

std::uint64_t count_size_kernel_pairs_bruteforce(std::int64_t n) {
    std::vector<std::vector<Part>> supports;
    auto gen = partitions_of(n);
    while (auto p = gen.next()) {
        std::vector<Part> s;
        s.reserve(p->distinct_parts());
        for (const auto& e : p->entries()) s.push_back(e.part);
        supports.push_back(std::move(s));
    }
    std::uint64_t count = 0;
    for (const auto& a : supports)
        for (const auto& b : supports)
            if (supports_disjoint(a, b)) ++count;
    return count;
}

BigNat count_size_kernel_pairs_formula(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("pair counts need n >= 0");
    BigNat base = partition_count(n);
    BigNat total = base * base;
    for (std::int64_t j = 1; pentagonal(j) <= n; ++j) {
        BigNat shifted = partition_count(n - pentagonal(j));
        if (((j + 1) / 2) % 2 == 1)
            total -= shifted * shifted;
        else
            total += shifted * shifted;
    }
    return total;
}

std::vector<BigNat> overpartition_count_series(std::int64_t n_max) {
    if (n_max < 0) throw std::invalid_argument("series length must be nonnegative");
    std::vector<BigNat> c(static_cast<std::size_t>(n_max) + 1, BigNat(0));
    c[0] = 1;
    for (std::int64_t i = 1; i <= n_max; ++i) {
        // Multiply by (1 + q^i): descending so each source index is still
        // the old coefficient.
        for (std::int64_t k = n_max; k >= i; --k)
            c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - i)];
        // Multiply by 1/(1 - q^i), i.e. by 1 + q^i + q^2i + ...: ascending
        // so the carry chains.
        for (std::int64_t k = i; k <= n_max; ++k)
            c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - i)];
    }
    return c;
}

Overpartition random_overpartition(std::mt19937_64& rng, const SampleParams& params) {
    if (params.max_part < 1 || params.max_abs_mult < 1 || params.max_distinct < 0)
        throw std::invalid_argument("degenerate sample bounds");
    // rng() % bound is biased, but reproducibility across standard libraries
    // matters here and uniformity does not.
    auto draw = [&rng](std::uint64_t bound) { return static_cast<std::int64_t>(rng() % bound); };
    auto chosen = static_cast<std::size_t>(draw(static_cast<std::uint64_t>(params.max_distinct) + 1));
    std::vector<Part> pool;
    for (Part p = 1; p <= params.max_part; ++p) pool.push_back(p);
    std::vector<PartEntry> entries;
    for (std::size_t k = 0; k < chosen && !pool.empty(); ++k) {
        auto at = static_cast<std::size_t>(draw(pool.size()));
        Part part = pool[at];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
        Mult mult = 1 + draw(static_cast<std::uint64_t>(params.max_abs_mult));
        if (draw(2) == 1) mult = -mult;
        entries.push_back({part, mult});
    }
    return Overpartition::from_multiplicities(entries);
}

}  // namespace opal
