#include "opal/partition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace opal {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

std::int64_t checked_negate(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("integer overflow in negation");
    return -a;
}

std::int64_t checked_abs(std::int64_t a) {
    return a < 0 ? checked_negate(a) : a;
}

}  // namespace detail

namespace {

// Shared canonicalization: sort by part, accumulate duplicates, drop zeros.
std::vector<PartEntry> normalized(std::span<const PartEntry> entries, bool allow_negative) {
    std::vector<PartEntry> sorted(entries.begin(), entries.end());
    for (const auto& e : sorted) {
        if (e.part < 1) throw std::invalid_argument("part values must be positive");
        if (!allow_negative && e.mult < 0)
            throw std::invalid_argument("partition multiplicities must be nonnegative");
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const PartEntry& x, const PartEntry& y) { return x.part < y.part; });
    std::vector<PartEntry> out;
    out.reserve(sorted.size());
    for (const auto& e : sorted) {
        if (!out.empty() && out.back().part == e.part) {
            out.back().mult = detail::checked_add(out.back().mult, e.mult);
            if (out.back().mult == 0) out.pop_back();
        } else if (e.mult != 0) {
            out.push_back(e);
        }
    }
    return out;
}

// Componentwise multiplicity sum of two canonical entry lists.
std::vector<PartEntry> merged(std::span<const PartEntry> a, std::span<const PartEntry> b) {
    std::vector<PartEntry> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].part < b[j].part)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].part < a[i].part) {
            out.push_back(b[j++]);
        } else {
            Mult m = detail::checked_add(a[i].mult, b[j].mult);
            if (m != 0) out.push_back({a[i].part, m});
            ++i;
            ++j;
        }
    }
    return out;
}

Mult multiplicity_in(std::span<const PartEntry> entries, Part part) {
    auto it = std::lower_bound(entries.begin(), entries.end(), part,
                               [](const PartEntry& e, Part p) { return e.part < p; });
    return (it != entries.end() && it->part == part) ? it->mult : 0;
}

std::int64_t weighted_sum(std::span<const PartEntry> entries, bool weight_by_part) {
    std::int64_t total = 0;
    for (const auto& e : entries) {
        std::int64_t m = detail::checked_abs(e.mult);
        if (weight_by_part) m = detail::checked_mul(e.part, m);
        total = detail::checked_add(total, m);
    }
    return total;
}

}  // namespace

Partition Partition::from_parts(std::span<const Part> parts) {
    std::vector<PartEntry> entries;
    entries.reserve(parts.size());
    for (Part p : parts) entries.push_back({p, 1});
    return from_multiplicities(entries);
}

Partition Partition::from_parts(std::initializer_list<Part> parts) {
    return from_parts(std::span<const Part>(parts.begin(), parts.end()));
}

Partition Partition::from_multiplicities(std::span<const PartEntry> entries) {
    Partition p;
    p.entries_ = normalized(entries, /*allow_negative=*/false);
    return p;
}

Partition Partition::from_multiplicities(std::initializer_list<PartEntry> entries) {
    return from_multiplicities(std::span<const PartEntry>(entries.begin(), entries.end()));
}

Partition Partition::single(Part part, Mult mult) {
    return from_multiplicities({{part, mult}});
}

Mult Partition::multiplicity(Part part) const noexcept {
    return multiplicity_in(entries_, part);
}

std::int64_t Partition::size() const { return weighted_sum(entries_, true); }

std::int64_t Partition::length() const { return weighted_sum(entries_, false); }

Overpartition Overpartition::from_multiplicities(std::span<const PartEntry> entries) {
    Overpartition a;
    a.entries_ = normalized(entries, /*allow_negative=*/true);
    return a;
}

Overpartition Overpartition::from_multiplicities(std::initializer_list<PartEntry> entries) {
    return from_multiplicities(std::span<const PartEntry>(entries.begin(), entries.end()));
}

Overpartition Overpartition::single(Part part, Mult mult) {
    return from_multiplicities({{part, mult}});
}

Mult Overpartition::multiplicity(Part part) const noexcept {
    return multiplicity_in(entries_, part);
}

bool Overpartition::is_partition() const noexcept {
    for (const auto& e : entries_)
        if (e.mult < 0) return false;
    return true;
}

std::int64_t Overpartition::size() const { return weighted_sum(entries_, true); }

std::int64_t Overpartition::length() const { return weighted_sum(entries_, false); }

Partition multiply(const Partition& a, const Partition& b) {
    return Partition::from_multiplicities(merged(a.entries(), b.entries()));
}

Overpartition multiply(const Overpartition& a, const Overpartition& b) {
    return Overpartition::from_multiplicities(merged(a.entries(), b.entries()));
}

Overpartition inverse(const Overpartition& a) {
    std::vector<PartEntry> entries(a.entries().begin(), a.entries().end());
    for (auto& e : entries) e.mult = detail::checked_negate(e.mult);
    return Overpartition::from_multiplicities(entries);
}

Overpartition to_overpartition(const Partition& p) {
    return Overpartition::from_multiplicities(p.entries());
}

Partition to_partition(const Overpartition& a) {
    if (!a.is_partition()) throw std::invalid_argument("overlined part has no plain-partition image");
    return Partition::from_multiplicities(a.entries());
}

RationalForm to_rational_form(const Overpartition& a) {
    std::vector<PartEntry> num;
    std::vector<PartEntry> den;
    for (const auto& e : a.entries()) {
        if (e.mult > 0)
            num.push_back(e);
        else
            den.push_back({e.part, detail::checked_negate(e.mult)});
    }
    return {Partition::from_multiplicities(num), Partition::from_multiplicities(den)};
}

Overpartition from_rational_form(const RationalForm& r) {
    std::vector<PartEntry> entries(r.numerator.entries().begin(), r.numerator.entries().end());
    for (const auto& e : r.denominator.entries()) {
        if (r.numerator.multiplicity(e.part) != 0)
            throw std::invalid_argument("rational form supports must be disjoint");
        entries.push_back({e.part, detail::checked_negate(e.mult)});
    }
    return Overpartition::from_multiplicities(entries);
}

bool is_submultiset(const Partition& inner, const Partition& outer) {
    for (const auto& e : inner.entries())
        if (e.mult > outer.multiplicity(e.part)) return false;
    return true;
}

Overpartition overline_list_decode(std::span<const ListedPart> parts) {
    std::vector<PartEntry> entries;
    std::size_t i = 0;
    while (i < parts.size()) {
        if (parts[i].value < 1) throw std::invalid_argument("part values must be positive");
        if (i > 0 && parts[i].value > parts[i - 1].value)
            throw std::invalid_argument("parts must be listed in non-increasing order");
        // Consume the run of equal values; only its first entry may carry
        // the overline.
        Part value = parts[i].value;
        bool overlined = parts[i].overlined;
        Mult count = 1;
        for (++i; i < parts.size() && parts[i].value == value; ++i) {
            if (parts[i].overlined)
                throw std::invalid_argument("overline allowed only on the first occurrence of a part");
            ++count;
        }
        entries.push_back({value, overlined ? -count : count});
    }
    return Overpartition::from_multiplicities(entries);
}

std::vector<ListedPart> overline_list_encode(const Overpartition& a) {
    constexpr std::int64_t kMaxListLength = std::int64_t{1} << 22;
    std::int64_t total = a.length();
    if (total > kMaxListLength) throw std::length_error("overline list would be too long");
    std::vector<ListedPart> out;
    out.reserve(static_cast<std::size_t>(total));
    auto entries = a.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
        Mult count = detail::checked_abs(it->mult);
        out.push_back({it->part, it->mult < 0});
        for (Mult k = 1; k < count; ++k) out.push_back({it->part, false});
    }
    return out;
}

}  // namespace opal
