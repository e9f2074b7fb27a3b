#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace opal {

// Part values and multiplicities are machine-range signed integers. Stored
// parts are always positive; stored multiplicities are nonzero (a Partition
// keeps them positive, an Overpartition allows either sign).
using Part = std::int64_t;
using Mult = std::int64_t;

struct PartEntry {
    Part part;
    Mult mult;
    friend constexpr auto operator<=>(const PartEntry&, const PartEntry&) = default;
};

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_negate(std::int64_t a);
std::int64_t checked_abs(std::int64_t a);
}  // namespace detail

// Finite multiset of positive integers, stored as part -> multiplicity with
// ascending parts and no zero multiplicities, so equality is structural.
class Partition {
public:
    Partition() = default;

    // From an explicit part list, e.g. {7, 5, 5, 2, 2, 2, 1}; any order.
    static Partition from_parts(std::span<const Part> parts);
    static Partition from_parts(std::initializer_list<Part> parts);

    // From (part, multiplicity) entries in any order. Duplicate parts
    // accumulate, zero entries are dropped. Rejects nonpositive parts and
    // negative multiplicities.
    static Partition from_multiplicities(std::span<const PartEntry> entries);
    static Partition from_multiplicities(std::initializer_list<PartEntry> entries);

    // The one-part-value partition; mult == 0 gives the empty partition.
    static Partition single(Part part, Mult mult);

    std::span<const PartEntry> entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t distinct_parts() const noexcept { return entries_.size(); }
    Mult multiplicity(Part part) const noexcept;

    std::int64_t size() const;    // sum of parts, counted with multiplicity
    std::int64_t length() const;  // number of parts

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<PartEntry> entries_;
};

// A partition in which any part may be overlined, encoded as a signed
// multiplicity map: negative multiplicity <=> the part carries an overline.
// Same canonical storage contract as Partition.
class Overpartition {
public:
    Overpartition() = default;

    static Overpartition from_multiplicities(std::span<const PartEntry> entries);
    static Overpartition from_multiplicities(std::initializer_list<PartEntry> entries);
    static Overpartition single(Part part, Mult mult);

    std::span<const PartEntry> entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t distinct_parts() const noexcept { return entries_.size(); }
    Mult multiplicity(Part part) const noexcept;
    bool is_partition() const noexcept;  // true when no part is overlined

    std::int64_t size() const;    // sum of parts, overlines ignored
    std::int64_t length() const;  // number of parts, overlines ignored

    friend auto operator<=>(const Overpartition&, const Overpartition&) = default;

private:
    std::vector<PartEntry> entries_;
};

// Numerator/denominator presentation of an overpartition: parts with
// positive multiplicity on top, negated negative ones below. A valid form
// has disjoint part supports.
struct RationalForm {
    Partition numerator;
    Partition denominator;
    friend bool operator==(const RationalForm&, const RationalForm&) = default;
};

// Concatenation product: multiplicities add componentwise.
Partition multiply(const Partition& a, const Partition& b);
Overpartition multiply(const Overpartition& a, const Overpartition& b);

// Negates every multiplicity; multiply(a, inverse(a)) is empty.
Overpartition inverse(const Overpartition& a);

Overpartition to_overpartition(const Partition& p);

// Fails when any part is overlined.
Partition to_partition(const Overpartition& a);

RationalForm to_rational_form(const Overpartition& a);

// Inverse of to_rational_form; rejects forms whose supports overlap.
Overpartition from_rational_form(const RationalForm& r);

// Multiset inclusion: every multiplicity in inner is <= the one in outer.
bool is_submultiset(const Partition& inner, const Partition& outer);

// One value of a descending part list, optionally overlined.
struct ListedPart {
    Part value;
    bool overlined;
    friend constexpr auto operator<=>(const ListedPart&, const ListedPart&) = default;
};

// Standard list notation: values non-increasing, and within each part size
// only the first occurrence may be overlined. Decode rejects lists that
// break either rule; encode emits the canonical list back.
Overpartition overline_list_decode(std::span<const ListedPart> parts);
std::vector<ListedPart> overline_list_encode(const Overpartition& a);

}  // namespace opal
