#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "opal/partition.hpp"

namespace opal {

// The recognized subgroup families:
//   SizeKernel     oversize == 0
//   LengthKernel   overlength == 0
//   PartsIn        support contained in a finite part set S
//   PartsAvoiding  support disjoint from a finite part set S
//   LengthMod      overlength divisible by m
enum class SubgroupKind { SizeKernel, LengthKernel, PartsIn, PartsAvoiding, LengthMod };

class SubgroupSpec {
public:
    static SubgroupSpec size_kernel();
    static SubgroupSpec length_kernel();
    static SubgroupSpec parts_in(std::vector<Part> parts);        // nonempty, positive
    static SubgroupSpec parts_avoiding(std::vector<Part> parts);  // nonempty, positive
    static SubgroupSpec length_mod(std::int64_t modulus);         // modulus >= 1

    SubgroupKind kind() const noexcept { return kind_; }
    std::span<const Part> parts() const noexcept { return parts_; }  // sorted, distinct
    std::int64_t modulus() const noexcept { return modulus_; }

    // Kebab-case family name as used on the command line and in JSON:
    // "size-kernel", "length-kernel", "parts-in", "parts-avoiding",
    // "length-mod".
    std::string name() const;

    friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;

private:
    SubgroupSpec(SubgroupKind kind, std::vector<Part> parts, std::int64_t modulus);

    SubgroupKind kind_;
    std::vector<Part> parts_;
    std::int64_t modulus_ = 0;
};

bool is_member(const Overpartition& a, const SubgroupSpec& g);

// Erases every entry whose part lies in s / satisfies in_set. Both are
// surjective homomorphisms onto the overpartitions supported outside the
// set; the predicate form serves infinite sets.
Overpartition delete_parts_in(std::span<const Part> s, const Overpartition& a);
Overpartition delete_parts_if(const Overpartition& a, const std::function<bool(Part)>& in_set);

// Complementary restriction: keeps exactly the entries with part in s.
Overpartition keep_parts_in(std::span<const Part> s, const Overpartition& a);

// True iff a and b lie in the same coset of g, i.e. multiply(a, inverse(b))
// is a member.
bool same_coset(const Overpartition& a, const Overpartition& b, const SubgroupSpec& g);

// Value of the homomorphism whose kernel is g, labeling a's coset:
// an integer for SizeKernel / LengthKernel / LengthMod, an overpartition
// (the part deletion or restriction) for PartsIn / PartsAvoiding. Two
// values coincide exactly when same_coset holds.
using QuotientImage = std::variant<std::int64_t, Overpartition>;
QuotientImage quotient_image(const Overpartition& a, const SubgroupSpec& g);

// A canonical element of a's coset: a power of <1^1> for the integer-valued
// families, the quotient image itself for the part-set families.
Overpartition coset_representative(const Overpartition& a, const SubgroupSpec& g);

nlohmann::ordered_json to_json(const SubgroupSpec& g);
SubgroupSpec subgroup_spec_from_json(const nlohmann::ordered_json& j);

}  // namespace opal
