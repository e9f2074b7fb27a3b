#include "opal/subgroups.hpp"

#include <algorithm>
#include <stdexcept>

#include "opal/stats.hpp"

namespace opal {

namespace {

std::vector<Part> sorted_distinct(std::vector<Part> parts) {
    if (parts.empty()) throw std::invalid_argument("part set must be nonempty");
    for (Part p : parts)
        if (p < 1) throw std::invalid_argument("part values must be positive");
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    return parts;
}

bool contains(std::span<const Part> sorted, Part p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
}

}  // namespace

SubgroupSpec::SubgroupSpec(SubgroupKind kind, std::vector<Part> parts, std::int64_t modulus)
    : kind_(kind), parts_(std::move(parts)), modulus_(modulus) {}

SubgroupSpec SubgroupSpec::size_kernel() { return {SubgroupKind::SizeKernel, {}, 0}; }

SubgroupSpec SubgroupSpec::length_kernel() { return {SubgroupKind::LengthKernel, {}, 0}; }

SubgroupSpec SubgroupSpec::parts_in(std::vector<Part> parts) {
    return {SubgroupKind::PartsIn, sorted_distinct(std::move(parts)), 0};
}

SubgroupSpec SubgroupSpec::parts_avoiding(std::vector<Part> parts) {
    return {SubgroupKind::PartsAvoiding, sorted_distinct(std::move(parts)), 0};
}

SubgroupSpec SubgroupSpec::length_mod(std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    return {SubgroupKind::LengthMod, {}, modulus};
}

std::string SubgroupSpec::name() const {
    switch (kind_) {
        case SubgroupKind::SizeKernel: return "size-kernel";
        case SubgroupKind::LengthKernel: return "length-kernel";
        case SubgroupKind::PartsIn: return "parts-in";
        case SubgroupKind::PartsAvoiding: return "parts-avoiding";
        case SubgroupKind::LengthMod: return "length-mod";
    }
    throw std::logic_error("unreachable");
}

bool is_member(const Overpartition& a, const SubgroupSpec& g) {
    switch (g.kind()) {
        case SubgroupKind::SizeKernel: return oversize(a) == 0;
        case SubgroupKind::LengthKernel: return overlength(a) == 0;
        case SubgroupKind::PartsIn:
            return std::all_of(a.entries().begin(), a.entries().end(),
                               [&](const PartEntry& e) { return contains(g.parts(), e.part); });
        case SubgroupKind::PartsAvoiding:
            return std::none_of(a.entries().begin(), a.entries().end(),
                                [&](const PartEntry& e) { return contains(g.parts(), e.part); });
        case SubgroupKind::LengthMod: return overlength_mod(g.modulus(), a) == 0;
    }
    throw std::logic_error("unreachable");
}

Overpartition delete_parts_if(const Overpartition& a, const std::function<bool(Part)>& in_set) {
    std::vector<PartEntry> kept;
    for (const auto& e : a.entries())
        if (!in_set(e.part)) kept.push_back(e);
    return Overpartition::from_multiplicities(kept);
}

Overpartition delete_parts_in(std::span<const Part> s, const Overpartition& a) {
    return delete_parts_if(a, [&](Part p) { return contains(s, p); });
}

Overpartition keep_parts_in(std::span<const Part> s, const Overpartition& a) {
    return delete_parts_if(a, [&](Part p) { return !contains(s, p); });
}

bool same_coset(const Overpartition& a, const Overpartition& b, const SubgroupSpec& g) {
    return is_member(multiply(a, inverse(b)), g);
}

QuotientImage quotient_image(const Overpartition& a, const SubgroupSpec& g) {
    switch (g.kind()) {
        case SubgroupKind::SizeKernel: return oversize(a);
        case SubgroupKind::LengthKernel: return overlength(a);
        case SubgroupKind::PartsIn: return delete_parts_in(g.parts(), a);
        case SubgroupKind::PartsAvoiding: return keep_parts_in(g.parts(), a);
        case SubgroupKind::LengthMod: return overlength_mod(g.modulus(), a);
    }
    throw std::logic_error("unreachable");
}

Overpartition coset_representative(const Overpartition& a, const SubgroupSpec& g) {
    QuotientImage image = quotient_image(a, g);
    if (const auto* rest = std::get_if<Overpartition>(&image)) return *rest;
    return Overpartition::single(1, std::get<std::int64_t>(image));
}

nlohmann::ordered_json to_json(const SubgroupSpec& g) {
    nlohmann::ordered_json j{{"kind", g.name()}};
    if (g.kind() == SubgroupKind::PartsIn || g.kind() == SubgroupKind::PartsAvoiding)
        j["S"] = std::vector<Part>(g.parts().begin(), g.parts().end());
    if (g.kind() == SubgroupKind::LengthMod) j["m"] = g.modulus();
    return j;
}

SubgroupSpec subgroup_spec_from_json(const nlohmann::ordered_json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "size-kernel") return SubgroupSpec::size_kernel();
    if (kind == "length-kernel") return SubgroupSpec::length_kernel();
    if (kind == "parts-in") return SubgroupSpec::parts_in(j.at("S").get<std::vector<Part>>());
    if (kind == "parts-avoiding")
        return SubgroupSpec::parts_avoiding(j.at("S").get<std::vector<Part>>());
    if (kind == "length-mod") return SubgroupSpec::length_mod(j.at("m").get<std::int64_t>());
    throw std::invalid_argument("unknown subgroup kind: " + kind);
}

}  // namespace opal
