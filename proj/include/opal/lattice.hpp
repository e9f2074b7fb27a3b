#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opal/numeric.hpp"
#include "opal/partition.hpp"

namespace opal {

struct LatticeNode {
    Partition partition;
    BigNat label;  // the partition's prime-exponent image
};

// Layered multiset-inclusion diagram. Level k lists node indices for every
// partition with exactly k parts, all parts <= the max_part bound; an edge
// joins u to the node obtained by adjoining one more part, so labels along
// an edge always divide.
struct LatticeGraph {
    std::vector<LatticeNode> nodes;              // level-major order
    std::vector<std::vector<std::size_t>> levels;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// depth >= 0 levels below the empty-partition root; max_part >= 1. Sizes
// grow like binomial(max_part + depth - 1, depth) per level, so both
// arguments are capped (depth <= 12, max_part <= 12, total nodes <= 500000)
// and length_error reports an excess.
LatticeGraph lattice_levels(std::int64_t depth, Part max_part = 3);

std::string lattice_to_dot(const LatticeGraph& graph);

}  // namespace opal
