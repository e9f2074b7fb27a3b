#include "opal/lattice.hpp"

#include <map>
#include <stdexcept>

#include "opal/supernorm.hpp"
#include "opal/textio.hpp"

namespace opal {

namespace {

// Non-decreasing part lists of a fixed length over 1..max_part, in
// lexicographic order.
std::vector<std::vector<Part>> level_part_lists(std::size_t length, Part max_part) {
    std::vector<std::vector<Part>> out;
    std::vector<Part> current(length, 1);
    while (true) {
        out.push_back(current);
        std::size_t i = length;
        while (i > 0 && current[i - 1] == max_part) --i;
        if (i == 0) break;
        Part next = current[i - 1] + 1;
        for (std::size_t k = i - 1; k < length; ++k) current[k] = next;
    }
    return out;
}

}  // namespace

LatticeGraph lattice_levels(std::int64_t depth, Part max_part) {
    if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
    if (max_part < 1) throw std::invalid_argument("max part must be positive");
    if (depth > 12 || max_part > 12) throw std::length_error("lattice bounds exceeded");

    LatticeGraph graph;
    std::map<Partition, std::size_t> index_of;
    for (std::int64_t level = 0; level <= depth; ++level) {
        graph.levels.emplace_back();
        for (const auto& parts : level_part_lists(static_cast<std::size_t>(level), max_part)) {
            if (graph.nodes.size() >= 500000) throw std::length_error("lattice bounds exceeded");
            Partition p = Partition::from_parts(parts);
            std::size_t id = graph.nodes.size();
            index_of.emplace(p, id);
            graph.levels.back().push_back(id);
            graph.nodes.push_back({p, supernorm(p)});
        }
    }
    // Every node of level k+1 is some level-k node with one part adjoined,
    // so walking the extensions covers each edge exactly once.
    for (std::int64_t level = 0; level < depth; ++level) {
        for (std::size_t u : graph.levels[static_cast<std::size_t>(level)]) {
            for (Part i = 1; i <= max_part; ++i) {
                Partition extended = multiply(graph.nodes[u].partition, Partition::single(i, 1));
                graph.edges.emplace_back(u, index_of.at(extended));
            }
        }
    }
    return graph;
}

std::string lattice_to_dot(const LatticeGraph& graph) {
    std::string out = "digraph lattice {\n  rankdir=\"BT\";\n  node [shape=box];\n";
    for (std::size_t level = 0; level < graph.levels.size(); ++level) {
        // One rank per level keeps the layered drawing honest.
        out += "  { rank=same;";
        for (std::size_t id : graph.levels[level]) out += " n" + std::to_string(id) + ";";
        out += " }\n";
    }
    for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
        const auto& node = graph.nodes[id];
        out += "  n" + std::to_string(id) + " [label=\"" + format(node.partition) + "\\n" +
               to_decimal(node.label) + "\"];\n";
    }
    for (const auto& [from, to] : graph.edges)
        out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace opal
