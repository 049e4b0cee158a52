#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dlab/graph.hpp"

namespace dlab {

// A named example graph, optionally with a labeling and a subgroup collection
// for the chain-of-subgroups check.
struct Builtin {
    std::shared_ptr<const SimplicialGraph> graph;
    std::optional<VertexLabeling> labeling;
    std::vector<VertexSet> collection;
};

const std::vector<std::string>& builtin_names();

// Throws std::invalid_argument for unknown names; the message lists the
// available ones.
Builtin builtin_graph(const std::string& name);

}  // namespace dlab
