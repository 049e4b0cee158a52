#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlab {

// Finite simplicial graph: no loops, no multi-edges. Vertices are opaque
// strings, stored sorted lexicographically; all index-based accessors refer
// to that order.
class SimplicialGraph {
public:
    SimplicialGraph(std::vector<std::string> vertices,
                    std::vector<std::pair<std::string, std::string>> edges);

    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& vertices() const { return names_; }
    const std::string& vertex_name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require_index(std::string_view name) const;

    bool adjacent(std::size_t a, std::size_t b) const;
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }

    // canonical edge list: pairs (i, j) with i < j, sorted
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

private:
    std::vector<std::string> names_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<bool> adj_matrix_;  // row-major vertex_count x vertex_count
};

// A subset of vertices, given by name. Validated against a graph on use.
using VertexSet = std::vector<std::string>;

struct JoinDecomposition {
    bool is_join = false;
    // both parts non-empty when is_join; part1 is the complement component
    // containing the lexicographically least vertex
    VertexSet part1;
    VertexSet part2;
};

enum class DominationClass {
    NotDominating,
    Dominating,
    StronglyDominating,
    SpeciallyDominating,
};

std::string to_string(DominationClass c);

// Surjective labeling of vertices by {1, ..., d}; every class non-empty.
class VertexLabeling {
public:
    VertexLabeling(const SimplicialGraph& g,
                   const std::vector<std::pair<std::string, int>>& labels);

    int dimension() const { return d_; }
    int label_of(std::size_t vertex_index) const { return by_index_.at(vertex_index); }
    const std::vector<int>& labels_by_index() const { return by_index_; }

private:
    int d_ = 0;
    std::vector<int> by_index_;
};

bool is_connected(const SimplicialGraph& g);

// max distance between vertex pairs; throws on a disconnected graph
std::size_t diameter(const SimplicialGraph& g);

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const VertexSet& sub);

// every vertex outside `sub` has a neighbor in `sub`
bool star_contains_all(const SimplicialGraph& g, const VertexSet& sub);

JoinDecomposition is_join(const SimplicialGraph& g);

// strongest class that holds for `sub`; Specially > Strongly > Dominating
DominationClass domination_class(const SimplicialGraph& g, const VertexSet& sub);

// complete bipartite between two disjoint vertex sets
bool subgraphs_commute(const SimplicialGraph& g, const VertexSet& s1, const VertexSet& s2);

SimplicialGraph generated_subgraph(const SimplicialGraph& g,
                                   const std::vector<VertexSet>& collection);

// induced subgraphs on the label classes, indexed 1..d
std::vector<SimplicialGraph> basis_subgraphs(const SimplicialGraph& g,
                                             const VertexLabeling& labeling);

// vertex names of a label class, sorted
VertexSet label_class(const SimplicialGraph& g, const VertexLabeling& labeling, int label);

}  // namespace dlab
