#include "dlab/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace dlab {

namespace {

std::vector<bool> mark_subset(const SimplicialGraph& g, const VertexSet& sub) {
    std::vector<bool> in(g.vertex_count(), false);
    for (const auto& name : sub) {
        std::size_t i = g.require_index(name);
        if (in[i]) throw std::invalid_argument("duplicate vertex in set: " + name);
        in[i] = true;
    }
    return in;
}

// BFS distances from source over an adjacency predicate
template <class Adj>
std::vector<long> bfs_distances(std::size_t n, std::size_t source, Adj adjacent) {
    std::vector<long> dist(n, -1);
    std::queue<std::size_t> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (std::size_t u = 0; u < n; ++u) {
            if (dist[u] < 0 && adjacent(v, u)) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
        }
    }
    return dist;
}

}  // namespace

SimplicialGraph::SimplicialGraph(std::vector<std::string> vertices,
                                 std::vector<std::pair<std::string, std::string>> edges) {
    names_ = std::move(vertices);
    std::sort(names_.begin(), names_.end());
    for (std::size_t i = 0; i + 1 < names_.size(); ++i) {
        if (names_[i] == names_[i + 1]) {
            throw std::invalid_argument("duplicate vertex: " + names_[i]);
        }
    }
    std::size_t n = names_.size();
    adj_matrix_.assign(n * n, false);
    adj_.assign(n, {});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [a, b] : edges) {
        std::size_t i = require_index(a);
        std::size_t j = require_index(b);
        if (i == j) throw std::invalid_argument("self-loop at vertex: " + a);
        auto key = std::minmax(i, j);
        if (!seen.insert(key).second) {
            throw std::invalid_argument("duplicate edge: " + a + " -- " + b);
        }
        adj_matrix_[i * n + j] = adj_matrix_[j * n + i] = true;
    }
    for (const auto& [i, j] : seen) {
        edges_.emplace_back(i, j);
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::optional<std::size_t> SimplicialGraph::index_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t SimplicialGraph::require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("unknown vertex: " + std::string(name));
    return *i;
}

bool SimplicialGraph::adjacent(std::size_t a, std::size_t b) const {
    std::size_t n = names_.size();
    if (a >= n || b >= n) throw std::out_of_range("vertex index out of range");
    return adj_matrix_[a * n + b];
}

std::string to_string(DominationClass c) {
    switch (c) {
        case DominationClass::NotDominating: return "not-dominating";
        case DominationClass::Dominating: return "dominating";
        case DominationClass::StronglyDominating: return "strongly-dominating";
        case DominationClass::SpeciallyDominating: return "specially-dominating";
    }
    return "?";
}

VertexLabeling::VertexLabeling(const SimplicialGraph& g,
                               const std::vector<std::pair<std::string, int>>& labels) {
    std::size_t n = g.vertex_count();
    by_index_.assign(n, 0);
    for (const auto& [name, lab] : labels) {
        std::size_t i = g.require_index(name);
        if (lab < 1) throw std::invalid_argument("label must be positive for vertex " + name);
        if (by_index_[i] != 0) throw std::invalid_argument("vertex labeled twice: " + name);
        by_index_[i] = lab;
        d_ = std::max(d_, lab);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (by_index_[i] == 0) {
            throw std::invalid_argument("vertex missing label: " + g.vertex_name(i));
        }
    }
    std::vector<bool> present(static_cast<std::size_t>(d_) + 1, false);
    for (int lab : by_index_) present[static_cast<std::size_t>(lab)] = true;
    for (int k = 1; k <= d_; ++k) {
        if (!present[static_cast<std::size_t>(k)]) {
            throw std::invalid_argument("empty label class: " + std::to_string(k));
        }
    }
}

bool is_connected(const SimplicialGraph& g) {
    std::size_t n = g.vertex_count();
    if (n <= 1) return true;
    auto dist = bfs_distances(n, 0, [&](std::size_t a, std::size_t b) { return g.adjacent(a, b); });
    return std::none_of(dist.begin(), dist.end(), [](long d) { return d < 0; });
}

std::size_t diameter(const SimplicialGraph& g) {
    std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("diameter of empty graph");
    std::size_t best = 0;
    for (std::size_t s = 0; s < n; ++s) {
        auto dist = bfs_distances(n, s, [&](std::size_t a, std::size_t b) { return g.adjacent(a, b); });
        for (long d : dist) {
            if (d < 0) throw std::invalid_argument("diameter of disconnected graph");
            best = std::max(best, static_cast<std::size_t>(d));
        }
    }
    return best;
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const VertexSet& sub) {
    auto in = mark_subset(g, sub);
    std::vector<std::string> verts;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (in[i]) verts.push_back(g.vertex_name(i));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [i, j] : g.edges()) {
        if (in[i] && in[j]) edges.emplace_back(g.vertex_name(i), g.vertex_name(j));
    }
    return SimplicialGraph(std::move(verts), std::move(edges));
}

bool star_contains_all(const SimplicialGraph& g, const VertexSet& sub) {
    auto in = mark_subset(g, sub);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (in[v]) continue;
        bool hit = false;
        for (std::size_t u : g.neighbors(v)) {
            if (in[u]) { hit = true; break; }
        }
        if (!hit) return false;
    }
    return true;
}

JoinDecomposition is_join(const SimplicialGraph& g) {
    JoinDecomposition out;
    std::size_t n = g.vertex_count();
    if (n < 2) return out;
    // components of the complement graph; a join is exactly a disconnected complement
    auto dist = bfs_distances(n, 0, [&](std::size_t a, std::size_t b) {
        return a != b && !g.adjacent(a, b);
    });
    bool split = false;
    for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] < 0) split = true;
    }
    if (!split) return out;
    out.is_join = true;
    for (std::size_t v = 0; v < n; ++v) {
        (dist[v] >= 0 ? out.part1 : out.part2).push_back(g.vertex_name(v));
    }
    return out;
}

DominationClass domination_class(const SimplicialGraph& g, const VertexSet& sub) {
    if (sub.empty()) throw std::invalid_argument("domination_class: empty subset");
    auto in = mark_subset(g, sub);
    std::size_t n = g.vertex_count();

    // specially dominating: some u in sub adjacent to every other vertex of g
    for (std::size_t u = 0; u < n; ++u) {
        if (!in[u]) continue;
        bool all = true;
        for (std::size_t v = 0; v < n; ++v) {
            if (v != u && !g.adjacent(u, v)) { all = false; break; }
        }
        if (all) return DominationClass::SpeciallyDominating;
    }
    // strongly dominating: some u in sub adjacent to all outside vertices
    for (std::size_t u = 0; u < n; ++u) {
        if (!in[u]) continue;
        bool all = true;
        for (std::size_t v = 0; v < n; ++v) {
            if (!in[v] && !g.adjacent(u, v)) { all = false; break; }
        }
        if (all) return DominationClass::StronglyDominating;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (in[v]) continue;
        bool hit = false;
        for (std::size_t u : g.neighbors(v)) {
            if (in[u]) { hit = true; break; }
        }
        if (!hit) return DominationClass::NotDominating;
    }
    return DominationClass::Dominating;
}

bool subgraphs_commute(const SimplicialGraph& g, const VertexSet& s1, const VertexSet& s2) {
    auto in1 = mark_subset(g, s1);
    auto in2 = mark_subset(g, s2);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (in1[v] && in2[v]) {
            throw std::invalid_argument("overlapping sets at vertex: " + g.vertex_name(v));
        }
    }
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        if (!in1[a]) continue;
        for (std::size_t b = 0; b < g.vertex_count(); ++b) {
            if (in2[b] && !g.adjacent(a, b)) return false;
        }
    }
    return true;
}

SimplicialGraph generated_subgraph(const SimplicialGraph& g,
                                   const std::vector<VertexSet>& collection) {
    std::vector<bool> in(g.vertex_count(), false);
    for (const auto& s : collection) {
        for (const auto& name : s) in[g.require_index(name)] = true;
    }
    VertexSet all;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (in[i]) all.push_back(g.vertex_name(i));
    }
    return induced_subgraph(g, all);
}

VertexSet label_class(const SimplicialGraph& g, const VertexLabeling& labeling, int label) {
    VertexSet out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (labeling.label_of(i) == label) out.push_back(g.vertex_name(i));
    }
    return out;
}

std::vector<SimplicialGraph> basis_subgraphs(const SimplicialGraph& g,
                                             const VertexLabeling& labeling) {
    std::vector<SimplicialGraph> out;
    for (int k = 1; k <= labeling.dimension(); ++k) {
        out.push_back(induced_subgraph(g, label_class(g, labeling, k)));
    }
    return out;
}

}  // namespace dlab
