#include "dlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dlab {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_or_rethrow(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(origin + ": " + e.what());
    }
}

}  // namespace

LoadedGraph parse_graph_json(const std::string& text, const std::string& origin) {
    json doc = parse_or_rethrow(text, origin);
    if (!doc.is_object()) throw std::runtime_error(origin + ": top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "vertices" && key != "edges" && key != "labels") {
            throw std::runtime_error(origin + ": unknown field '" + key + "'");
        }
    }
    if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
        throw std::runtime_error(origin + ": 'vertices' must be an array of strings");
    }
    std::vector<std::string> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw std::runtime_error(origin + ": vertex entries must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw std::runtime_error(origin + ": 'edges' must be an array");
        std::size_t k = 0;
        for (const auto& e : doc["edges"]) {
            ++k;
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
                throw std::runtime_error(origin + ": edge #" + std::to_string(k) +
                                         " must be a pair of vertex names");
            }
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    LoadedGraph out;
    try {
        out.graph = std::make_shared<SimplicialGraph>(std::move(vertices), std::move(edges));
    } catch (const std::exception& e) {
        throw std::runtime_error(origin + ": " + e.what());
    }
    if (doc.contains("labels")) {
        if (!doc["labels"].is_object()) {
            throw std::runtime_error(origin + ": 'labels' must map vertex names to integers");
        }
        std::vector<std::pair<std::string, int>> labels;
        for (const auto& [name, value] : doc["labels"].items()) {
            if (!value.is_number_integer()) {
                throw std::runtime_error(origin + ": label of '" + name + "' must be an integer");
            }
            labels.emplace_back(name, value.get<int>());
        }
        try {
            out.labeling.emplace(*out.graph, labels);
        } catch (const std::exception& e) {
            throw std::runtime_error(origin + ": " + e.what());
        }
    }
    return out;
}

LoadedGraph load_graph_json(const std::string& path) {
    return parse_graph_json(slurp(path), path);
}

std::vector<VertexSet> parse_collection_json(const std::string& text, const std::string& origin) {
    json doc = parse_or_rethrow(text, origin);
    if (!doc.is_array()) {
        throw std::runtime_error(origin + ": top level must be an array of vertex-name arrays");
    }
    std::vector<VertexSet> out;
    std::size_t k = 0;
    for (const auto& member : doc) {
        ++k;
        if (!member.is_array()) {
            throw std::runtime_error(origin + ": member #" + std::to_string(k) +
                                     " must be an array of vertex names");
        }
        VertexSet vs;
        for (const auto& v : member) {
            if (!v.is_string()) {
                throw std::runtime_error(origin + ": member #" + std::to_string(k) +
                                         " holds a non-string entry");
            }
            vs.push_back(v.get<std::string>());
        }
        out.push_back(std::move(vs));
    }
    return out;
}

std::vector<VertexSet> load_collection_json(const std::string& path) {
    return parse_collection_json(slurp(path), path);
}

nlohmann::json to_json(const KernelClassification& c) {
    json basis = json::array();
    for (const auto& b : c.basis) {
        basis.push_back({{"label", b.label},
                         {"vertices", b.vertices},
                         {"connected", b.connected},
                         {"domination", to_string(b.domination)}});
    }
    json out{{"finitely_generated", c.finitely_generated},
             {"strength", to_string(c.strength)},
             {"basis", basis}};
    out["witness"] = c.witness ? json(*c.witness) : json(nullptr);
    return out;
}

nlohmann::json to_json(const DistortionPrediction& p) {
    json out = to_json(p.classification);
    out["prediction"] = to_string(p.verdict);
    out["reasons"] = json::array({p.reason});
    return out;
}

nlohmann::json to_json(const Theo1Report& r) {
    json members = json::array();
    for (const auto& m : r.members) {
        members.push_back({{"vertices", m.vertices},
                           {"finitely_generated", m.classification.finitely_generated},
                           {"strength", to_string(m.classification.strength)}});
    }
    json edges = json::array();
    for (auto [a, b] : r.meta_edges) edges.push_back(json::array({a, b}));
    return json{{"ok", r.ok()},
                {"cover_ok", r.cover_ok},
                {"kernels_ok", r.kernels_ok},
                {"meta_connected", r.meta_connected},
                {"uncovered", r.uncovered},
                {"members", members},
                {"meta_edges", edges},
                {"failures", r.failures}};
}

nlohmann::json to_json(const FitResult& f) {
    return json{{"exponent", f.exponent},
                {"coefficient", f.coefficient},
                {"r_squared", f.r_squared},
                {"window", json::array({f.window.lo, f.window.hi})},
                {"points_used", f.points_used}};
}

nlohmann::json to_json(const QuotientMetricReport& r) {
    auto entries = [](const std::vector<QuotientMetricEntry>& v) {
        json arr = json::array();
        for (const auto& e : v) {
            arr.push_back({{"image", e.image},
                           {"min_s_length", e.min_s_length},
                           {"quotient_length", e.quotient_length}});
        }
        return arr;
    };
    return json{{"ok", r.ok()},
                {"radius", r.radius},
                {"elements", r.elements},
                {"image_classes", r.image_classes},
                {"violations", entries(r.violations)},
                {"equality_misses", entries(r.equality_misses)}};
}

nlohmann::json to_json(const DistortionSeries& s) {
    json points = json::array();
    for (const auto& p : s.points) {
        points.push_back({{"r", p.r}, {"value", p.value}, {"exact", p.exact}});
    }
    return json{{"points", points},
                {"s_labels", s.s_labels},
                {"t_labels", s.t_labels},
                {"budget_hit", s.budget_hit},
                {"targets_total", s.targets_total},
                {"targets_resolved", s.targets_resolved}};
}

nlohmann::json to_json(const DivergenceSeries& s) {
    json points = json::array();
    for (const auto& p : s.points) {
        json value = p.kind == DivergenceKind::Infinite ? json("inf") : json(p.value);
        points.push_back({{"r", p.r},
                          {"value", value},
                          {"kind", to_string(p.kind)},
                          {"exact", p.exact}});
    }
    return json{{"rho", s.rho}, {"points", points}, {"budget_hit", s.budget_hit}};
}

nlohmann::json graph_check_json(const SimplicialGraph& g,
                                const std::optional<VertexLabeling>& labeling) {
    json out{{"vertices", g.vertices()}, {"edge_count", g.edges().size()}};
    out["connected"] = is_connected(g);
    JoinDecomposition jd = is_join(g);
    out["join"] = jd.is_join;
    if (jd.is_join) {
        out["join_parts"] = json::array({jd.part1, jd.part2});
    }
    if (labeling) {
        out["classification"] = to_json(classify_kernel(g, *labeling));
    }
    return out;
}

}  // namespace dlab
