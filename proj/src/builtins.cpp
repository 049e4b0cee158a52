#include "dlab/builtins.hpp"

#include <sstream>
#include <stdexcept>

namespace dlab {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;
using Labels = std::vector<std::pair<std::string, int>>;

Builtin make(std::vector<std::string> vertices, Edges edges, Labels labels,
             std::vector<VertexSet> collection = {}) {
    Builtin b;
    b.graph = std::make_shared<SimplicialGraph>(std::move(vertices), std::move(edges));
    if (!labels.empty()) b.labeling.emplace(*b.graph, labels);
    b.collection = std::move(collection);
    return b;
}

// two rows of three: red path r1-r2-r3 over blue path b1-b2-b3, plus rungs
Builtin ladder33(Edges rungs) {
    Edges edges{{"r1", "r2"}, {"r2", "r3"}, {"b1", "b2"}, {"b2", "b3"}};
    edges.insert(edges.end(), rungs.begin(), rungs.end());
    return make({"r1", "r2", "r3", "b1", "b2", "b3"}, std::move(edges),
                {{"r1", 1}, {"r2", 1}, {"r3", 1}, {"b1", 2}, {"b2", 2}, {"b3", 2}});
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names{
        "fig1-left", "fig1-middle", "fig1-right", "fig2-left", "fig2-middle",
        "fig2-right", "fig-a1",     "fig-4",      "p3",        "p4",
        "zsq",
    };
    return names;
}

Builtin builtin_graph(const std::string& name) {
    if (name == "fig1-left") {
        return ladder33({{"r1", "b1"}, {"r1", "b2"}, {"r1", "b3"}, {"r2", "b3"}, {"r3", "b3"}});
    }
    if (name == "fig1-middle") {
        return ladder33({{"r1", "b1"}, {"r1", "b2"}, {"r2", "b2"}, {"r2", "b3"}, {"r3", "b3"}});
    }
    if (name == "fig1-right") {
        return ladder33({{"r1", "b1"}, {"r3", "b3"}});
    }
    if (name == "fig2-left") {
        return make({"r1", "r2", "b1", "b2", "b3", "b4"},
                    {{"r1", "r2"},
                     {"b1", "b2"},
                     {"b2", "b3"},
                     {"b3", "b4"},
                     {"r1", "b1"},
                     {"r1", "b2"},
                     {"r1", "b3"},
                     {"r1", "b4"},
                     {"r2", "b4"}},
                    {{"r1", 1}, {"r2", 1}, {"b1", 2}, {"b2", 2}, {"b3", 2}, {"b4", 2}});
    }
    if (name == "fig2-middle") {
        return make({"r1", "r2", "b1", "b2", "b3"},
                    {{"r1", "r2"},
                     {"b1", "b2"},
                     {"b2", "b3"},
                     {"r1", "b1"},
                     {"r2", "b1"},
                     {"r2", "b2"},
                     {"r2", "b3"}},
                    {{"r1", 1}, {"r2", 1}, {"b1", 2}, {"b2", 2}, {"b3", 2}});
    }
    if (name == "fig2-right") {
        return make({"r1", "r2", "b1", "b2", "b3"},
                    {{"r1", "r2"},
                     {"b1", "b2"},
                     {"b2", "b3"},
                     {"r1", "b1"},
                     {"r1", "b2"},
                     {"r1", "b3"},
                     {"r2", "b2"},
                     {"r2", "b3"}},
                    {{"r1", 1}, {"r2", 1}, {"b1", 2}, {"b2", 2}, {"b3", 2}});
    }
    if (name == "fig-a1") {
        return make({"a1", "a2", "a3", "a4", "b"},
                    {{"a1", "a2"},
                     {"a2", "a3"},
                     {"a3", "a4"},
                     {"b", "a1"},
                     {"b", "a2"},
                     {"b", "a3"},
                     {"b", "a4"}},
                    {{"a1", 1}, {"a2", 1}, {"a3", 1}, {"a4", 1}, {"b", 2}});
    }
    if (name == "fig-4") {
        return make({"x1", "x2", "x3", "x4", "x5", "x6"},
                    {{"x1", "x2"},
                     {"x2", "x3"},
                     {"x4", "x5"},
                     {"x5", "x6"},
                     {"x1", "x4"},
                     {"x1", "x5"},
                     {"x2", "x5"},
                     {"x2", "x6"},
                     {"x3", "x6"}},
                    {{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 2}, {"x5", 2}, {"x6", 2}},
                    {{"x1", "x4", "x5"},
                     {"x1", "x2", "x5"},
                     {"x2", "x5", "x6"},
                     {"x2", "x3", "x6"}});
    }
    if (name == "p3") {
        return make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"a", 1}, {"b", 1}, {"c", 1}});
    }
    if (name == "p4") {
        return make({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}},
                    {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
    }
    if (name == "zsq") {
        return make({"a", "b"}, {{"a", "b"}}, {{"a", 1}, {"b", 1}});
    }
    std::ostringstream os;
    os << "unknown builtin graph '" << name << "'; available:";
    for (const auto& n : builtin_names()) os << ' ' << n;
    throw std::invalid_argument(os.str());
}

}  // namespace dlab
