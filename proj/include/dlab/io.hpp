#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dlab/bb.hpp"
#include "dlab/graph.hpp"
#include "dlab/metric.hpp"

namespace dlab {

struct LoadedGraph {
    std::shared_ptr<const SimplicialGraph> graph;
    std::optional<VertexLabeling> labeling;
};

// JSON object {"vertices": [names], "edges": [[a,b],...], "labels": {name: k}}
// with labels optional and unknown fields rejected. `origin` names the source
// in diagnostics.
LoadedGraph parse_graph_json(const std::string& text, const std::string& origin);
LoadedGraph load_graph_json(const std::string& path);

// JSON array of arrays of vertex names
std::vector<VertexSet> parse_collection_json(const std::string& text, const std::string& origin);
std::vector<VertexSet> load_collection_json(const std::string& path);

nlohmann::json to_json(const KernelClassification& c);
nlohmann::json to_json(const DistortionPrediction& p);
nlohmann::json to_json(const Theo1Report& r);
nlohmann::json to_json(const FitResult& f);
nlohmann::json to_json(const QuotientMetricReport& r);
nlohmann::json to_json(const DistortionSeries& s);
nlohmann::json to_json(const DivergenceSeries& s);

// connectivity, join split, and (when labeled) the per-class basis reports
nlohmann::json graph_check_json(const SimplicialGraph& g,
                                const std::optional<VertexLabeling>& labeling);

}  // namespace dlab
