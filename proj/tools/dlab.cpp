#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dlab/bb.hpp"
#include "dlab/builtins.hpp"
#include "dlab/engines.hpp"
#include "dlab/graph.hpp"
#include "dlab/io.hpp"
#include "dlab/macura.hpp"
#include "dlab/metric.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;

struct Options {
    std::string graph_file;
    std::string builtin;
    std::string collection_file;
    std::string in_file;
    std::string out_file;
    std::string format;
    std::string window;
    int rmax = 6;
    double rho = 0.5;
    std::uint64_t budget = dlab::kDefaultBudget;
    std::size_t d = 2;
    long nmax = 12;
};

void add_graph_options(CLI::App* cmd, Options& opt) {
    auto* g = cmd->add_option("--graph", opt.graph_file, "graph JSON file");
    auto* b = cmd->add_option("--builtin", opt.builtin, "named example graph");
    g->excludes(b);
}

void add_output_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.out_file, "write output to a file instead of stdout");
}

bool wants_csv(const Options& opt) { return opt.format != "json"; }

dlab::LoadedGraph resolve_graph(const Options& opt, std::vector<dlab::VertexSet>* collection) {
    if (!opt.builtin.empty()) {
        dlab::Builtin b = dlab::builtin_graph(opt.builtin);
        if (collection) *collection = b.collection;
        return dlab::LoadedGraph{b.graph, b.labeling};
    }
    if (!opt.graph_file.empty()) {
        return dlab::load_graph_json(opt.graph_file);
    }
    throw std::runtime_error("one of --graph or --builtin is required");
}

const dlab::VertexLabeling& require_labels(const dlab::LoadedGraph& lg) {
    if (!lg.labeling) throw std::runtime_error("the graph carries no labels");
    return *lg.labeling;
}

void write_output(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw std::runtime_error(out_file + ": cannot open for writing");
    out << text;
}

dlab::FitWindow parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw std::runtime_error("--window expects LO:HI");
    try {
        return dlab::FitWindow{std::stoi(text.substr(0, colon)),
                               std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw std::runtime_error("--window expects integer bounds LO:HI");
    }
}

int run_graph_check(const Options& opt) {
    dlab::LoadedGraph lg = resolve_graph(opt, nullptr);
    write_output(dlab::graph_check_json(*lg.graph, lg.labeling).dump(2), opt.out_file);
    return kExitOk;
}

int run_bb_check(const Options& opt) {
    dlab::LoadedGraph lg = resolve_graph(opt, nullptr);
    const auto& labeling = require_labels(lg);
    dlab::KernelClassification cls = dlab::classify_kernel(*lg.graph, labeling);
    nlohmann::json report;
    if (cls.finitely_generated) {
        report = dlab::to_json(dlab::predict_distortion(*lg.graph, labeling));
    } else {
        report = dlab::to_json(cls);
        report["prediction"] = nullptr;
        report["reasons"] = nlohmann::json::array(
            {"basis subgraph " + std::to_string(*cls.witness) + " is not connected-dominating"});
    }
    write_output(report.dump(2), opt.out_file);
    return kExitOk;
}

int run_theo1_check(const Options& opt) {
    std::vector<dlab::VertexSet> collection;
    dlab::LoadedGraph lg = resolve_graph(opt, &collection);
    const auto& labeling = require_labels(lg);
    if (!opt.collection_file.empty()) {
        collection = dlab::load_collection_json(opt.collection_file);
    }
    if (collection.empty()) {
        throw std::runtime_error("no collection: pass --collection or use a builtin that has one");
    }
    dlab::Theo1Report report = dlab::theo1_hypothesis_check(*lg.graph, labeling, collection);
    write_output(dlab::to_json(report).dump(2), opt.out_file);
    return kExitOk;
}

int run_distortion(const Options& opt) {
    dlab::LoadedGraph lg = resolve_graph(opt, nullptr);
    const auto& labeling = require_labels(lg);
    dlab::KernelClassification cls = dlab::classify_kernel(*lg.graph, labeling);
    if (!cls.finitely_generated) {
        throw std::runtime_error("kernel is not finitely generated; no finite series exists");
    }
    dlab::RaagEngine engine(lg.graph);
    std::vector<std::pair<std::string, dlab::RaagEngine::Key>> gens;
    for (const auto& t : dlab::kernel_generators_T(lg.graph, labeling)) {
        gens.emplace_back(dlab::format_word(*lg.graph, t.element.word()),
                          engine.from_element(t.element));
    }
    dlab::SubgroupEngine<dlab::RaagEngine> sub(engine, gens);
    auto membership = [&engine, &labeling](const dlab::RaagEngine::Key& k) {
        for (long c : engine.abelian_image(k, labeling)) {
            if (c != 0) return false;
        }
        return true;
    };
    dlab::DistortionSeries series = dlab::distortion_series(
        engine, std::function<bool(const dlab::RaagEngine::Key&)>(membership), sub, opt.rmax,
        opt.budget);
    write_output(wants_csv(opt) ? dlab::series_csv(series) : dlab::to_json(series).dump(2),
                 opt.out_file);
    return series.budget_hit ? kExitBudget : kExitOk;
}

int run_divergence(const Options& opt) {
    dlab::LoadedGraph lg = resolve_graph(opt, nullptr);
    dlab::RaagEngine engine(lg.graph);
    dlab::DivergenceSeries series =
        dlab::divergence_series(engine, opt.rmax, opt.rho, opt.budget);
    write_output(wants_csv(opt) ? dlab::series_csv(series) : dlab::to_json(series).dump(2),
                 opt.out_file);
    return series.budget_hit ? kExitBudget : kExitOk;
}

int run_macura_growth(const Options& opt) {
    dlab::GrowthTable table = dlab::growth_table(opt.d, opt.nmax);
    std::string text;
    if (wants_csv(opt)) {
        text = dlab::growth_csv(table);
    } else {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : table.entries) {
            entries.push_back({{"auto", dlab::to_string(e.kind)},
                               {"n", e.n},
                               {"i", e.i},
                               {"length", e.length},
                               {"bound", e.bound},
                               {"ok", e.length <= e.bound}});
        }
        text = nlohmann::json{{"d", table.d}, {"n_max", table.n_max}, {"entries", entries}}
                   .dump(2);
    }
    write_output(text, opt.out_file);
    return kExitOk;
}

int run_macura_distortion(const Options& opt) {
    dlab::DistortionSeries series = dlab::fd_distortion(opt.d, opt.rmax, opt.budget);
    write_output(wants_csv(opt) ? dlab::series_csv(series) : dlab::to_json(series).dump(2),
                 opt.out_file);
    return series.budget_hit ? kExitBudget : kExitOk;
}

int run_fit(const Options& opt) {
    std::ifstream in(opt.in_file, std::ios::binary);
    if (!in) throw std::runtime_error(opt.in_file + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto points = dlab::parse_series_csv(buf.str());
    dlab::FitWindow window;
    if (!opt.window.empty()) {
        window = parse_window(opt.window);
    } else {
        if (points.empty()) throw std::runtime_error("series is empty");
        window = {points.front().first, points.front().first};
        for (const auto& [r, v] : points) {
            window.lo = std::min(window.lo, r);
            window.hi = std::max(window.hi, r);
        }
    }
    write_output(dlab::to_json(dlab::fit_exponent(points, window)).dump(2), opt.out_file);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"experiments on graph groups: kernels, distortion, divergence, growth"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("DLAB_BUDGET")) {
        try {
            opt.budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "DLAB_BUDGET is not a number: " << env << "\n";
            return kExitUsage;
        }
    }

    auto* graph_check = app.add_subcommand("graph-check", "connectivity, join split, domination");
    add_graph_options(graph_check, opt);
    add_output_options(graph_check, opt);

    auto* bb_check = app.add_subcommand("bb-check", "kernel classification and prediction");
    add_graph_options(bb_check, opt);
    add_output_options(bb_check, opt);

    auto* theo1 = app.add_subcommand("theo1-check", "chain-of-subgroups hypothesis check");
    add_graph_options(theo1, opt);
    theo1->add_option("--collection", opt.collection_file, "collection JSON file");
    add_output_options(theo1, opt);

    auto* distortion = app.add_subcommand("distortion", "kernel distortion series");
    add_graph_options(distortion, opt);
    distortion->add_option("--rmax", opt.rmax, "largest radius")->capture_default_str();
    distortion->add_option("--budget", opt.budget, "element budget")->capture_default_str();
    add_output_options(distortion, opt);

    auto* divergence = app.add_subcommand("divergence", "group divergence series");
    add_graph_options(divergence, opt);
    divergence->add_option("--rmax", opt.rmax, "largest radius")->capture_default_str();
    divergence->add_option("--rho", opt.rho, "avoided-ball fraction")->capture_default_str();
    divergence->add_option("--budget", opt.budget, "element budget")->capture_default_str();
    add_output_options(divergence, opt);

    auto* growth = app.add_subcommand("macura-growth", "automorphism image growth table");
    growth->add_option("--d", opt.d, "free rank")->capture_default_str();
    growth->add_option("--nmax", opt.nmax, "largest power")->capture_default_str();
    add_output_options(growth, opt);

    auto* mdist = app.add_subcommand("macura-distortion", "free fiber distortion series");
    mdist->add_option("--d", opt.d, "free rank")->capture_default_str();
    mdist->add_option("--rmax", opt.rmax, "largest radius")->capture_default_str();
    mdist->add_option("--budget", opt.budget, "element budget")->capture_default_str();
    add_output_options(mdist, opt);

    auto* fit = app.add_subcommand("fit", "growth exponent of an r,value,exact series");
    fit->add_option("--in", opt.in_file, "series CSV file")->required();
    fit->add_option("--window", opt.window, "fit window LO:HI");
    add_output_options(fit, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (graph_check->parsed()) return run_graph_check(opt);
        if (bb_check->parsed()) return run_bb_check(opt);
        if (theo1->parsed()) return run_theo1_check(opt);
        if (distortion->parsed()) return run_distortion(opt);
        if (divergence->parsed()) return run_divergence(opt);
        if (growth->parsed()) return run_macura_growth(opt);
        if (mdist->parsed()) return run_macura_distortion(opt);
        if (fit->parsed()) return run_fit(opt);
    } catch (const dlab::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
