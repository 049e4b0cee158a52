#include "dlab/bb.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dlab {

std::string to_string(Strength s) {
    switch (s) {
        case Strength::NotApplicable: return "not-applicable";
        case Strength::Plain: return "plain";
        case Strength::Strong: return "strong";
        case Strength::Special: return "special";
    }
    return "?";
}

std::string to_string(DistortionVerdict v) {
    switch (v) {
        case DistortionVerdict::Linear: return "linear";
        case DistortionVerdict::Quadratic: return "quadratic";
        case DistortionVerdict::AtMostQuadratic: return "at-most-quadratic";
        case DistortionVerdict::Unknown: return "unknown";
    }
    return "?";
}

KernelClassification classify_kernel(const SimplicialGraph& g, const VertexLabeling& labeling) {
    KernelClassification out;
    bool all_strong = true;
    bool all_special = true;
    for (int label = 1; label <= labeling.dimension(); ++label) {
        VertexSet cls = label_class(g, labeling, label);
        BasisReport rep;
        rep.label = label;
        rep.vertices = cls;
        rep.connected = is_connected(induced_subgraph(g, cls));
        rep.domination = domination_class(g, cls);
        if (!rep.connected || rep.domination == DominationClass::NotDominating) {
            if (!out.witness) out.witness = label;
        }
        if (rep.domination < DominationClass::StronglyDominating) all_strong = false;
        if (rep.domination < DominationClass::SpeciallyDominating) all_special = false;
        out.basis.push_back(std::move(rep));
    }
    out.finitely_generated = !out.witness.has_value();
    if (out.finitely_generated) {
        out.strength = all_special ? Strength::Special
                       : all_strong ? Strength::Strong
                                    : Strength::Plain;
    }
    return out;
}

std::vector<TGenerator> kernel_generators_T(std::shared_ptr<const SimplicialGraph> g,
                                            const VertexLabeling& labeling) {
    std::vector<TGenerator> out;
    for (int label = 1; label <= labeling.dimension(); ++label) {
        for (auto [i, j] : g->edges()) {
            if (labeling.label_of(i) != label || labeling.label_of(j) != label) continue;
            RaagElement u = RaagElement::generator(g, g->vertex_name(i));
            RaagElement v_inv = RaagElement::generator(g, g->vertex_name(j), -1);
            out.push_back(TGenerator{label, g->vertex_name(i), g->vertex_name(j),
                                     u.multiply(v_inv)});
        }
    }
    return out;
}

RaagElement evaluate_t_word(std::shared_ptr<const SimplicialGraph> g,
                            const std::vector<TGenerator>& gens, const TWord& word) {
    Word raw;
    for (TLetter l : word) {
        const RaagElement& e = gens.at(l.index).element;
        if (l.sign >= 0) {
            raw.insert(raw.end(), e.word().begin(), e.word().end());
        } else {
            Word inv = inverse_word(e.word());
            raw.insert(raw.end(), inv.begin(), inv.end());
        }
    }
    return RaagElement::canonicalize(std::move(g), raw);
}

namespace {

// shared state for the rewriting lemmas: the generator list plus an index
// from same-label edges to their position in it
struct TContext {
    const SimplicialGraph& g;
    const VertexLabeling& labeling;
    std::vector<TGenerator> gens;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_to_gen;

    TContext(std::shared_ptr<const SimplicialGraph> graph, const VertexLabeling& lab)
        : g(*graph), labeling(lab), gens(kernel_generators_T(graph, lab)) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            std::size_t a = g.require_index(gens[k].u);
            std::size_t b = g.require_index(gens[k].v);
            edge_to_gen.emplace(std::minmax(a, b), k);
        }
    }

    // (a b^-1)^p for an adjacent same-label pair
    void append_pair_power(TWord& out, std::size_t a, std::size_t b, long p) const {
        if (p == 0) return;
        auto it = edge_to_gen.find(std::minmax(a, b));
        if (it == edge_to_gen.end()) throw std::logic_error("pair is not a kernel generator");
        // the stored generator is u v^-1 with u < v; flip when we need b a^-1
        int orientation = a < b ? 1 : -1;
        int sign = p > 0 ? orientation : -orientation;
        for (long k = 0; k < std::labs(p); ++k) out.push_back(TLetter{it->second, sign});
    }

    // a^p b^-p telescoped along a shortest same-label path from a to b
    void append_telescope(TWord& out, std::size_t a, std::size_t b, long p) const {
        if (a == b || p == 0) return;
        int label = labeling.label_of(a);
        std::vector<std::size_t> prev(g.vertex_count(), SIZE_MAX);
        std::deque<std::size_t> q{a};
        prev[a] = a;
        while (!q.empty() && prev[b] == SIZE_MAX) {
            std::size_t v = q.front();
            q.pop_front();
            for (std::size_t w : g.neighbors(v)) {
                if (labeling.label_of(w) != label || prev[w] != SIZE_MAX) continue;
                prev[w] = v;
                q.push_back(w);
            }
        }
        if (prev[b] == SIZE_MAX) throw std::invalid_argument("basis subgraph is disconnected");
        std::vector<std::size_t> path{b};
        while (path.back() != a) path.push_back(prev[path.back()]);
        std::reverse(path.begin(), path.end());
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            append_pair_power(out, path[k], path[k + 1], p);
        }
    }

    // s1^n s2 s1^(-n-1) when sign2 = +1; s1^n s2^-1 s1^(-n+1) when sign2 = -1.
    // Split as (s1^n s2^-n)(s2^(n+sign2) s1^(-n-sign2)) and telescope each half.
    void append_conjugate(TWord& out, std::size_t s1, std::size_t s2, long n, int sign2) const {
        append_telescope(out, s1, s2, n);
        append_telescope(out, s2, s1, n + sign2);
    }
};

}  // namespace

TWord rewrite_lemma1(std::shared_ptr<const SimplicialGraph> g, const VertexLabeling& labeling,
                     const std::string& s1, const std::string& s2, long n) {
    std::size_t a = g->require_index(s1);
    std::size_t b = g->require_index(s2);
    if (labeling.label_of(a) != labeling.label_of(b)) {
        throw std::invalid_argument("vertices lie in different label classes");
    }
    VertexSet cls = label_class(*g, labeling, labeling.label_of(a));
    if (!is_connected(induced_subgraph(*g, cls))) {
        throw std::invalid_argument("basis subgraph is disconnected");
    }
    TContext ctx(g, labeling);
    TWord out;
    ctx.append_conjugate(out, a, b, n, 1);
    return out;
}

TWord rewrite_lemma2(std::shared_ptr<const SimplicialGraph> g, const VertexLabeling& labeling,
                     const std::string& s, const Word& w, long m) {
    std::size_t sv = g->require_index(s);
    int label = labeling.label_of(sv);
    for (Letter l : w) {
        if (l.vertex >= g->vertex_count() || labeling.label_of(l.vertex) != label) {
            throw std::invalid_argument("word leaves the label class of " + s);
        }
    }
    TContext ctx(g, labeling);
    TWord out;
    bool central = std::all_of(w.begin(), w.end(), [&](Letter l) {
        return l.vertex == sv || g->adjacent(l.vertex, sv);
    });
    if (central) {
        // s^m w s^(-m-n) = (s_1 s^-1)^(n_1) ... (s_l s^-1)^(n_l); factors with
        // s_j = s are the identity and are dropped
        for (Letter l : w) {
            if (l.vertex == sv) continue;
            ctx.append_pair_power(out, l.vertex, sv, l.sign);
        }
        return out;
    }
    long run = m;  // exponent of s accumulated left of the next letter
    for (Letter l : w) {
        ctx.append_conjugate(out, sv, l.vertex, run, l.sign);
        run += l.sign;
    }
    return out;
}

LatticeIndexResult lattice_index(const std::vector<std::vector<long long>>& vectors,
                                 std::size_t d) {
    if (d == 0) throw std::invalid_argument("ambient dimension must be positive");
    std::vector<std::vector<long long>> rows;
    for (const auto& v : vectors) {
        if (v.size() != d) throw std::invalid_argument("vector dimension mismatch");
        rows.push_back(v);
    }
    LatticeIndexResult out;
    long long det = 1;
    std::size_t top = 0;
    for (std::size_t col = 0; col < d && top < rows.size(); ++col) {
        // gcd elimination: shrink the column below `top` until one entry is left
        for (;;) {
            std::size_t pivot = SIZE_MAX;
            for (std::size_t r = top; r < rows.size(); ++r) {
                if (rows[r][col] != 0 &&
                    (pivot == SIZE_MAX || std::llabs(rows[r][col]) < std::llabs(rows[pivot][col]))) {
                    pivot = r;
                }
            }
            if (pivot == SIZE_MAX) break;  // column is zero below top
            std::swap(rows[top], rows[pivot]);
            bool clean = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                long long q = rows[r][col] / rows[top][col];
                for (std::size_t c = col; c < d; ++c) rows[r][c] -= q * rows[top][c];
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) {
                det *= rows[top][col];
                ++top;
                ++out.rank;
                break;
            }
        }
    }
    if (static_cast<std::size_t>(out.rank) == d) out.index = std::llabs(det);
    return out;
}

DistortionPrediction predict_distortion(const SimplicialGraph& g, const VertexLabeling& labeling) {
    int d = labeling.dimension();
    if (d > 16) throw std::invalid_argument("supports at most 16 label classes");
    DistortionPrediction out;
    out.classification = classify_kernel(g, labeling);
    if (!out.classification.finitely_generated) {
        throw std::invalid_argument("kernel is not finitely generated (basis subgraph " +
                                    std::to_string(*out.classification.witness) + " fails)");
    }
    bool strong = out.classification.strength == Strength::Strong ||
                  out.classification.strength == Strength::Special;

    std::vector<VertexSet> classes;
    for (int label = 1; label <= d; ++label) classes.push_back(label_class(g, labeling, label));

    std::string quad_reason;
    bool quadratic = false;
    if (strong) {
        for (std::uint32_t mask = 1; mask < (1u << d) && !quadratic; ++mask) {
            std::vector<VertexSet> chosen;
            std::size_t total = 0;
            for (int i = 0; i < d; ++i) {
                if (mask & (1u << i)) {
                    chosen.push_back(classes[static_cast<std::size_t>(i)]);
                    total += classes[static_cast<std::size_t>(i)].size();
                }
            }
            if (total < 2) continue;  // a single vertex spans no flat to stretch
            SimplicialGraph sub = generated_subgraph(g, chosen);
            if (!is_join(sub).is_join) {
                quadratic = true;
                std::ostringstream os;
                os << "label classes {";
                for (int i = 0, n = 0; i < d; ++i) {
                    if (mask & (1u << i)) os << (n++ ? "," : "") << (i + 1);
                }
                os << "} span a non-join subgraph";
                quad_reason = os.str();
            }
        }
    }

    bool linear = false;
    std::string linear_reason;
    if (out.classification.strength == Strength::Special) {
        linear = true;
        linear_reason = "every basis subgraph is specially dominating";
    } else {
        bool joins = true;
        for (const auto& cls : classes) {
            if (!is_join(induced_subgraph(g, cls)).is_join) joins = false;
        }
        bool commute = true;
        for (std::size_t i = 0; i < classes.size() && joins; ++i) {
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                if (!subgraphs_commute(g, classes[i], classes[j])) commute = false;
            }
        }
        if (joins && commute) {
            linear = true;
            linear_reason = "direct product of join-graph kernels";
        }
    }

    if (linear && quadratic) {
        throw std::logic_error("linear and quadratic certificates fired together");
    }
    if (linear) {
        out.verdict = DistortionVerdict::Linear;
        out.reason = linear_reason;
    } else if (quadratic) {
        out.verdict = DistortionVerdict::Quadratic;
        out.reason = quad_reason;
    } else if (strong) {
        out.verdict = DistortionVerdict::AtMostQuadratic;
        out.reason = "strong kernel, every generated subgraph is a join";
    } else {
        out.verdict = DistortionVerdict::Unknown;
        out.reason = "kernel is not strong";
    }
    return out;
}

Theo1Report theo1_hypothesis_check(const SimplicialGraph& g, const VertexLabeling& labeling,
                                   const std::vector<VertexSet>& collection) {
    Theo1Report report;
    if (collection.empty()) throw std::invalid_argument("collection is empty");
    for (const auto& member : collection) {
        if (member.empty()) throw std::invalid_argument("collection member is empty");
    }

    std::set<std::string> covered;
    for (const auto& member : collection) {
        for (const auto& name : member) covered.insert(name);
    }
    for (const auto& name : g.vertices()) {
        if (!covered.contains(name)) report.uncovered.push_back(name);
    }
    report.cover_ok = report.uncovered.empty();
    for (const auto& name : report.uncovered) {
        report.failures.push_back("cover: vertex " + name + " lies in no member");
    }

    report.kernels_ok = true;
    for (const auto& member : collection) {
        SimplicialGraph sub = induced_subgraph(g, member);
        // re-index the labels present in the member onto 1..d'
        std::set<int> present;
        for (std::size_t i = 0; i < sub.vertex_count(); ++i) {
            present.insert(labeling.label_of(g.require_index(sub.vertex_name(i))));
        }
        std::map<int, int> reindex;
        for (int lab : present) reindex.emplace(lab, static_cast<int>(reindex.size()) + 1);
        std::vector<std::pair<std::string, int>> sub_labels;
        for (std::size_t i = 0; i < sub.vertex_count(); ++i) {
            sub_labels.emplace_back(sub.vertex_name(i),
                                    reindex.at(labeling.label_of(g.require_index(sub.vertex_name(i)))));
        }
        Theo1Member entry;
        entry.vertices = sub.vertices();
        entry.classification = classify_kernel(sub, VertexLabeling(sub, sub_labels));
        if (!entry.classification.finitely_generated) {
            report.kernels_ok = false;
            std::ostringstream os;
            os << "member {";
            for (std::size_t i = 0; i < entry.vertices.size(); ++i) {
                os << (i ? "," : "") << entry.vertices[i];
            }
            os << "}: restricted kernel is not finitely generated";
            report.failures.push_back(os.str());
        }
        report.members.push_back(std::move(entry));
    }

    // meta-graph: members are adjacent when their shared vertices' label
    // vectors span a finite-index sublattice of Z^d
    std::size_t n = collection.size();
    std::vector<std::size_t> comp(n);
    std::iota(comp.begin(), comp.end(), std::size_t{0});
    auto root = [&](std::size_t x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    auto d = static_cast<std::size_t>(labeling.dimension());
    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::string> a(collection[i].begin(), collection[i].end());
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::vector<long long>> vectors;
            for (const auto& name : collection[j]) {
                if (!a.contains(name)) continue;
                std::vector<long long> e(d, 0);
                e[static_cast<std::size_t>(labeling.label_of(g.require_index(name))) - 1] = 1;
                vectors.push_back(std::move(e));
            }
            if (lattice_index(vectors, d).finite()) {
                report.meta_edges.emplace_back(i, j);
                comp[root(i)] = root(j);
            }
        }
    }
    std::size_t components = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (root(i) == i) ++components;
    }
    report.meta_connected = components == 1;
    if (!report.meta_connected) {
        report.failures.push_back("meta-graph: collection splits into " +
                                  std::to_string(components) + " blocks");
    }
    return report;
}

}  // namespace dlab
