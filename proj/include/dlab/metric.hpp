#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dlab/engines.hpp"
#include "dlab/graph.hpp"

namespace dlab {

inline constexpr std::uint64_t kDefaultBudget = 5'000'000;

// Raised when a search would store more elements than its budget allows.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::uint64_t stored, std::uint64_t frontier)
        : std::runtime_error("budget exceeded: " + std::to_string(stored) +
                             " elements stored, frontier of " + std::to_string(frontier) +
                             " still open"),
          stored_(stored),
          frontier_(frontier) {}
    std::uint64_t stored() const { return stored_; }
    std::uint64_t frontier() const { return frontier_; }

private:
    std::uint64_t stored_;
    std::uint64_t frontier_;
};

// Cayley ball enumerated breadth-first. Elements appear in discovery order;
// layer_end[r] counts elements of length <= r. Only complete layers are kept,
// so lengths derived from layers are exact.
template <GroupEngine E>
struct Ball {
    using Key = typename E::Key;

    std::vector<Key> order;
    std::vector<std::uint32_t> layer_end;
    std::unordered_map<Key, std::uint32_t, std::function<std::size_t(const Key&)>> index;
    int radius_requested = 0;
    int radius_completed = 0;
    bool budget_hit = false;
    std::uint64_t frontier_at_stop = 0;

    long length_of(std::uint32_t i) const {
        auto it = std::upper_bound(layer_end.begin(), layer_end.end(), i);
        return static_cast<long>(it - layer_end.begin());
    }
    std::optional<std::uint32_t> find(const Key& k) const {
        auto it = index.find(k);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

// BFS ball that stops after the last complete layer fitting the budget.
template <GroupEngine E>
Ball<E> ball_partial(const E& engine, int radius, std::uint64_t budget = kDefaultBudget) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    Ball<E> b{.order = {},
              .layer_end = {},
              .index = decltype(Ball<E>::index)(
                  16, [engine](const typename E::Key& k) { return engine.hash(k); }),
              .radius_requested = radius};
    b.order.push_back(engine.identity());
    b.index.emplace(engine.identity(), 0);
    b.layer_end.push_back(1);
    std::size_t layer_begin = 0;
    for (int r = 1; r <= radius; ++r) {
        std::size_t layer_stop = b.order.size();
        bool overflow = false;
        for (std::size_t i = layer_begin; i < layer_stop && !overflow; ++i) {
            typename E::Key base = b.order[i];
            for (std::size_t g = 0; g < engine.generator_count(); ++g) {
                typename E::Key next = engine.apply(base, g);
                if (b.index.contains(next)) continue;
                if (b.order.size() >= budget) {
                    overflow = true;
                    break;
                }
                b.index.emplace(next, static_cast<std::uint32_t>(b.order.size()));
                b.order.push_back(next);
            }
        }
        if (overflow) {
            b.budget_hit = true;
            b.frontier_at_stop = b.order.size() - layer_stop;
            // drop the incomplete layer so stored lengths stay exact
            for (std::size_t i = layer_stop; i < b.order.size(); ++i) b.index.erase(b.order[i]);
            b.order.resize(layer_stop);
            return b;
        }
        b.layer_end.push_back(static_cast<std::uint32_t>(b.order.size()));
        b.radius_completed = r;
        layer_begin = layer_stop;
    }
    return b;
}

template <GroupEngine E>
Ball<E> ball(const E& engine, int radius, std::uint64_t budget = kDefaultBudget) {
    Ball<E> b = ball_partial(engine, radius, budget);
    if (b.budget_hit) throw BudgetError(b.order.size(), b.frontier_at_stop);
    return b;
}

struct DistortionPoint {
    int r = 0;
    long value = 0;
    bool exact = true;
};

struct DistortionSeries {
    std::vector<DistortionPoint> points;
    std::vector<std::string> s_labels;
    std::vector<std::string> t_labels;
    bool budget_hit = false;
    std::uint64_t targets_total = 0;
    std::uint64_t targets_resolved = 0;
};

// Dist(r) = max T-length over subgroup elements of ambient length <= r.
// Ambient lengths come from one ball of radius r_max; T-lengths from the
// exact-length hint when the subgroup engine has one, otherwise from a single
// subgroup BFS shared by all targets. Budget overruns mark points inexact
// (values are then lower bounds) instead of failing.
template <GroupEngine G, GroupEngine H>
    requires std::same_as<typename G::Key, typename H::Key>
DistortionSeries distortion_series(const G& g,
                                   const std::function<bool(const typename G::Key&)>& membership,
                                   const H& h, int r_max,
                                   std::uint64_t budget = kDefaultBudget) {
    using Key = typename G::Key;
    if (r_max < 0) throw std::invalid_argument("r_max must be nonnegative");
    if (!membership(g.identity())) {
        throw std::logic_error("membership rejects the identity");
    }
    // spot-check that the subgroup generators stay inside the membership set
    {
        Ball<H> probe = ball_partial(h, 2, 4096);
        for (const Key& k : probe.order) {
            if (!membership(k)) {
                throw std::logic_error("subgroup generator escapes the membership predicate");
            }
        }
    }

    DistortionSeries out;
    for (std::size_t i = 0; i < g.generator_count(); ++i) out.s_labels.push_back(g.generator_label(i));
    for (std::size_t i = 0; i < h.generator_count(); ++i) out.t_labels.push_back(h.generator_label(i));

    Ball<G> gball = ball_partial(g, r_max, budget);
    out.budget_hit = gball.budget_hit;

    struct Target {
        Key key;
        long s_len;
        long t_len = -1;  // -1 while unresolved
    };
    std::vector<Target> targets;
    for (std::uint32_t i = 0; i < gball.order.size(); ++i) {
        if (membership(gball.order[i])) {
            targets.push_back(Target{gball.order[i], gball.length_of(i)});
        }
    }
    out.targets_total = targets.size();

    if constexpr (HasExactLength<H>) {
        for (auto& t : targets) t.t_len = h.exact_length(t.key);
    } else {
        std::unordered_map<Key, std::size_t, std::function<std::size_t(const Key&)>> lookup(
            16, [&h](const Key& k) { return h.hash(k); });
        for (std::size_t i = 0; i < targets.size(); ++i) lookup.emplace(targets[i].key, i);
        std::size_t open = targets.size();

        std::unordered_set<Key, std::function<std::size_t(const Key&)>> seen(
            16, [&h](const Key& k) { return h.hash(k); });
        std::vector<Key> frontier{h.identity()};
        seen.insert(h.identity());
        long depth = 0;
        if (auto it = lookup.find(h.identity()); it != lookup.end()) {
            targets[it->second].t_len = 0;
            --open;
        }
        while (open > 0 && !frontier.empty()) {
            ++depth;
            std::vector<Key> next;
            for (const Key& base : frontier) {
                for (std::size_t gi = 0; gi < h.generator_count(); ++gi) {
                    Key k2 = h.apply(base, gi);
                    if (!seen.insert(k2).second) continue;
                    if (auto it = lookup.find(k2); it != lookup.end()) {
                        if (targets[it->second].t_len < 0) {
                            targets[it->second].t_len = depth;
                            --open;
                        }
                    }
                    next.push_back(k2);
                    if (seen.size() >= budget) break;
                }
                if (seen.size() >= budget) break;
            }
            frontier = std::move(next);
            if (seen.size() >= budget) break;
        }
        if (open > 0) out.budget_hit = true;
    }

    out.targets_resolved = 0;
    for (const auto& t : targets) {
        if (t.t_len >= 0) ++out.targets_resolved;
    }

    for (int r = 0; r <= r_max; ++r) {
        DistortionPoint p{r, 0, true};
        for (const auto& t : targets) {
            if (t.s_len > r) continue;
            if (t.t_len < 0) {
                p.exact = false;  // an unresolved subgroup element caps us from below
            } else {
                p.value = std::max(p.value, t.t_len);
            }
        }
        if (r > gball.radius_completed) p.exact = false;
        out.points.push_back(p);
    }
    return out;
}

enum class DivergenceKind { Finite, Infinite, Inconclusive };

struct DivergencePoint {
    int r = 0;
    DivergenceKind kind = DivergenceKind::Finite;
    long value = 0;  // max finite avoidant distance seen (lower bound if inexact)
    bool exact = true;
    bool budget_hit = false;
};

struct DivergenceSeries {
    double rho = 0.5;
    std::vector<DivergencePoint> points;
    bool budget_hit = false;
};

namespace detail {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// max finite distance between marked vertices over a CSR graph, plus whether
// some marked pair is disconnected; deterministic regardless of threading
struct PairSweep {
    long max_distance = 0;
    bool disconnected_pair = false;
    std::size_t realizer_a = 0, realizer_b = 0;
};
PairSweep all_pairs_sweep(const std::vector<std::uint32_t>& adj_start,
                          const std::vector<std::uint32_t>& adj,
                          const std::vector<std::uint32_t>& sources);

}  // namespace detail

// Sphere-to-sphere distances avoiding the open ball of radius ceil(rho*r),
// measured inside the explored ball of radius r + horizon_pad. Infinite is
// reported only when a sphere pair is separated and the disconnection is
// certified: either the separated component was explored in full (no vertex
// on the horizon), or the whole explored region is a forest. Anything else
// disconnected is inconclusive and keeps the finite maximum as a lower bound.
template <GroupEngine E>
DivergencePoint divergence_estimate(const E& engine, int r, double rho,
                                    std::uint64_t budget = kDefaultBudget,
                                    int horizon_pad = 2) {
    if (r < 1) throw std::invalid_argument("radius must be positive");
    if (rho <= 0.0 || rho > 1.0) throw std::invalid_argument("rho must lie in (0, 1]");
    int horizon = r + horizon_pad;
    Ball<E> bl = ball_partial(engine, horizon, budget);
    DivergencePoint out{r, DivergenceKind::Finite, 0, true, bl.budget_hit};
    if (bl.radius_completed < r) {
        out.kind = DivergenceKind::Inconclusive;
        out.exact = false;
        return out;
    }
    if (bl.radius_completed < horizon) out.exact = false;

    long cut = static_cast<long>(std::ceil(rho * r - 1e-9));
    std::uint32_t keep_from = cut > 0 ? bl.layer_end[static_cast<std::size_t>(cut - 1)] : 0;
    std::uint32_t total = static_cast<std::uint32_t>(bl.order.size());
    std::uint32_t n = total - keep_from;  // region vertices, indexed from keep_from

    // adjacency restricted to the region, in CSR form
    std::vector<std::uint32_t> adj_start(n + 1, 0);
    std::vector<std::uint32_t> adj;
    adj.reserve(static_cast<std::size_t>(n) * engine.generator_count());
    for (std::uint32_t i = 0; i < n; ++i) {
        typename E::Key base = bl.order[keep_from + i];
        for (std::size_t g = 0; g < engine.generator_count(); ++g) {
            auto idx = bl.find(engine.apply(base, g));
            if (idx && *idx >= keep_from) adj.push_back(*idx - keep_from);
        }
        adj_start[i + 1] = static_cast<std::uint32_t>(adj.size());
    }

    std::vector<std::uint32_t> sphere;
    for (std::uint32_t i = bl.layer_end[static_cast<std::size_t>(r - 1)];
         i < bl.layer_end[static_cast<std::size_t>(r)]; ++i) {
        sphere.push_back(i - keep_from);
    }
    if (sphere.size() < 2) return out;

    auto sweep = detail::all_pairs_sweep(adj_start, adj, sphere);
    out.value = sweep.max_distance;
    if (!sweep.disconnected_pair) return out;

    // union-find over the region to certify the separation
    std::vector<std::uint32_t> parent(n);
    for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t undirected_edges = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t e = adj_start[i]; e < adj_start[i + 1]; ++e) {
            std::uint32_t j = adj[e];
            if (j <= i) continue;
            ++undirected_edges;
            std::uint32_t a = find(i), b = find(j);
            if (a != b) parent[a] = b;
        }
    }
    std::size_t components = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (find(i) == i) ++components;
    }
    bool forest = undirected_edges + components == n;

    // a component with no horizon vertex was explored exhaustively
    std::uint32_t horizon_from = bl.layer_end[static_cast<std::size_t>(bl.radius_completed - 1)];
    std::vector<bool> touches_horizon(n, false);
    {
        std::vector<bool> root_touches(n, false);
        for (std::uint32_t i = horizon_from - keep_from; i < n; ++i) root_touches[find(i)] = true;
        for (std::uint32_t i = 0; i < n; ++i) touches_horizon[i] = root_touches[find(i)];
    }
    bool closed_component = false;
    for (std::uint32_t s : sphere) {
        if (!touches_horizon[s]) closed_component = true;
    }

    if (forest || closed_component) {
        out.kind = DivergenceKind::Infinite;
    } else {
        out.kind = DivergenceKind::Inconclusive;
        out.exact = false;
    }
    return out;
}

template <GroupEngine E>
DivergenceSeries divergence_series(const E& engine, int r_max, double rho,
                                   std::uint64_t budget = kDefaultBudget,
                                   int horizon_pad = 2) {
    DivergenceSeries out;
    out.rho = rho;
    for (int r = 1; r <= r_max; ++r) {
        out.points.push_back(divergence_estimate(engine, r, rho, budget, horizon_pad));
        if (out.points.back().budget_hit) out.budget_hit = true;
    }
    return out;
}

struct FitWindow {
    int lo = 0;
    int hi = 0;
};

struct FitResult {
    double exponent = 0.0;
    double coefficient = 0.0;
    double r_squared = 0.0;
    FitWindow window;
    int points_used = 0;
};

// least squares of log(value) against log(r) over the window; values must be
// positive there and at least 3 points are required
FitResult fit_exponent(const std::vector<std::pair<int, double>>& series, FitWindow window);
FitResult fit_exponent(const DistortionSeries& series, FitWindow window);
FitResult fit_exponent(const DivergenceSeries& series, FitWindow window);

enum class Domination { Dominated, NotDominated, Inconclusive };

std::string to_string(Domination d);
std::string to_string(DivergenceKind k);

struct DominationCheck {
    Domination verdict = Domination::Inconclusive;
    FitResult f_fit;
    FitResult g_fit;
    double tolerance = 0.0;
};

// Compares fitted growth exponents: f is dominated by g when its exponent is
// no more than g's plus the tolerance. NotDominated additionally requires both
// fits to explain the data (r_squared >= 0.9); otherwise inconclusive.
DominationCheck dominated_by(const std::vector<std::pair<int, double>>& f,
                             const std::vector<std::pair<int, double>>& g, double tolerance);

std::vector<std::pair<int, double>> usable_points(const DistortionSeries& s);
std::vector<std::pair<int, double>> usable_points(const DivergenceSeries& s);

struct QuotientMetricEntry {
    std::vector<long> image;
    long min_s_length = 0;
    long quotient_length = 0;
};

struct QuotientMetricReport {
    int radius = 0;
    std::uint64_t elements = 0;
    std::uint64_t image_classes = 0;
    std::vector<QuotientMetricEntry> violations;       // min S-length < quotient length
    std::vector<QuotientMetricEntry> equality_misses;  // min S-length > quotient length
    bool ok() const { return violations.empty() && equality_misses.empty(); }
};

// For every element of the radius ball, the least ambient length within its
// fiber must equal the word length of its image in Z^d over the pushed-forward
// generators. Both defects are reported separately.
QuotientMetricReport quotient_metric_check(std::shared_ptr<const SimplicialGraph> g,
                                           const VertexLabeling& labeling, int radius,
                                           std::uint64_t budget = kDefaultBudget);

std::string series_csv(const DistortionSeries& s);
std::string series_csv(const DivergenceSeries& s);

// rows of any `r,value,exact` CSV; "inf" values are dropped
std::vector<std::pair<int, double>> parse_series_csv(const std::string& text);

}  // namespace dlab
