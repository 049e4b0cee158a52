#include "dlab/metric.hpp"

#include <atomic>
#include <cmath>
#include <deque>
#include <sstream>

#include "dlab/raag.hpp"

namespace dlab {
namespace detail {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

PairSweep all_pairs_sweep(const std::vector<std::uint32_t>& adj_start,
                          const std::vector<std::uint32_t>& adj,
                          const std::vector<std::uint32_t>& sources) {
    std::uint32_t n = static_cast<std::uint32_t>(adj_start.size() - 1);
    struct Local {
        long max_distance = 0;
        bool disconnected = false;
        std::size_t a = 0, b = 0;
    };
    std::vector<Local> per_source(sources.size());
    parallel_for(sources.size(), [&](std::size_t si) {
        std::vector<std::int32_t> dist(n, -1);
        std::deque<std::uint32_t> q;
        dist[sources[si]] = 0;
        q.push_back(sources[si]);
        while (!q.empty()) {
            std::uint32_t v = q.front();
            q.pop_front();
            for (std::uint32_t e = adj_start[v]; e < adj_start[v + 1]; ++e) {
                std::uint32_t w = adj[e];
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        Local loc;
        for (std::size_t sj = si + 1; sj < sources.size(); ++sj) {
            std::int32_t d = dist[sources[sj]];
            if (d < 0) {
                if (!loc.disconnected) {
                    loc.disconnected = true;
                    loc.a = si;
                    loc.b = sj;
                }
            } else if (d > loc.max_distance) {
                loc.max_distance = d;
                loc.a = si;
                loc.b = sj;
            }
        }
        per_source[si] = loc;
    });
    // sequential reduce keeps the realizer deterministic
    PairSweep out;
    bool have_disconnected = false;
    for (std::size_t si = 0; si < per_source.size(); ++si) {
        const Local& loc = per_source[si];
        if (loc.disconnected && !have_disconnected) {
            have_disconnected = true;
            out.disconnected_pair = true;
        }
        if (loc.max_distance > out.max_distance) {
            out.max_distance = loc.max_distance;
            out.realizer_a = loc.a;
            out.realizer_b = loc.b;
        }
    }
    return out;
}

}  // namespace detail

FitResult fit_exponent(const std::vector<std::pair<int, double>>& series, FitWindow window) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [r, v] : series) {
        if (r < window.lo || r > window.hi) continue;
        if (r <= 0) continue;
        if (v <= 0.0) throw std::invalid_argument("fit window contains a nonpositive value at r=" +
                                                  std::to_string(r));
        pts.emplace_back(std::log(static_cast<double>(r)), std::log(v));
    }
    if (pts.size() < 3) {
        throw std::invalid_argument("fit window holds " + std::to_string(pts.size()) +
                                    " usable points, need at least 3");
    }
    double sx = 0, sy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    double mx = sx / pts.size(), my = sy / pts.size();
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit window has a single distinct radius");
    double slope = sxy / sxx;
    double intercept = my - slope * mx;
    double ss_res = 0, ss_tot = 0;
    for (const auto& [x, y] : pts) {
        double e = y - (slope * x + intercept);
        ss_res += e * e;
        ss_tot += (y - my) * (y - my);
    }
    FitResult out;
    out.exponent = slope;
    out.coefficient = std::exp(intercept);
    out.r_squared = ss_tot == 0.0 ? (ss_res == 0.0 ? 1.0 : 0.0) : 1.0 - ss_res / ss_tot;
    out.window = window;
    out.points_used = static_cast<int>(pts.size());
    return out;
}

std::vector<std::pair<int, double>> usable_points(const DistortionSeries& s) {
    std::vector<std::pair<int, double>> out;
    for (const auto& p : s.points) {
        if (p.exact && p.value > 0) out.emplace_back(p.r, static_cast<double>(p.value));
    }
    return out;
}

std::vector<std::pair<int, double>> usable_points(const DivergenceSeries& s) {
    std::vector<std::pair<int, double>> out;
    for (const auto& p : s.points) {
        if (p.kind == DivergenceKind::Finite && p.exact && p.value > 0) {
            out.emplace_back(p.r, static_cast<double>(p.value));
        }
    }
    return out;
}

FitResult fit_exponent(const DistortionSeries& series, FitWindow window) {
    return fit_exponent(usable_points(series), window);
}

FitResult fit_exponent(const DivergenceSeries& series, FitWindow window) {
    return fit_exponent(usable_points(series), window);
}

std::string to_string(Domination d) {
    switch (d) {
        case Domination::Dominated: return "dominated";
        case Domination::NotDominated: return "not-dominated";
        case Domination::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(DivergenceKind k) {
    switch (k) {
        case DivergenceKind::Finite: return "finite";
        case DivergenceKind::Infinite: return "infinite";
        case DivergenceKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

FitWindow full_window(const std::vector<std::pair<int, double>>& s) {
    FitWindow w{0, 0};
    bool first = true;
    for (const auto& [r, v] : s) {
        if (v <= 0.0) continue;
        if (first) {
            w = {r, r};
            first = false;
        } else {
            w.lo = std::min(w.lo, r);
            w.hi = std::max(w.hi, r);
        }
    }
    return w;
}

}  // namespace

DominationCheck dominated_by(const std::vector<std::pair<int, double>>& f,
                             const std::vector<std::pair<int, double>>& g, double tolerance) {
    DominationCheck out;
    out.tolerance = tolerance;
    out.f_fit = fit_exponent(f, full_window(f));
    out.g_fit = fit_exponent(g, full_window(g));
    if (out.f_fit.exponent <= out.g_fit.exponent + tolerance) {
        out.verdict = Domination::Dominated;
    } else if (out.f_fit.r_squared >= 0.9 && out.g_fit.r_squared >= 0.9) {
        out.verdict = Domination::NotDominated;
    } else {
        out.verdict = Domination::Inconclusive;
    }
    return out;
}

QuotientMetricReport quotient_metric_check(std::shared_ptr<const SimplicialGraph> g,
                                           const VertexLabeling& labeling, int radius,
                                           std::uint64_t budget) {
    QuotientMetricReport report;
    report.radius = radius;

    RaagEngine raag(g);
    Ball<RaagEngine> bl = ball(raag, radius, budget);
    report.elements = bl.order.size();

    // quotient word lengths in Z^d over the images of the raag generators
    int d = labeling.dimension();
    if (d > 8) throw std::invalid_argument("quotient check supports at most 8 label classes");
    std::vector<std::pair<std::string, std::vector<long>>> gens;
    for (std::size_t v = 0; v < g->vertex_count(); ++v) {
        std::vector<long> e(static_cast<std::size_t>(d), 0);
        e[static_cast<std::size_t>(labeling.label_of(v) - 1)] = 1;
        gens.emplace_back(g->vertex_name(v), std::move(e));
    }
    ZdEngine zd(static_cast<std::size_t>(d), gens);
    Ball<ZdEngine> zball = ball(zd, radius, budget);

    struct VecHash {
        std::size_t operator()(const std::vector<long>& v) const {
            std::size_t h = 0xcbf29ce484222325ull;
            for (long x : v) h = mix_hash(h ^ static_cast<std::uint64_t>(x));
            return h;
        }
    };
    std::unordered_map<std::vector<long>, long, VecHash> quotient_len;
    for (std::uint32_t i = 0; i < zball.order.size(); ++i) {
        quotient_len.emplace(zd.unpack(zball.order[i]), zball.length_of(i));
    }

    std::unordered_map<std::vector<long>, long, VecHash> min_s_len;
    for (std::uint32_t i = 0; i < bl.order.size(); ++i) {
        std::vector<long> img = raag.abelian_image(bl.order[i], labeling);
        long len = bl.length_of(i);
        auto [it, fresh] = min_s_len.emplace(img, len);
        if (!fresh && len < it->second) it->second = len;
    }
    report.image_classes = min_s_len.size();

    for (const auto& [img, s_len] : min_s_len) {
        auto it = quotient_len.find(img);
        // every image within the radius-r ball of Z^d is realized: the fiber
        // over it contains a product of single generators of that very length
        long q_len = it == quotient_len.end() ? -1 : it->second;
        if (q_len < 0) throw std::logic_error("image escapes the quotient ball");
        if (s_len < q_len) report.violations.push_back({img, s_len, q_len});
        if (s_len > q_len) report.equality_misses.push_back({img, s_len, q_len});
    }
    auto by_image = [](const QuotientMetricEntry& a, const QuotientMetricEntry& b) {
        return a.image < b.image;
    };
    std::sort(report.violations.begin(), report.violations.end(), by_image);
    std::sort(report.equality_misses.begin(), report.equality_misses.end(), by_image);
    return report;
}

std::string series_csv(const DistortionSeries& s) {
    std::ostringstream os;
    os << "r,value,exact\n";
    for (const auto& p : s.points) {
        os << p.r << ',' << p.value << ',' << (p.exact ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string series_csv(const DivergenceSeries& s) {
    std::ostringstream os;
    os << "r,value,exact\n";
    for (const auto& p : s.points) {
        os << p.r << ',';
        if (p.kind == DivergenceKind::Infinite) {
            os << "inf";
        } else {
            os << p.value;
        }
        os << ',' << (p.exact ? 1 : 0) << '\n';
    }
    return os.str();
}

std::vector<std::pair<int, double>> parse_series_csv(const std::string& text) {
    std::vector<std::pair<int, double>> out;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("r,", 0) == 0) continue;  // header
        }
        std::istringstream ls(line);
        std::string r_s, v_s;
        if (!std::getline(ls, r_s, ',') || !std::getline(ls, v_s, ',')) {
            throw std::invalid_argument("malformed csv row: " + line);
        }
        if (v_s == "inf") continue;
        out.emplace_back(std::stoi(r_s), std::stod(v_s));
    }
    return out;
}

}  // namespace dlab
