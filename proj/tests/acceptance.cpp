// End-to-end acceptance run. Each numbered criterion prints one PASS/FAIL
// line; the process exits with the number of failures. Tolerances and time
// limits are pinned here on purpose: a run that drifts past them should fail
// loudly rather than get renegotiated inside library code.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "dlab/bb.hpp"
#include "dlab/builtins.hpp"
#include "dlab/engines.hpp"
#include "dlab/graph.hpp"
#include "dlab/macura.hpp"
#include "dlab/metric.hpp"
#include "dlab/raag.hpp"
#include "oracles.hpp"

using namespace dlab;

namespace {

int failures = 0;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note(what);
        }
    }

    // informational, printed whether or not the criterion passes
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

void criterion(int idx, const std::string& name, const std::function<void(Check&)>& body,
               double time_limit_s = 0.0) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0.0 && secs >= time_limit_s) {
        c.expect(false, "took " + std::to_string(secs) + "s, limit " +
                            std::to_string(time_limit_s) + "s");
    }
    std::string tail = c.detail.str();
    if (!c.ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", idx, name.c_str(),
                secs, tail.empty() ? "" : " -- ", tail.c_str());
    std::fflush(stdout);
}

constexpr std::uint64_t kBudget = 5'000'000;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

DistortionSeries labeled_kernel_distortion(const Builtin& b, int r_max) {
    RaagEngine engine(b.graph);
    std::vector<std::pair<std::string, RaagEngine::Key>> gens;
    for (const auto& t : kernel_generators_T(b.graph, *b.labeling)) {
        gens.emplace_back(format_word(*b.graph, t.element.word()), engine.from_element(t.element));
    }
    SubgroupEngine<RaagEngine> sub(engine, gens);
    VertexLabeling labeling = *b.labeling;
    auto member = [engine, labeling](const RaagEngine::Key& k) {
        for (long c : engine.abelian_image(k, labeling)) {
            if (c != 0) return false;
        }
        return true;
    };
    return distortion_series(engine, std::function<bool(const RaagEngine::Key&)>(member), sub,
                             r_max, kBudget);
}

// The fig-a1 kernel: the defining map sends each path vertex a1..a4 to 1 and
// kills the cone vertex b, so the kernel is generated by the three path edge
// elements together with b itself.
DistortionSeries figa1_kernel_distortion(int r_max) {
    auto g = builtin_graph("fig-a1").graph;
    RaagEngine engine(g);
    std::vector<std::pair<std::string, RaagEngine::Key>> gens;
    for (const char* w : {"a1 a2^-1", "a2 a3^-1", "a3 a4^-1", "b"}) {
        RaagElement x = RaagElement::canonicalize(g, parse_word(*g, w));
        gens.emplace_back(w, engine.from_element(x));
    }
    SubgroupEngine<RaagEngine> sub(engine, gens);
    std::size_t b_vertex = g->require_index("b");
    auto member = [engine, b_vertex](const RaagEngine::Key& k) {
        RaagElement x = engine.to_element(k);
        long sum = 0;
        for (Letter l : x.word()) {
            if (l.vertex != b_vertex) sum += l.sign;
        }
        return sum == 0;
    };
    return distortion_series(engine, std::function<bool(const RaagEngine::Key&)>(member), sub,
                             r_max, kBudget);
}

// longest run of consecutive exact points with positive value
FitWindow largest_exact_window(const DistortionSeries& s) {
    FitWindow best{0, -1};
    int lo = 0;
    bool open = false;
    for (const DistortionPoint& p : s.points) {
        if (p.exact && p.value > 0) {
            if (!open) {
                lo = p.r;
                open = true;
            }
            if (p.r - lo > best.hi - best.lo) best = {lo, p.r};
        } else {
            open = false;
        }
    }
    return best;
}

void quadratic_regime_checks(Check& c, const std::string& label, const DistortionSeries& s,
                             long K) {
    const auto& pts = s.points;

    for (const DistortionPoint& p : pts) {
        if (p.exact && p.value > 4 * K * static_cast<long>(p.r) * p.r) {
            c.expect(false, label + ": Dist(" + std::to_string(p.r) + ") = " +
                                std::to_string(p.value) + " breaks the 4Kr^2 ceiling");
        }
    }

    // Kernel elements only appear at every other length (their letter signs
    // cancel coordinatewise, and the lone killed generator adds at most one
    // letter), so Dist steps at even radii and odd radii coast: the ratio
    // Dist(r)/r is required to be nondecreasing across the stepping radii,
    // while each odd radius must carry the previous value or one more.
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[i - 1];
        if (p.r % 2 == 1 && p.exact && q.exact) {
            c.expect(p.value == q.value || p.value == q.value + 1,
                     label + ": Dist(" + std::to_string(p.r) + ") is not a unit step above Dist(" +
                         std::to_string(q.r) + ")");
        }
    }
    double prev_ratio = 0.0;
    for (const DistortionPoint& p : pts) {
        if (!p.exact || p.r < 3 || p.r % 2 != 0) continue;
        double ratio = static_cast<double>(p.value) / p.r;
        if (ratio + 1e-12 < prev_ratio) {
            c.expect(false, label + ": Dist(r)/r drops at r = " + std::to_string(p.r));
        }
        prev_ratio = ratio;
    }

    FitWindow w = largest_exact_window(s);
    c.expect(w.hi - w.lo + 1 >= 4, label + ": largest exact window has fewer than 4 points");
    if (w.hi - w.lo + 1 >= 4) {
        FitResult fit = fit_exponent(s, w);
        c.note(label + ": exponent " + fmt(fit.exponent) + " over [" + std::to_string(w.lo) +
               ", " + std::to_string(w.hi) + "]");
        c.expect(fit.exponent >= 1.4 && fit.exponent <= 2.6,
                 label + ": fitted exponent outside [1.4, 2.6]");
    }
}

}  // namespace

int main() {
    DistortionSeries p4_dist;  // shared by criteria 5 and 7
    DivergenceSeries p4_div;   // shared by criteria 6 and 7

    criterion(1, "automorphism image growth stays under its stated bounds", [](Check& c) {
        for (std::size_t d = 2; d <= 5; ++d) {
            GrowthTable t = growth_table(d, 12);
            for (const GrowthEntry& e : t.entries) {
                if (e.length > e.bound) {
                    c.expect(false, "d=" + std::to_string(d) + " auto=" + to_string(e.kind) +
                                        " n=" + std::to_string(e.n) + " i=" + std::to_string(e.i));
                }
            }
        }
        GrowthTable t2 = growth_table(2, 12);
        for (long n = 1; n <= 12; ++n) {
            c.expect(t2.length_of(AutoKind::Phi, n, 2) == n + 1,
                     "rank-2 image length at n=" + std::to_string(n) + " is not n+1");
        }
    }, 10.0);

    criterion(2, "alternative presentation relators collapse to the identity", [](Check& c) {
        for (std::size_t d = 2; d <= 5; ++d) {
            auto relators = gd_defining_relators(d);
            for (std::size_t i = 0; i < relators.size(); ++i) {
                c.expect(relators[i] == gd_identity(d),
                         "relator " + std::to_string(i) + " at d=" + std::to_string(d));
            }
        }
    }, 1.0);

    criterion(3, "kernel classification fixtures match on all figure graphs", [](Check& c) {
        auto classify = [](const std::string& name) {
            Builtin b = builtin_graph(name);
            return classify_kernel(*b.graph, *b.labeling);
        };
        auto predict = [](const std::string& name) {
            Builtin b = builtin_graph(name);
            return predict_distortion(*b.graph, *b.labeling).verdict;
        };
        c.expect(!classify("fig1-right").finitely_generated, "fig1-right should not be f.g.");
        c.expect(classify("fig1-middle").strength == Strength::Plain, "fig1-middle not plain");
        c.expect(classify("fig1-left").strength == Strength::Strong, "fig1-left not strong");
        c.expect(predict("fig1-left") == DistortionVerdict::Quadratic,
                 "fig1-left not quadratic");
        c.expect(classify("fig2-left").strength == Strength::Strong, "fig2-left not strong");
        c.expect(predict("fig2-left") == DistortionVerdict::Quadratic,
                 "fig2-left not quadratic");
        c.expect(classify("fig2-middle").strength == Strength::Strong, "fig2-middle not strong");
        c.expect(classify("fig2-right").strength == Strength::Special,
                 "fig2-right not special");
        c.expect(predict("fig2-right") == DistortionVerdict::Linear, "fig2-right not linear");
        Builtin f4 = builtin_graph("fig-4");
        Theo1Report rep = theo1_hypothesis_check(*f4.graph, *f4.labeling, f4.collection);
        c.expect(rep.ok(), "fig-4 hypothesis check failed");
    });

    criterion(4, "commuting-edge kernel distortion equals floor(r/2)", [](Check& c) {
        DistortionSeries s = labeled_kernel_distortion(builtin_graph("zsq"), 12);
        c.expect(s.points.size() == 13, "missing radii");
        for (const DistortionPoint& p : s.points) {
            c.expect(p.exact, "inexact point at r=" + std::to_string(p.r));
            c.expect(p.value == p.r / 2, "Dist(" + std::to_string(p.r) + ") != r/2");
        }
    }, 5.0);

    criterion(5, "quadratic regime: ceiling, stepped ratio, fitted exponent",
              [&p4_dist](Check& c) {
        Builtin p4 = builtin_graph("p4");
        auto t0 = std::chrono::steady_clock::now();
        p4_dist = labeled_kernel_distortion(p4, 9);
        double s0 =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(s0 < 600.0, "p4 run exceeded 10 minutes");
        quadratic_regime_checks(c, "p4", p4_dist, static_cast<long>(diameter(*p4.graph)) + 2);

        auto t1 = std::chrono::steady_clock::now();
        DistortionSeries a1 = figa1_kernel_distortion(8);
        double s1 =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
        c.expect(s1 < 600.0, "fig-a1 run exceeded 10 minutes");
        long Ka1 = static_cast<long>(diameter(*builtin_graph("fig-a1").graph)) + 2;
        quadratic_regime_checks(c, "fig-a1", a1, Ka1);
    });

    criterion(6, "divergence: certified infinite on the tree, grid oracle, fitted exponent",
              [&p4_div](Check& c) {
        auto free2 = std::make_shared<SimplicialGraph>(
            std::vector<std::string>{"a", "b"},
            std::vector<std::pair<std::string, std::string>>{});
        RaagEngine ftwo(free2);
        for (int r = 2; r <= 4; ++r) {
            DivergencePoint p = divergence_estimate(ftwo, r, 0.5, kBudget);
            c.expect(p.kind == DivergenceKind::Infinite && p.exact,
                     "free group not certified infinite at r=" + std::to_string(r));
        }

        RaagEngine grid(builtin_graph("zsq").graph);
        for (int r = 1; r <= 6; ++r) {
            oracle::GridDivergence expect = oracle::grid_divergence(r, 0.5);
            DivergencePoint p = divergence_estimate(grid, r, 0.5, kBudget);
            bool match = expect.all_connected && p.kind == DivergenceKind::Finite && p.exact &&
                         p.value == expect.max_distance;
            c.expect(match, "grid mismatch at r=" + std::to_string(r) + ": got " +
                                std::to_string(p.value) + ", oracle " +
                                std::to_string(expect.max_distance));
        }

        RaagEngine p4(builtin_graph("p4").graph);
        p4_div = divergence_series(p4, 6, 0.5, kBudget);
        FitResult fit = fit_exponent(p4_div, {3, 6});
        c.note("p4 divergence exponent " + fmt(fit.exponent) + " over [3, 6]");
        c.expect(fit.exponent >= 1.4 && fit.exponent <= 2.6,
                 "path-graph divergence exponent outside [1.4, 2.6]");
    });

    criterion(7, "divergence growth does not outrun distortion growth",
              [&p4_dist, &p4_div](Check& c) {
        DominationCheck dom =
            dominated_by(usable_points(p4_div), usable_points(p4_dist), 0.25);
        c.note("verdict " + to_string(dom.verdict) + " (exponents " + fmt(dom.f_fit.exponent) +
               " vs " + fmt(dom.g_fit.exponent) + ")");
        c.expect(dom.verdict != Domination::NotDominated,
                 "divergence found to strictly dominate distortion");
    });

    criterion(8, "oracle suites: normal forms, lattice indices, rewrite identities",
              [](Check& c) {
        std::size_t graphs = 0;
        for (const SimplicialGraph& g : oracle::all_graphs_up_to(5)) {
            ++graphs;
            auto gp = std::make_shared<SimplicialGraph>(g);
            oracle::WordClosure closure(g, 4);
            for (std::size_t id = 0; id < closure.word_count(); ++id) {
                const std::string& enc = closure.word_at(id);
                RaagElement x = RaagElement::canonicalize(gp, oracle::decode_word(enc));
                if (oracle::encode_word(x.word()) != closure.canonical(enc) ||
                    geodesic_length(x) != closure.canonical(enc).size()) {
                    c.expect(false, "normal form mismatch on graph #" + std::to_string(graphs));
                    return;
                }
            }
        }
        c.expect(graphs == 1099, "expected 1099 graphs, saw " + std::to_string(graphs));

        for (long long a = -4; a <= 4; ++a) {
            for (long long b = -4; b <= 4; ++b) {
                for (long long e = -4; e <= 4; ++e) {
                    for (long long f = -4; f <= 4; ++f) {
                        std::vector<std::vector<long long>> vecs{{a, b}, {e, f}};
                        auto expect = oracle::coset_index_2d(vecs);
                        LatticeIndexResult got = lattice_index(vecs, 2);
                        if (got.finite() != expect.has_value() ||
                            (expect && *expect != got.index.value())) {
                            c.expect(false, "lattice mismatch on [" + std::to_string(a) + "," +
                                                std::to_string(b) + "],[" + std::to_string(e) +
                                                "," + std::to_string(f) + "]");
                            return;
                        }
                    }
                }
            }
        }
        for (long long a = -20; a <= 20; ++a) {
            std::vector<std::vector<long long>> vecs{{a}, {12}};
            auto expect = oracle::coset_index_1d(vecs);
            LatticeIndexResult got = lattice_index(vecs, 1);
            c.expect(got.finite() == expect.has_value() && (!expect || *expect == *got.index),
                     "rank-1 lattice mismatch at " + std::to_string(a));
        }

        for (const std::string& name : builtin_names()) {
            Builtin b = builtin_graph(name);
            const SimplicialGraph& g = *b.graph;
            const VertexLabeling& lab = *b.labeling;
            auto gens = kernel_generators_T(b.graph, lab);
            long K = static_cast<long>(diameter(g)) + 2;

            for (int label = 1; label <= lab.dimension(); ++label) {
                VertexSet cls = label_class(g, lab, label);
                SimplicialGraph basis = induced_subgraph(g, cls);
                if (!is_connected(basis)) continue;

                for (const std::string& s1 : cls) {
                    for (const std::string& s2 : cls) {
                        if (s1 == s2) continue;
                        for (long n = -4; n <= 4; ++n) {
                            TWord tw = rewrite_lemma1(b.graph, lab, s1, s2, n);
                            Word target;
                            auto i1 = static_cast<std::uint16_t>(g.require_index(s1));
                            auto i2 = static_cast<std::uint16_t>(g.require_index(s2));
                            for (long i = 0; i < std::labs(n); ++i)
                                target.push_back(
                                    Letter{i1, static_cast<std::int8_t>(n > 0 ? 1 : -1)});
                            target.push_back(Letter{i2, 1});
                            long back = -n - 1;
                            for (long i = 0; i < std::labs(back); ++i)
                                target.push_back(
                                    Letter{i1, static_cast<std::int8_t>(back > 0 ? 1 : -1)});
                            bool same = evaluate_t_word(b.graph, gens, tw)
                                            .equals(RaagElement::canonicalize(b.graph, target));
                            if (!same ||
                                static_cast<long>(tw.size()) > 2 * K * (std::labs(n) + 1)) {
                                c.expect(false, name + ": first rewrite fails for " + s1 + "," +
                                                    s2 + ",n=" + std::to_string(n));
                                return;
                            }
                        }
                    }
                }

                // every word of length <= 2 over the class alphabet, all pivots
                std::vector<Word> words{{}};
                std::vector<Word> frontier{{}};
                for (int len = 0; len < 2; ++len) {
                    std::vector<Word> next;
                    for (const Word& w : frontier) {
                        for (const std::string& v : cls) {
                            for (int sg : {1, -1}) {
                                Word e = w;
                                e.push_back(Letter{static_cast<std::uint16_t>(g.require_index(v)),
                                                   static_cast<std::int8_t>(sg)});
                                words.push_back(e);
                                next.push_back(std::move(e));
                            }
                        }
                    }
                    frontier = std::move(next);
                }
                for (const std::string& s : cls) {
                    auto sv = static_cast<std::uint16_t>(g.require_index(s));
                    for (const Word& w : words) {
                        long nsum = 0;
                        for (const Letter& l : w) nsum += l.sign;
                        for (long m = -4; m <= 4; ++m) {
                            TWord tw = rewrite_lemma2(b.graph, lab, s, w, m);
                            Word target;
                            for (long i = 0; i < std::labs(m); ++i)
                                target.push_back(
                                    Letter{sv, static_cast<std::int8_t>(m > 0 ? 1 : -1)});
                            target.insert(target.end(), w.begin(), w.end());
                            long back = -m - nsum;
                            for (long i = 0; i < std::labs(back); ++i)
                                target.push_back(
                                    Letter{sv, static_cast<std::int8_t>(back > 0 ? 1 : -1)});
                            long ell = static_cast<long>(w.size());
                            bool same = evaluate_t_word(b.graph, gens, tw)
                                            .equals(RaagElement::canonicalize(b.graph, target));
                            if (!same ||
                                static_cast<long>(tw.size()) >
                                    2 * K * (std::labs(m) * ell + ell * ell)) {
                                c.expect(false, name + ": second rewrite fails for pivot " + s +
                                                    ", m=" + std::to_string(m));
                                return;
                            }
                        }
                    }
                }
            }
        }
    });

    criterion(9, "quotient word metric agrees with the abelianization", [](Check& c) {
        for (std::string name : {"p4", "fig-a1"}) {
            Builtin b = builtin_graph(name);
            QuotientMetricReport rep = quotient_metric_check(b.graph, *b.labeling, 4, kBudget);
            c.expect(rep.violations.empty(),
                     name + ": " + std::to_string(rep.violations.size()) + " violations");
            c.expect(rep.equality_misses.empty(),
                     name + ": " + std::to_string(rep.equality_misses.size()) +
                         " equality misses");
        }
    });

    if (failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criteria failed\n", failures);
    }
    return failures;
}
