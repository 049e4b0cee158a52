#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dlab/graph.hpp"
#include "dlab/raag.hpp"

namespace dlab {

// How uniformly the basis subgraphs dominate: Special and Strong require the
// respective domination class for every label, Plain only plain domination.
// NotApplicable marks kernels that are not finitely generated at all.
enum class Strength { NotApplicable, Plain, Strong, Special };

std::string to_string(Strength s);

struct BasisReport {
    int label = 0;
    VertexSet vertices;
    bool connected = false;
    DominationClass domination = DominationClass::NotDominating;
};

struct KernelClassification {
    bool finitely_generated = false;
    Strength strength = Strength::NotApplicable;
    std::optional<int> witness;  // least label whose basis subgraph fails
    std::vector<BasisReport> basis;
};

// Finitely generated iff every basis subgraph is connected and dominating.
KernelClassification classify_kernel(const SimplicialGraph& g, const VertexLabeling& labeling);

// Kernel generator u v^-1 from an edge {u, v} inside a basis subgraph;
// u precedes v in vertex order, so the inverse orientation is not listed.
struct TGenerator {
    int label = 0;
    std::string u;
    std::string v;
    RaagElement element;
};

// One generator per same-label edge, grouped by label, edges in graph order.
std::vector<TGenerator> kernel_generators_T(std::shared_ptr<const SimplicialGraph> g,
                                            const VertexLabeling& labeling);

// A word over the generator list: index into kernel_generators_T plus a sign.
struct TLetter {
    std::size_t index = 0;
    int sign = 1;
};
using TWord = std::vector<TLetter>;

RaagElement evaluate_t_word(std::shared_ptr<const SimplicialGraph> g,
                            const std::vector<TGenerator>& gens, const TWord& word);

// T-word for s1^n s2 s1^(-n-1), built by telescoping powers along a shortest
// path between s1 and s2 inside their common basis subgraph. The length never
// exceeds 2K(|n|+1) when that path has at most K = diam+2 edges.
TWord rewrite_lemma1(std::shared_ptr<const SimplicialGraph> g, const VertexLabeling& labeling,
                     const std::string& s1, const std::string& s2, long n);

// T-word for s^m w s^(-m-n) where w is a word inside s's label class and n is
// the exponent sum of w. Falls back to one telescoped factor per letter; when
// s commutes with every letter of w the output has at most length(w) letters.
TWord rewrite_lemma2(std::shared_ptr<const SimplicialGraph> g, const VertexLabeling& labeling,
                     const std::string& s, const Word& w, long m);

struct LatticeIndexResult {
    int rank = 0;
    std::optional<long long> index;  // empty when the span has infinite index
    bool finite() const { return index.has_value(); }
};

// Rank of the integer span of `vectors` in Z^d, and its index when full rank
// (product of the pivot magnitudes of a triangularized basis).
LatticeIndexResult lattice_index(const std::vector<std::vector<long long>>& vectors,
                                 std::size_t d);

enum class DistortionVerdict { Linear, Quadratic, AtMostQuadratic, Unknown };

std::string to_string(DistortionVerdict v);

struct DistortionPrediction {
    DistortionVerdict verdict = DistortionVerdict::Unknown;
    std::string reason;
    KernelClassification classification;
};

// Maps the kernel's combinatorics to a distortion verdict:
// Quadratic when the kernel is strong and some set of label classes spans a
// non-join subgraph on at least two vertices; Linear when the kernel is
// special, or when every basis subgraph is a join and they pairwise commute;
// AtMostQuadratic for the remaining strong kernels; Unknown otherwise.
// Throws if the kernel is not finitely generated or d > 16.
DistortionPrediction predict_distortion(const SimplicialGraph& g, const VertexLabeling& labeling);

struct Theo1Member {
    VertexSet vertices;
    KernelClassification classification;
};

struct Theo1Report {
    std::vector<Theo1Member> members;
    VertexSet uncovered;
    // pairs of member indices whose shared label vectors span finite index
    std::vector<std::pair<std::size_t, std::size_t>> meta_edges;
    bool cover_ok = false;
    bool kernels_ok = false;
    bool meta_connected = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Checks a collection of vertex subsets as a candidate chain of subgroups:
// (1) the subsets cover the vertices and each induced sub-RAAG meets the
// kernel in a finitely generated subgroup (classified after re-indexing the
// labels onto the coordinates the subset actually uses); (2) the meta-graph
// joining members whose intersection carries a finite-index label lattice is
// connected. Failures are reported, not thrown.
Theo1Report theo1_hypothesis_check(const SimplicialGraph& g, const VertexLabeling& labeling,
                                   const std::vector<VertexSet>& collection);

}  // namespace dlab
