#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dlab/graph.hpp"

namespace dlab {

// Signed generator of a right-angled Artin group. Letters are ordered by
// vertex index, positive sign before negative; canonical words are the
// lexicographically least geodesics under that order.
struct Letter {
    std::uint16_t vertex = 0;
    std::int8_t sign = 1;  // +1 or -1

    friend bool operator==(Letter a, Letter b) {
        return a.vertex == b.vertex && a.sign == b.sign;
    }
    friend bool operator<(Letter a, Letter b) {
        if (a.vertex != b.vertex) return a.vertex < b.vertex;
        return a.sign > b.sign;  // +1 sorts before -1
    }
};

using Word = std::vector<Letter>;

// Reduce `w` in place to the canonical form: delete every cancellable pair
// (inverse letters separated only by commuting letters), then take the
// lexicographically least shuffle of the surviving geodesic.
void canonicalize_word(const SimplicialGraph& g, Word& w);

Word inverse_word(const Word& w);

// Group element in canonical form, tied to its defining graph. Operations
// across distinct graph objects are rejected.
class RaagElement {
public:
    using GraphPtr = std::shared_ptr<const SimplicialGraph>;

    static RaagElement identity(GraphPtr g);
    static RaagElement canonicalize(GraphPtr g, std::span<const Letter> raw);
    static RaagElement generator(const GraphPtr& g, std::string_view vertex, int sign = 1);

    const Word& word() const { return word_; }
    const GraphPtr& graph() const { return graph_; }
    std::size_t length() const { return word_.size(); }
    bool is_identity() const { return word_.empty(); }

    RaagElement multiply(const RaagElement& rhs) const;
    RaagElement inverse() const;
    bool equals(const RaagElement& rhs) const;

private:
    RaagElement(GraphPtr g, Word w) : graph_(std::move(g)), word_(std::move(w)) {}
    GraphPtr graph_;
    Word word_;
};

std::size_t geodesic_length(const RaagElement& x);

// Exponent sums per label class: coordinate i-1 collects letters with label i.
std::vector<long> evaluate_hom(const VertexLabeling& labeling, const RaagElement& x);
bool in_kernel(const VertexLabeling& labeling, const RaagElement& x);

// Word literals: whitespace-separated tokens `v` and `v^-1`.
Word parse_word(const SimplicialGraph& g, std::string_view text);
std::string format_word(const SimplicialGraph& g, const Word& w);

}  // namespace dlab
