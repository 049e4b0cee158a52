#include "dlab/raag.hpp"

#include <sstream>
#include <stdexcept>

namespace dlab {

namespace {

// Append one letter to a word that has no cancellable pair, preserving that
// property. Scanning right to left: the nearest same-vertex letter reachable
// through commuting letters either cancels or blocks; a non-commuting letter
// blocks everything behind it.
void push_reduced(const SimplicialGraph& g, Word& w, Letter x) {
    for (std::size_t k = w.size(); k-- > 0;) {
        if (w[k].vertex == x.vertex) {
            if (w[k].sign != x.sign) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
                return;
            }
            break;  // same letter blocks; no partner further left is reachable first
        }
        if (!g.adjacent(w[k].vertex, x.vertex)) break;
    }
    w.push_back(x);
}

// Lexicographically least shuffle of a geodesic. Letters on distinct
// non-adjacent vertices keep their relative order, as do inverse letters on
// the same vertex; everything else may commute past each other.
void least_shuffle(const SimplicialGraph& g, Word& w) {
    std::size_t n = w.size();
    if (n < 2) return;
    std::vector<std::uint32_t> blockers(n, 0);  // count of mandatory predecessors
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            bool ordered;
            if (w[i].vertex == w[j].vertex) {
                ordered = w[i].sign != w[j].sign;
            } else {
                ordered = !g.adjacent(w[i].vertex, w[j].vertex);
            }
            if (ordered) ++blockers[j];
        }
    }
    Word out;
    out.reserve(n);
    std::vector<bool> used(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t p = 0; p < n; ++p) {
            if (used[p] || blockers[p] != 0) continue;
            if (best == n || w[p] < w[best]) best = p;
        }
        used[best] = true;
        out.push_back(w[best]);
        for (std::size_t j = best + 1; j < n; ++j) {
            if (used[j]) continue;
            bool ordered;
            if (w[best].vertex == w[j].vertex) {
                ordered = w[best].sign != w[j].sign;
            } else {
                ordered = !g.adjacent(w[best].vertex, w[j].vertex);
            }
            if (ordered) --blockers[j];
        }
    }
    w = std::move(out);
}

}  // namespace

void canonicalize_word(const SimplicialGraph& g, Word& w) {
    Word reduced;
    reduced.reserve(w.size());
    for (Letter x : w) {
        if (x.vertex >= g.vertex_count()) throw std::invalid_argument("letter vertex out of range");
        if (x.sign != 1 && x.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
        push_reduced(g, reduced, x);
    }
    least_shuffle(g, reduced);
    w = std::move(reduced);
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (std::size_t k = w.size(); k-- > 0;) {
        out.push_back(Letter{w[k].vertex, static_cast<std::int8_t>(-w[k].sign)});
    }
    return out;
}

RaagElement RaagElement::identity(GraphPtr g) {
    if (!g) throw std::invalid_argument("null graph");
    return RaagElement(std::move(g), {});
}

RaagElement RaagElement::canonicalize(GraphPtr g, std::span<const Letter> raw) {
    if (!g) throw std::invalid_argument("null graph");
    Word w(raw.begin(), raw.end());
    canonicalize_word(*g, w);
    return RaagElement(std::move(g), std::move(w));
}

RaagElement RaagElement::generator(const GraphPtr& g, std::string_view vertex, int sign) {
    if (!g) throw std::invalid_argument("null graph");
    Letter x{static_cast<std::uint16_t>(g->require_index(vertex)),
             static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
    return RaagElement(g, Word{x});
}

RaagElement RaagElement::multiply(const RaagElement& rhs) const {
    if (graph_ != rhs.graph_) throw std::invalid_argument("elements from different graphs");
    Word w = word_;
    w.insert(w.end(), rhs.word_.begin(), rhs.word_.end());
    canonicalize_word(*graph_, w);
    return RaagElement(graph_, std::move(w));
}

RaagElement RaagElement::inverse() const {
    Word w = inverse_word(word_);
    canonicalize_word(*graph_, w);
    return RaagElement(graph_, std::move(w));
}

bool RaagElement::equals(const RaagElement& rhs) const {
    if (graph_ != rhs.graph_) throw std::invalid_argument("elements from different graphs");
    return word_ == rhs.word_;
}

std::size_t geodesic_length(const RaagElement& x) { return x.length(); }

std::vector<long> evaluate_hom(const VertexLabeling& labeling, const RaagElement& x) {
    if (labeling.labels_by_index().size() != x.graph()->vertex_count()) {
        throw std::invalid_argument("labeling does not match element graph");
    }
    std::vector<long> image(static_cast<std::size_t>(labeling.dimension()), 0);
    for (Letter l : x.word()) {
        image[static_cast<std::size_t>(labeling.label_of(l.vertex)) - 1] += l.sign;
    }
    return image;
}

bool in_kernel(const VertexLabeling& labeling, const RaagElement& x) {
    auto image = evaluate_hom(labeling, x);
    for (long c : image) {
        if (c != 0) return false;
    }
    return true;
}

Word parse_word(const SimplicialGraph& g, std::string_view text) {
    Word out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        int sign = 1;
        std::string name = tok;
        if (auto pos = tok.find('^'); pos != std::string::npos) {
            if (tok.substr(pos) != "^-1") {
                throw std::invalid_argument("bad word token: " + tok);
            }
            sign = -1;
            name = tok.substr(0, pos);
        }
        out.push_back(Letter{static_cast<std::uint16_t>(g.require_index(name)),
                             static_cast<std::int8_t>(sign)});
    }
    return out;
}

std::string format_word(const SimplicialGraph& g, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += g.vertex_name(w[i].vertex);
        if (w[i].sign < 0) out += "^-1";
    }
    return out;
}

}  // namespace dlab
