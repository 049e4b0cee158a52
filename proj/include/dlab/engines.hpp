#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlab/graph.hpp"
#include "dlab/raag.hpp"

namespace dlab {

// A group presented operationally: canonical element keys plus a symmetrized
// generator list. Keys double as canonical forms, so key equality is element
// equality. apply(k, i) right-multiplies by generator i.
template <class E>
concept GroupEngine = requires(const E& e, const typename E::Key& k) {
    typename E::Key;
    { e.identity() } -> std::same_as<typename E::Key>;
    { e.generator_count() } -> std::convertible_to<std::size_t>;
    { e.generator_label(std::size_t{}) } -> std::convertible_to<std::string>;
    { e.apply(k, std::size_t{}) } -> std::same_as<typename E::Key>;
    { e.multiply(k, k) } -> std::same_as<typename E::Key>;
    { e.invert(k) } -> std::same_as<typename E::Key>;
    { e.hash(k) } -> std::convertible_to<std::size_t>;
};

// engines may additionally expose an exact length: long exact_length(Key)
template <class E>
concept HasExactLength = requires(const E& e, const typename E::Key& k) {
    { e.exact_length(k) } -> std::convertible_to<long>;
};

inline std::size_t mix_hash(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
}

// Right-angled Artin group over a graph. Keys pack the canonical word into a
// 128-bit integer, fixed bits per letter; capacity covers every desk-scale
// radius used here and overflow throws rather than truncating.
class RaagEngine {
public:
    using Key = unsigned __int128;

    explicit RaagEngine(std::shared_ptr<const SimplicialGraph> g);

    const SimplicialGraph& graph() const { return *graph_; }
    const std::shared_ptr<const SimplicialGraph>& graph_ptr() const { return graph_; }

    Key identity() const { return 0; }
    std::size_t generator_count() const { return 2 * graph_->vertex_count(); }
    std::string generator_label(std::size_t i) const;
    Letter generator_letter(std::size_t i) const {
        return Letter{static_cast<std::uint16_t>(i / 2), static_cast<std::int8_t>(i % 2 ? -1 : 1)};
    }

    Key pack(const Word& w) const;
    Word unpack(Key k) const;
    std::size_t word_length(Key k) const;

    Key apply(const Key& k, std::size_t gen) const;
    Key multiply(const Key& a, const Key& b) const;
    Key invert(const Key& k) const;
    std::size_t hash(const Key& k) const {
        return mix_hash(static_cast<std::uint64_t>(k)) ^
               (mix_hash(static_cast<std::uint64_t>(k >> 64)) * 0x9e3779b97f4a7c15ull);
    }

    Key from_element(const RaagElement& x) const { return pack(x.word()); }
    RaagElement to_element(Key k) const {
        return RaagElement::canonicalize(graph_, unpack(k));
    }

    std::vector<long> abelian_image(Key k, const VertexLabeling& labeling) const;

private:
    std::shared_ptr<const SimplicialGraph> graph_;
    unsigned bits_;
    std::size_t capacity_;
};

// Subgroup of a base group, generated by explicit elements. Generators come
// symmetrized in pairs (g, g^-1); elements keep the ambient key type, so
// subgroup searches and ambient searches can share targets.
template <GroupEngine Base>
class SubgroupEngine {
public:
    using Key = typename Base::Key;

    SubgroupEngine(const Base& base, std::vector<std::pair<std::string, Key>> generators)
        : base_(&base) {
        for (auto& [label, key] : generators) {
            labels_.push_back(label);
            gens_.push_back(key);
            labels_.push_back(label + "^-1");
            gens_.push_back(base.invert(key));
        }
    }

    const Base& base() const { return *base_; }
    Key identity() const { return base_->identity(); }
    std::size_t generator_count() const { return gens_.size(); }
    std::string generator_label(std::size_t i) const { return labels_.at(i); }
    Key apply(const Key& k, std::size_t gen) const { return base_->multiply(k, gens_.at(gen)); }
    Key multiply(const Key& a, const Key& b) const { return base_->multiply(a, b); }
    Key invert(const Key& k) const { return base_->invert(k); }
    std::size_t hash(const Key& k) const { return base_->hash(k); }

private:
    const Base* base_;
    std::vector<std::string> labels_;
    std::vector<Key> gens_;
};

// Z^d with an explicit generating list of integer vectors.
class ZdEngine {
public:
    using Key = std::uint64_t;  // one byte per coordinate, offset by 128

    ZdEngine(std::size_t d, std::vector<std::pair<std::string, std::vector<long>>> generators);

    std::size_t dimension() const { return d_; }
    Key identity() const { return pack(std::vector<long>(d_, 0)); }
    std::size_t generator_count() const { return gens_.size(); }
    std::string generator_label(std::size_t i) const { return labels_.at(i); }
    Key apply(const Key& k, std::size_t gen) const;
    Key multiply(const Key& a, const Key& b) const;
    Key invert(const Key& k) const;
    std::size_t hash(const Key& k) const { return mix_hash(k); }

    Key pack(const std::vector<long>& v) const;
    std::vector<long> unpack(Key k) const;

private:
    std::size_t d_;
    std::vector<std::string> labels_;
    std::vector<std::vector<long>> gens_;
};

// Free group of finite rank; canonical form is the reduced word. Lengths are
// exact without any search.
class FreeEngine {
public:
    using Key = std::uint64_t;

    explicit FreeEngine(std::size_t rank);

    std::size_t rank() const { return rank_; }
    Key identity() const { return 0; }
    std::size_t generator_count() const { return 2 * rank_; }
    std::string generator_label(std::size_t i) const;
    Key apply(const Key& k, std::size_t gen) const;
    Key multiply(const Key& a, const Key& b) const;
    Key invert(const Key& k) const;
    std::size_t hash(const Key& k) const { return mix_hash(k); }
    long exact_length(const Key& k) const { return static_cast<long>(unpack(k).size()); }

    // letters are +i / -i, 1-based
    Key pack(const std::vector<int>& w) const;
    std::vector<int> unpack(Key k) const;

private:
    std::size_t rank_;
    unsigned bits_;
    std::size_t capacity_;
};

}  // namespace dlab
