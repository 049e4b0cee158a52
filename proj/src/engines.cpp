#include "dlab/engines.hpp"

namespace dlab {

RaagEngine::RaagEngine(std::shared_ptr<const SimplicialGraph> g) : graph_(std::move(g)) {
    if (!graph_) throw std::invalid_argument("null graph");
    std::size_t codes = 2 * graph_->vertex_count();
    if (codes == 0) throw std::invalid_argument("empty graph");
    bits_ = std::bit_width(codes);  // codes 1..2V, 0 reserved for padding
    capacity_ = 128 / bits_;
}

std::string RaagEngine::generator_label(std::size_t i) const {
    Letter l = generator_letter(i);
    std::string out = graph_->vertex_name(l.vertex);
    if (l.sign < 0) out += "^-1";
    return out;
}

RaagEngine::Key RaagEngine::pack(const Word& w) const {
    if (w.size() > capacity_) {
        throw std::length_error("word of length " + std::to_string(w.size()) +
                                " exceeds packed key capacity " + std::to_string(capacity_));
    }
    Key k = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Key code = static_cast<Key>(w[i].vertex) * 2 + (w[i].sign < 0 ? 1 : 0) + 1;
        k |= code << (bits_ * i);
    }
    return k;
}

Word RaagEngine::unpack(Key k) const {
    Word w;
    const Key mask = (Key(1) << bits_) - 1;
    while (k != 0) {
        Key code = k & mask;
        w.push_back(Letter{static_cast<std::uint16_t>((code - 1) / 2),
                           static_cast<std::int8_t>((code - 1) % 2 ? -1 : 1)});
        k >>= bits_;
    }
    return w;
}

std::size_t RaagEngine::word_length(Key k) const {
    std::size_t n = 0;
    while (k != 0) {
        ++n;
        k >>= bits_;
    }
    return n;
}

RaagEngine::Key RaagEngine::apply(const Key& k, std::size_t gen) const {
    Word w = unpack(k);
    w.push_back(generator_letter(gen));
    canonicalize_word(*graph_, w);
    return pack(w);
}

RaagEngine::Key RaagEngine::multiply(const Key& a, const Key& b) const {
    Word w = unpack(a);
    Word rhs = unpack(b);
    w.insert(w.end(), rhs.begin(), rhs.end());
    canonicalize_word(*graph_, w);
    return pack(w);
}

RaagEngine::Key RaagEngine::invert(const Key& k) const {
    Word w = inverse_word(unpack(k));
    canonicalize_word(*graph_, w);
    return pack(w);
}

std::vector<long> RaagEngine::abelian_image(Key k, const VertexLabeling& labeling) const {
    std::vector<long> image(static_cast<std::size_t>(labeling.dimension()), 0);
    Word w = unpack(k);
    for (Letter l : w) {
        image[static_cast<std::size_t>(labeling.label_of(l.vertex)) - 1] += l.sign;
    }
    return image;
}

ZdEngine::ZdEngine(std::size_t d, std::vector<std::pair<std::string, std::vector<long>>> generators)
    : d_(d) {
    if (d == 0 || d > 8) throw std::invalid_argument("dimension must be in 1..8");
    for (auto& [label, vec] : generators) {
        if (vec.size() != d) throw std::invalid_argument("generator dimension mismatch: " + label);
        labels_.push_back(label);
        gens_.push_back(vec);
        std::vector<long> neg(vec);
        for (auto& c : neg) c = -c;
        labels_.push_back(label + "^-1");
        gens_.push_back(std::move(neg));
    }
    if (gens_.empty()) throw std::invalid_argument("no generators");
}

ZdEngine::Key ZdEngine::pack(const std::vector<long>& v) const {
    Key k = 0;
    for (std::size_t i = 0; i < d_; ++i) {
        long c = v[i];
        if (c < -127 || c > 127) throw std::length_error("coordinate exceeds packed range");
        k |= static_cast<Key>(static_cast<std::uint8_t>(c + 128)) << (8 * i);
    }
    return k;
}

std::vector<long> ZdEngine::unpack(Key k) const {
    std::vector<long> v(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        v[i] = static_cast<long>((k >> (8 * i)) & 0xff) - 128;
    }
    return v;
}

ZdEngine::Key ZdEngine::apply(const Key& k, std::size_t gen) const {
    auto v = unpack(k);
    const auto& g = gens_.at(gen);
    for (std::size_t i = 0; i < d_; ++i) v[i] += g[i];
    return pack(v);
}

ZdEngine::Key ZdEngine::multiply(const Key& a, const Key& b) const {
    auto v = unpack(a);
    auto w = unpack(b);
    for (std::size_t i = 0; i < d_; ++i) v[i] += w[i];
    return pack(v);
}

ZdEngine::Key ZdEngine::invert(const Key& k) const {
    auto v = unpack(k);
    for (auto& c : v) c = -c;
    return pack(v);
}

FreeEngine::FreeEngine(std::size_t rank) : rank_(rank) {
    if (rank == 0) throw std::invalid_argument("rank must be positive");
    bits_ = std::bit_width(2 * rank);
    capacity_ = 64 / bits_;
}

std::string FreeEngine::generator_label(std::size_t i) const {
    std::string out = "x" + std::to_string(i / 2 + 1);
    if (i % 2) out += "^-1";
    return out;
}

FreeEngine::Key FreeEngine::pack(const std::vector<int>& w) const {
    if (w.size() > capacity_) throw std::length_error("free word exceeds packed key capacity");
    Key k = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        int letter = w[i];
        std::size_t idx = static_cast<std::size_t>(letter > 0 ? letter : -letter);
        if (idx == 0 || idx > rank_) throw std::invalid_argument("free letter out of range");
        Key code = 2 * (idx - 1) + (letter < 0 ? 1 : 0) + 1;
        k |= code << (bits_ * i);
    }
    return k;
}

std::vector<int> FreeEngine::unpack(Key k) const {
    std::vector<int> w;
    const Key mask = (Key(1) << bits_) - 1;
    while (k != 0) {
        Key code = (k & mask) - 1;
        int letter = static_cast<int>(code / 2) + 1;
        w.push_back(code % 2 ? -letter : letter);
        k >>= bits_;
    }
    return w;
}

FreeEngine::Key FreeEngine::apply(const Key& k, std::size_t gen) const {
    auto w = unpack(k);
    int letter = static_cast<int>(gen / 2) + 1;
    if (gen % 2) letter = -letter;
    if (!w.empty() && w.back() == -letter) {
        w.pop_back();
    } else {
        w.push_back(letter);
    }
    return pack(w);
}

FreeEngine::Key FreeEngine::multiply(const Key& a, const Key& b) const {
    auto w = unpack(a);
    for (int letter : unpack(b)) {
        if (!w.empty() && w.back() == -letter) {
            w.pop_back();
        } else {
            w.push_back(letter);
        }
    }
    return pack(w);
}

FreeEngine::Key FreeEngine::invert(const Key& k) const {
    auto w = unpack(k);
    std::vector<int> out;
    out.reserve(w.size());
    for (std::size_t i = w.size(); i-- > 0;) out.push_back(-w[i]);
    return pack(out);
}

}  // namespace dlab
