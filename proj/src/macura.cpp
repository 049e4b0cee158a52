#include "dlab/macura.hpp"

#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "dlab/metric.hpp"

namespace dlab {

namespace {

void check_rank(std::size_t d) {
    if (d < 1 || d > 120) throw std::invalid_argument("rank out of range");
}

void push_reduced(FreeWord& w, int letter) {
    if (!w.empty() && w.back() == -letter) {
        w.pop_back();
    } else {
        w.push_back(letter);
    }
}

long ipow(long base, int exp) {
    long out = 1;
    for (int k = 0; k < exp; ++k) out *= base;
    return out;
}

}  // namespace

FreeWord free_reduce(const FreeWord& raw, std::size_t d) {
    check_rank(d);
    FreeWord out;
    out.reserve(raw.size());
    for (int letter : raw) {
        int idx = std::abs(letter);
        if (idx < 1 || static_cast<std::size_t>(idx) > d) {
            throw std::invalid_argument("letter index out of range: " + std::to_string(letter));
        }
        push_reduced(out, letter);
    }
    return out;
}

FreeWord free_multiply(const FreeWord& a, const FreeWord& b, std::size_t d) {
    FreeWord out = a;
    out.reserve(a.size() + b.size());
    for (int letter : b) push_reduced(out, letter);
    return free_reduce(out, d);  // revalidates indices; already reduced
}

FreeWord free_invert(const FreeWord& w) {
    FreeWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

std::string to_string(AutoKind k) { return k == AutoKind::Phi ? "phi" : "psi"; }

FreeWord apply_phi(std::size_t d, const FreeWord& w) {
    check_rank(d);
    FreeWord out;
    out.reserve(2 * w.size());
    for (int letter : w) {
        int i = std::abs(letter);
        if (static_cast<std::size_t>(i) > d) throw std::invalid_argument("letter exceeds rank");
        if (letter > 0) {
            push_reduced(out, i);
            if (i > 1) push_reduced(out, -(i - 1));
        } else {
            if (i > 1) push_reduced(out, i - 1);
            push_reduced(out, -i);
        }
    }
    return out;
}

FreeWord apply_psi(std::size_t d, const FreeWord& w) {
    check_rank(d);
    FreeWord out;
    for (int letter : w) {
        int i = std::abs(letter);
        if (static_cast<std::size_t>(i) > d) throw std::invalid_argument("letter exceeds rank");
        if (letter > 0) {
            for (int j = i; j >= 1; --j) push_reduced(out, j);
        } else {
            for (int j = 1; j <= i; ++j) push_reduced(out, -j);
        }
    }
    return out;
}

FreeWord iterate_auto(AutoKind kind, std::size_t d, long n, const FreeWord& w) {
    if (n < 0) {
        kind = kind == AutoKind::Phi ? AutoKind::Psi : AutoKind::Phi;
        n = -n;
    }
    FreeWord out = free_reduce(w, d);
    for (long k = 0; k < n; ++k) {
        out = kind == AutoKind::Phi ? apply_phi(d, out) : apply_psi(d, out);
    }
    return out;
}

long GrowthTable::length_of(AutoKind kind, long n, int i) const {
    for (const GrowthEntry& e : entries) {
        if (e.kind == kind && e.n == n && e.i == i) return e.length;
    }
    throw std::out_of_range("no growth entry for n=" + std::to_string(n) +
                            " i=" + std::to_string(i));
}

GrowthTable growth_table(std::size_t d, long n_max) {
    if (d < 2) throw std::invalid_argument("rank must be at least 2");
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    GrowthTable table;
    table.d = d;
    table.n_max = n_max;
    for (AutoKind kind : {AutoKind::Phi, AutoKind::Psi}) {
        // grow each generator image incrementally instead of restarting per n
        std::vector<FreeWord> image(d);
        for (std::size_t i = 0; i < d; ++i) image[i] = {static_cast<int>(i) + 1};
        for (long n = 1; n <= n_max; ++n) {
            for (std::size_t i = 0; i < d; ++i) {
                image[i] = kind == AutoKind::Phi ? apply_phi(d, image[i]) : apply_psi(d, image[i]);
                GrowthEntry e;
                e.kind = kind;
                e.n = n;
                e.i = static_cast<int>(i) + 1;
                e.length = static_cast<long>(image[i].size());
                e.bound = kind == AutoKind::Phi ? 2 * ipow(n, e.i - 1)
                                                : static_cast<long>(e.i) * ipow(n, e.i - 1);
                table.entries.push_back(e);
            }
        }
    }
    return table;
}

long gersten_bound(const GrowthTable& table, long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > table.n_max) throw std::out_of_range("n exceeds the tabulated range");
    long phi = 1;  // power 0 maps each generator to itself
    for (const GrowthEntry& e : table.entries) {
        if (e.n <= n && e.length > phi) phi = e.length;
    }
    return n * phi;
}

std::string growth_csv(const GrowthTable& table) {
    std::ostringstream os;
    os << "auto,n,i,length,bound,ok\n";
    for (const GrowthEntry& e : table.entries) {
        os << to_string(e.kind) << ',' << e.n << ',' << e.i << ',' << e.length << ',' << e.bound
           << ',' << (e.length <= e.bound ? 1 : 0) << '\n';
    }
    return os.str();
}

FbcElement gd_identity(std::size_t d) {
    check_rank(d);
    return FbcElement{0, {}, d};
}

FbcElement gd_generator_x(std::size_t d, int i, int sign) {
    check_rank(d);
    if (i < 1 || static_cast<std::size_t>(i) > d) throw std::invalid_argument("index out of range");
    return FbcElement{0, {sign >= 0 ? i : -i}, d};
}

FbcElement gd_generator_t(std::size_t d, int sign) {
    check_rank(d);
    return FbcElement{sign >= 0 ? 1 : -1, {}, d};
}

FbcElement gd_multiply(const FbcElement& a, const FbcElement& b) {
    if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
    FbcElement out;
    out.rank = a.rank;
    out.t = a.t + b.t;
    // move b's t block left through a's tail: w t^m = t^m Psi^m(w)
    FreeWord twisted = iterate_auto(AutoKind::Psi, a.rank, b.t, a.tail);
    out.tail = free_multiply(twisted, b.tail, a.rank);
    return out;
}

FbcElement gd_invert(const FbcElement& a) {
    FbcElement out;
    out.rank = a.rank;
    out.t = -a.t;
    out.tail = iterate_auto(AutoKind::Psi, a.rank, -a.t, free_invert(a.tail));
    return out;
}

std::vector<FbcElement> gd_defining_relators(std::size_t d) {
    check_rank(d);
    if (d < 2) throw std::invalid_argument("rank must be at least 2");
    auto a = [&](int i, int sign) {
        // a_0 -> t^-1, a_i -> t^-1 x_i
        FbcElement g = gd_generator_t(d, -1);
        if (i > 0) g = gd_multiply(g, gd_generator_x(d, i));
        return sign >= 0 ? g : gd_invert(g);
    };
    std::vector<FbcElement> out;
    // a_0 a_1 a_0^-1 a_1^-1
    out.push_back(gd_multiply(gd_multiply(a(0, 1), a(1, 1)), gd_multiply(a(0, -1), a(1, -1))));
    // a_i^-1 a_0 a_i a_(i-1)^-1 for 2 <= i <= d
    for (int i = 2; i <= static_cast<int>(d); ++i) {
        out.push_back(gd_multiply(gd_multiply(a(i, -1), a(0, 1)),
                                  gd_multiply(a(i, 1), a(i - 1, -1))));
    }
    return out;
}

GdEngine::GdEngine(std::size_t d) : d_(d) {
    check_rank(d);
    if (d > 120) throw std::invalid_argument("rank too large for byte-packed tails");
}

std::string GdEngine::generator_label(std::size_t i) const {
    if (i >= generator_count()) throw std::out_of_range("generator index");
    std::size_t pair = i / 2;
    std::string base = pair < d_ ? "x" + std::to_string(pair + 1) : "t";
    return i % 2 == 0 ? base : base + "^-1";
}

GdEngine::Key GdEngine::pack(const FbcElement& e) const {
    if (e.rank != d_) throw std::invalid_argument("rank mismatch");
    if (e.t < INT32_MIN || e.t > INT32_MAX) throw std::length_error("t exponent overflow");
    Key k(4 + e.tail.size(), '\0');
    auto t32 = static_cast<std::int32_t>(e.t);
    std::memcpy(k.data(), &t32, 4);
    for (std::size_t j = 0; j < e.tail.size(); ++j) {
        k[4 + j] = static_cast<char>(static_cast<std::int8_t>(e.tail[j]));
    }
    return k;
}

FbcElement GdEngine::unpack(const Key& k) const {
    if (k.size() < 4) throw std::invalid_argument("malformed key");
    FbcElement e;
    e.rank = d_;
    std::int32_t t32 = 0;
    std::memcpy(&t32, k.data(), 4);
    e.t = t32;
    e.tail.reserve(k.size() - 4);
    for (std::size_t j = 4; j < k.size(); ++j) {
        e.tail.push_back(static_cast<std::int8_t>(k[j]));
    }
    return e;
}

long GdEngine::t_exponent(const Key& k) {
    std::int32_t t32 = 0;
    std::memcpy(&t32, k.data(), 4);
    return t32;
}

GdEngine::Key GdEngine::apply(const Key& k, std::size_t gen) const {
    if (gen >= generator_count()) throw std::out_of_range("generator index");
    FbcElement e = unpack(k);
    std::size_t pair = gen / 2;
    int sign = gen % 2 == 0 ? 1 : -1;
    FbcElement g = pair < d_ ? gd_generator_x(d_, static_cast<int>(pair) + 1, sign)
                             : gd_generator_t(d_, sign);
    return pack(gd_multiply(e, g));
}

GdEngine::Key GdEngine::multiply(const Key& a, const Key& b) const {
    return pack(gd_multiply(unpack(a), unpack(b)));
}

GdEngine::Key GdEngine::invert(const Key& k) const { return pack(gd_invert(unpack(k))); }

std::size_t GdEngine::hash(const Key& k) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : k) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ull;
    }
    return mix_hash(h);
}

std::string FdSubgroupEngine::generator_label(std::size_t i) const {
    if (i >= generator_count()) throw std::out_of_range("generator index");
    std::string base = "x" + std::to_string(i / 2 + 1);
    return i % 2 == 0 ? base : base + "^-1";
}

FdSubgroupEngine::Key FdSubgroupEngine::apply(const Key& k, std::size_t gen) const {
    // same generator numbering as the ambient engine, minus the t pair
    return base_.apply(k, gen);
}

long FdSubgroupEngine::exact_length(const Key& k) const {
    if (GdEngine::t_exponent(k) != 0) {
        throw std::invalid_argument("element lies outside the free subgroup");
    }
    return static_cast<long>(k.size()) - 4;
}

static_assert(GroupEngine<GdEngine>);
static_assert(GroupEngine<FdSubgroupEngine>);
static_assert(HasExactLength<FdSubgroupEngine>);

DistortionSeries fd_distortion(std::size_t d, int r_max, std::uint64_t budget) {
    if (d < 2) throw std::invalid_argument("rank must be at least 2");
    GdEngine g(d);
    FdSubgroupEngine h(d);
    return distortion_series(g, std::function<bool(const GdEngine::Key&)>(
                                    [](const GdEngine::Key& k) { return GdEngine::t_exponent(k) == 0; }),
                             h, r_max, budget);
}

}  // namespace dlab
