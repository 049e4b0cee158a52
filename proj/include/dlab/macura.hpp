#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlab/engines.hpp"

namespace dlab {

// Freely reduced word in a rank-d free group; letters are +-i with 1 <= i <= d.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& raw, std::size_t d);
FreeWord free_multiply(const FreeWord& a, const FreeWord& b, std::size_t d);
FreeWord free_invert(const FreeWord& w);

// The defining automorphism pair of the free-by-cyclic groups below:
// Phi fixes x_1 and sends x_i to x_i x_(i-1)^-1; Psi is its inverse and sends
// x_i to x_i x_(i-1) ... x_1.
enum class AutoKind { Phi, Psi };

std::string to_string(AutoKind k);

FreeWord apply_phi(std::size_t d, const FreeWord& w);
FreeWord apply_psi(std::size_t d, const FreeWord& w);

// n-fold application, reducing between steps; negative n runs the inverse
FreeWord iterate_auto(AutoKind kind, std::size_t d, long n, const FreeWord& w);

struct GrowthEntry {
    AutoKind kind = AutoKind::Phi;
    long n = 1;
    int i = 1;
    long length = 0;
    long bound = 0;  // 2n^(i-1) for Phi, i n^(i-1) for Psi
};

struct GrowthTable {
    std::size_t d = 2;
    long n_max = 1;
    std::vector<GrowthEntry> entries;  // Phi block then Psi block, n asc, i asc

    long length_of(AutoKind kind, long n, int i) const;
};

GrowthTable growth_table(std::size_t d, long n_max);

// n * phi(n) with phi(n) = max image length over both automorphisms, powers
// up to n, and all generators (the power-0 image contributes 1)
long gersten_bound(const GrowthTable& table, long n);

// rows `auto,n,i,length,bound,ok`
std::string growth_csv(const GrowthTable& table);

// Element t^k w of the free-by-cyclic group
//   < x_1..x_d, t | t x_1 t^-1 = x_1, t x_i t^-1 = x_i x_(i-1)^-1 >
// in left-pushed normal form: the tail is a reduced free word.
struct FbcElement {
    long t = 0;
    FreeWord tail;
    std::size_t rank = 2;

    friend bool operator==(const FbcElement& a, const FbcElement& b) {
        return a.rank == b.rank && a.t == b.t && a.tail == b.tail;
    }
};

FbcElement gd_identity(std::size_t d);
FbcElement gd_generator_x(std::size_t d, int i, int sign = 1);
FbcElement gd_generator_t(std::size_t d, int sign = 1);

// (t^k w)(t^m v) = t^(k+m) c(w) v where c twists w by the automorphism power
// matching m; tails stay reduced
FbcElement gd_multiply(const FbcElement& a, const FbcElement& b);
FbcElement gd_invert(const FbcElement& a);

// the subgroup generated by x_1..x_d is exactly the zero-t slice
inline bool fd_membership(const FbcElement& x) { return x.t == 0; }

// Relators of the presentation < a_0..a_d | a_0 a_1 = a_1 a_0,
// a_i^-1 a_0 a_i = a_(i-1) >, pushed through a_0 -> t^-1, a_i -> t^-1 x_i.
// Every element returned must be the identity.
std::vector<FbcElement> gd_defining_relators(std::size_t d);

// Search engine over generators x_1..x_d, t. Keys serialize the normal form:
// 4 bytes of t exponent, then one signed byte per tail letter.
class GdEngine {
public:
    using Key = std::string;

    explicit GdEngine(std::size_t d);

    std::size_t rank() const { return d_; }
    Key identity() const { return pack(gd_identity(d_)); }
    std::size_t generator_count() const { return 2 * (d_ + 1); }
    std::string generator_label(std::size_t i) const;
    Key apply(const Key& k, std::size_t gen) const;
    Key multiply(const Key& a, const Key& b) const;
    Key invert(const Key& k) const;
    std::size_t hash(const Key& k) const;

    Key pack(const FbcElement& e) const;
    FbcElement unpack(const Key& k) const;
    static long t_exponent(const Key& k);

private:
    std::size_t d_;
};

// The free subgroup F_d through the ambient engine's keys. Lengths of members
// are reduced-word lengths, no search needed.
class FdSubgroupEngine {
public:
    using Key = GdEngine::Key;

    explicit FdSubgroupEngine(std::size_t d) : d_(d), base_(d) {}

    Key identity() const { return base_.identity(); }
    std::size_t generator_count() const { return 2 * d_; }
    std::string generator_label(std::size_t i) const;
    Key apply(const Key& k, std::size_t gen) const;
    Key multiply(const Key& a, const Key& b) const { return base_.multiply(a, b); }
    Key invert(const Key& k) const { return base_.invert(k); }
    std::size_t hash(const Key& k) const { return base_.hash(k); }
    long exact_length(const Key& k) const;  // throws on nonzero t exponent

private:
    std::size_t d_;
    GdEngine base_;
};

struct DistortionSeries;

// Distortion of F_d in G_d over generators {x_i} and {x_i, t}.
DistortionSeries fd_distortion(std::size_t d, int r_max, std::uint64_t budget = 5'000'000);

}  // namespace dlab
