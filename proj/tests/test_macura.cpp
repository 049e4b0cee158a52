#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "dlab/macura.hpp"
#include "dlab/metric.hpp"

using namespace dlab;

namespace {

FreeWord random_word(std::mt19937& rng, std::size_t rank, int max_len) {
    std::uniform_int_distribution<int> letter(1, static_cast<int>(rank));
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> len(0, max_len);
    FreeWord w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(sign(rng) ? letter(rng) : -letter(rng));
    return free_reduce(w, rank);
}

FbcElement random_gd(std::mt19937& rng, std::size_t rank) {
    std::uniform_int_distribution<long> t(-3, 3);
    return FbcElement{t(rng), random_word(rng, rank, 6), rank};
}

}  // namespace

TEST_CASE("free reduction and inversion") {
    CHECK(free_reduce({1, -1}, 2).empty());
    CHECK(free_reduce({1, 2, -2, -1, 1}, 2) == FreeWord{1});
    CHECK(free_multiply({1, 2}, {-2, 1}, 2) == FreeWord{1, 1});
    CHECK(free_invert({1, -2, 1}) == FreeWord{-1, 2, -1});
    CHECK_THROWS_AS(free_reduce({0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(free_reduce({3}, 2), std::invalid_argument);
}

TEST_CASE("the defining automorphism and its inverse") {
    CHECK(apply_phi(3, {1}) == FreeWord{1});
    CHECK(apply_phi(3, {2}) == FreeWord{2, -1});
    CHECK(apply_phi(3, {-2}) == FreeWord{1, -2});
    CHECK(apply_phi(3, {3}) == FreeWord{3, -2});
    CHECK(apply_psi(3, {2}) == FreeWord{2, 1});
    CHECK(apply_psi(3, {3}) == FreeWord{3, 2, 1});
    CHECK(apply_psi(3, {-3}) == FreeWord{-1, -2, -3});
    // inverse on both sides
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        FreeWord w = random_word(rng, 4, 8);
        CHECK(apply_phi(4, apply_psi(4, w)) == w);
        CHECK(apply_psi(4, apply_phi(4, w)) == w);
    }
}

TEST_CASE("iterating the automorphisms") {
    for (long n = 0; n <= 8; ++n) {
        FreeWord img = iterate_auto(AutoKind::Phi, 2, n, {2});
        REQUIRE(img.size() == static_cast<std::size_t>(n) + 1);
        CHECK(img[0] == 2);
        for (std::size_t i = 1; i < img.size(); ++i) CHECK(img[i] == -1);
    }
    CHECK(iterate_auto(AutoKind::Psi, 2, 2, {2}) == FreeWord{2, 1, 1});
    // negative exponents swap the automorphism
    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        FreeWord w = random_word(rng, 3, 6);
        CHECK(iterate_auto(AutoKind::Phi, 3, -2, w) == iterate_auto(AutoKind::Psi, 3, 2, w));
        CHECK(iterate_auto(AutoKind::Psi, 3, -5, w) == iterate_auto(AutoKind::Phi, 3, 5, w));
    }
}

TEST_CASE("growth table stays inside the stated bounds") {
    for (std::size_t d = 2; d <= 5; ++d) {
        GrowthTable t = growth_table(d, 12);
        CHECK(t.d == d);
        CHECK(t.n_max == 12);
        CHECK(t.entries.size() == 2 * 12 * d);
        for (const GrowthEntry& e : t.entries) {
            INFO("d=", d, " n=", e.n, " i=", e.i);
            REQUIRE(e.length <= e.bound);
        }
    }
    GrowthTable t2 = growth_table(2, 12);
    for (long n = 1; n <= 12; ++n) {
        CHECK(t2.length_of(AutoKind::Phi, n, 2) == n + 1);
        CHECK(t2.length_of(AutoKind::Psi, n, 2) == n + 1);
    }
    CHECK_THROWS_AS(growth_table(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(growth_table(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(t2.length_of(AutoKind::Phi, 13, 2), std::out_of_range);
}

TEST_CASE("growth csv format") {
    GrowthTable t = growth_table(2, 2);
    CHECK(growth_csv(t) ==
          "auto,n,i,length,bound,ok\n"
          "phi,1,1,1,2,1\n"
          "phi,1,2,2,2,1\n"
          "phi,2,1,1,2,1\n"
          "phi,2,2,3,4,1\n"
          "psi,1,1,1,1,1\n"
          "psi,1,2,2,2,1\n"
          "psi,2,1,1,1,1\n"
          "psi,2,2,3,4,1\n");
}

TEST_CASE("combinatorial area bound grows with the word") {
    GrowthTable t = growth_table(3, 10);
    long prev = 0;
    for (long n = 1; n <= 10; ++n) {
        long b = gersten_bound(t, n);
        CHECK(b >= n);
        CHECK(b >= prev);
        prev = b;
    }
    CHECK_THROWS_AS(gersten_bound(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(gersten_bound(t, 11), std::out_of_range);
}

TEST_CASE("semidirect product multiplication") {
    // t x t^-1 = phi(x), realised through the normal form t^k w
    for (std::size_t d = 2; d <= 4; ++d) {
        for (int i = 1; i <= static_cast<int>(d); ++i) {
            FbcElement lhs = gd_multiply(
                gd_multiply(gd_generator_t(d, 1), gd_generator_x(d, i, 1)),
                gd_generator_t(d, -1));
            FbcElement rhs{0, apply_phi(d, {i}), d};
            INFO("d=", d, " i=", i);
            REQUIRE(lhs == rhs);
        }
    }
    // and symmetrically t^-1 x t = psi(x)
    FbcElement conj = gd_multiply(
        gd_multiply(gd_generator_t(3, -1), gd_generator_x(3, 3, 1)), gd_generator_t(3, 1));
    CHECK(conj == FbcElement{0, apply_psi(3, {3}), 3});
}

TEST_CASE("group laws in the extension") {
    std::mt19937 rng(17);
    for (std::size_t d = 2; d <= 5; ++d) {
        FbcElement e = gd_identity(d);
        for (int trial = 0; trial < 60; ++trial) {
            FbcElement x = random_gd(rng, d), y = random_gd(rng, d), z = random_gd(rng, d);
            REQUIRE(gd_multiply(gd_multiply(x, y), z) == gd_multiply(x, gd_multiply(y, z)));
            REQUIRE(gd_multiply(x, gd_invert(x)) == e);
            REQUIRE(gd_multiply(gd_invert(x), x) == e);
        }
    }
}

TEST_CASE("defining relators collapse to the identity") {
    for (std::size_t d = 2; d <= 5; ++d) {
        auto relators = gd_defining_relators(d);
        CHECK(relators.size() == d);
        for (std::size_t i = 0; i < relators.size(); ++i) {
            INFO("d=", d, " i=", i);
            REQUIRE(relators[i] == gd_identity(d));
        }
    }
}

TEST_CASE("fiber membership is zero stable letter exponent") {
    CHECK(fd_membership(FbcElement{0, {1, 2}, 2}));
    CHECK_FALSE(fd_membership(FbcElement{1, {}, 2}));
}

TEST_CASE("engine keys round trip") {
    GdEngine e(3);
    CHECK(e.generator_count() == 8);
    CHECK(e.generator_label(0) == "x1");
    CHECK(e.generator_label(1) == "x1^-1");
    CHECK(e.generator_label(6) == "t");
    CHECK(e.generator_label(7) == "t^-1");
    FbcElement x{-2, {3, -1, 2}, 3};
    CHECK(e.unpack(e.pack(x)) == x);
    CHECK(GdEngine::t_exponent(e.pack(x)) == -2);
    GdEngine::Key k = e.identity();
    k = e.apply(k, 6);               // t
    k = e.apply(k, 4);               // x3
    k = e.apply(k, 7);               // t^-1
    CHECK(e.unpack(k) == FbcElement{0, apply_phi(3, {3}), 3});
    CHECK(e.multiply(k, e.invert(k)) == e.identity());
}

TEST_CASE("fiber subgroup engine exposes exact lengths") {
    FdSubgroupEngine h(2);
    CHECK(h.generator_count() == 4);
    CHECK(h.generator_label(2) == "x2");
    GdEngine base(2);
    GdEngine::Key k = h.identity();
    k = h.apply(k, 0);  // x1
    k = h.apply(k, 2);  // x2
    CHECK(h.exact_length(k) == 2);
    CHECK_THROWS_AS(h.exact_length(base.apply(base.identity(), 4)), std::invalid_argument);

    Ball<FdSubgroupEngine> b = ball(h, 2);
    CHECK(b.order.size() == 17);
}

TEST_CASE("fiber distortion series on the rank two extension") {
    DistortionSeries s = fd_distortion(2, 6);
    REQUIRE(s.points.size() == 7);
    long expected[] = {0, 1, 2, 3, 4, 6, 8};
    for (int r = 0; r <= 6; ++r) {
        CAPTURE(r);
        CHECK(s.points[r].exact);
        CHECK(s.points[r].value == expected[r]);
    }
    CHECK_THROWS_AS(fd_distortion(1, 3), std::invalid_argument);
}
