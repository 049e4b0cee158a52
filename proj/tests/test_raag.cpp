#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <random>
#include <stdexcept>

#include "dlab/graph.hpp"
#include "dlab/raag.hpp"
#include "oracles.hpp"

using namespace dlab;

namespace {

RaagElement::GraphPtr p3() {
    return std::make_shared<SimplicialGraph>(std::vector<std::string>{"a", "b", "c"},
                                             std::vector<std::pair<std::string, std::string>>{
                                                 {"a", "b"}, {"b", "c"}});
}

RaagElement::GraphPtr free2() {
    return std::make_shared<SimplicialGraph>(std::vector<std::string>{"a", "b"},
                                             std::vector<std::pair<std::string, std::string>>{});
}

RaagElement::GraphPtr zsq() {
    return std::make_shared<SimplicialGraph>(std::vector<std::string>{"a", "b"},
                                             std::vector<std::pair<std::string, std::string>>{
                                                 {"a", "b"}});
}

RaagElement elem(const RaagElement::GraphPtr& g, std::string_view text) {
    Word w = parse_word(*g, text);
    return RaagElement::canonicalize(g, w);
}

}  // namespace

TEST_CASE("free cancellation") {
    auto g = free2();
    CHECK(elem(g, "a a^-1").word().empty());
    CHECK(format_word(*g, elem(g, "a b b^-1 a").word()) == "a a");
    CHECK(format_word(*g, elem(g, "a b a^-1").word()) == "a b a^-1");
}

TEST_CASE("commutation reorders into shortlex least form") {
    auto g = p3();
    // b commutes past both ends; a and c do not commute with each other
    CHECK(format_word(*g, elem(g, "c a b").word()) == "b c a");
    CHECK(format_word(*g, elem(g, "c a").word()) == "c a");
    CHECK(format_word(*g, elem(g, "b a").word()) == "a b");
    CHECK(format_word(*g, elem(g, "c b c^-1").word()) == "b");
    auto z = zsq();
    CHECK(format_word(*z, elem(z, "a b a^-1").word()) == "b");
    CHECK(format_word(*z, elem(z, "b a").word()) == "a b");
}

TEST_CASE("sign order puts positive letters first at equal vertex") {
    auto z = zsq();
    CHECK(format_word(*z, elem(z, "a^-1 b a").word()) == "b");
    CHECK(format_word(*z, elem(z, "b^-1 a").word()) == "a b^-1");
}

TEST_CASE("group laws hold on pseudorandom words") {
    auto g = p3();
    std::mt19937 rng(20260815);
    std::uniform_int_distribution<int> vert(0, 2), sign(0, 1), len(0, 6);
    auto random_elem = [&] {
        Word w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            w.push_back(Letter{static_cast<std::uint16_t>(vert(rng)),
                               static_cast<std::int8_t>(sign(rng) ? 1 : -1)});
        }
        return RaagElement::canonicalize(g, w);
    };
    RaagElement e = RaagElement::identity(g);
    for (int trial = 0; trial < 200; ++trial) {
        RaagElement x = random_elem(), y = random_elem(), z = random_elem();
        CHECK(x.multiply(y).multiply(z).equals(x.multiply(y.multiply(z))));
        CHECK(x.multiply(x.inverse()).equals(e));
        CHECK(x.inverse().length() == x.length());
        CHECK(x.multiply(e).equals(x));
    }
}

TEST_CASE("generator factory validates names") {
    auto g = p3();
    CHECK(format_word(*g, RaagElement::generator(g, "b", -1).word()) == "b^-1");
    CHECK_THROWS_AS(RaagElement::generator(g, "q"), std::invalid_argument);
}

TEST_CASE("word parsing round trips and rejects junk") {
    auto g = p3();
    Word w = parse_word(*g, "a b^-1 c a^-1");
    CHECK(format_word(*g, w) == "a b^-1 c a^-1");
    CHECK(parse_word(*g, "").empty());
    CHECK_THROWS_AS(parse_word(*g, "a q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(*g, "a^2"), std::invalid_argument);
}

TEST_CASE("abelianization and kernel membership") {
    auto g = RaagElement::GraphPtr(new SimplicialGraph(
        {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
    VertexLabeling lab(*g, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
    CHECK(evaluate_hom(lab, elem(g, "a b c^-1")) == std::vector<long>{1});
    CHECK(in_kernel(lab, elem(g, "a b^-1")));
    CHECK_FALSE(in_kernel(lab, elem(g, "a")));
    VertexLabeling lab2(*g, {{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}});
    CHECK(evaluate_hom(lab2, elem(g, "a b b d^-1")) == std::vector<long>{1, 1});
}

TEST_CASE("normal form matches the word-closure oracle on all small graphs") {
    for (const SimplicialGraph& g : oracle::all_graphs_up_to(4)) {
        auto gp = std::make_shared<SimplicialGraph>(g);
        oracle::WordClosure closure(g, 4);
        for (std::size_t id = 0; id < closure.word_count(); ++id) {
            const std::string& enc = closure.word_at(id);
            Word w = oracle::decode_word(enc);
            RaagElement x = RaagElement::canonicalize(gp, w);
            REQUIRE(oracle::encode_word(x.word()) == closure.canonical(enc));
            REQUIRE(geodesic_length(x) == closure.canonical(enc).size());
        }
    }
}

TEST_CASE("equality of elements mirrors oracle classes") {
    auto g = p3();
    oracle::WordClosure closure(*g, 4);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, closure.word_count() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const std::string& wa = closure.word_at(pick(rng));
        const std::string& wb = closure.word_at(pick(rng));
        RaagElement a = RaagElement::canonicalize(g, oracle::decode_word(wa));
        RaagElement b = RaagElement::canonicalize(g, oracle::decode_word(wb));
        REQUIRE(a.equals(b) == closure.same_class(wa, wb));
    }
}
