#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oldoind/canonical.hpp"
#include "oldoind/families.hpp"
#include "oldoind/spider.hpp"

using namespace oldoind;

TEST_CASE("isomorphism by canonical form", "[canonical]") {
    Graph p5 = gen_path(5);
    Graph scrambled = relabel(p5, {3, 0, 4, 1, 2});
    CHECK(is_isomorphic(p5, scrambled));
    CHECK_FALSE(is_isomorphic(gen_cycle(5), p5));

    Graph z = gen_quasi_spider(SpiderKind::thin, 2, Graph(0), SpiderSide::independent, 0, TwinKind::adjacent);
    CHECK(is_isomorphic(z, gen_z()));

    CHECK_THROWS_AS(canonical_form(Graph(11)), CapacityExceeded);
}

TEST_CASE("canonical form is invariant under relabeling", "[canonical]") {
    std::mt19937 rng(7);
    for (const Graph& g : {gen_path(6), gen_cycle(6), join(gen_path(3), gen_complete(2))}) {
        std::string canon = canonical_form(g);
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        for (int i = 0; i < g.order(); ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int t = 0; t < 25; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabel(g, perm)) == canon);
        }
    }
}

TEST_CASE("find_isomorphism produces a certified bijection", "[canonical]") {
    Graph p5 = gen_path(5);
    Graph scrambled = relabel(p5, {4, 2, 0, 1, 3});
    auto iso = find_isomorphism(p5, scrambled);
    REQUIRE(iso.has_value());
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            CHECK(p5.adjacent(u, v) ==
                  scrambled.adjacent((*iso)[static_cast<std::size_t>(u)], (*iso)[static_cast<std::size_t>(v)]));
    CHECK_FALSE(find_isomorphism(gen_cycle(5), p5).has_value());
}

TEST_CASE("enumeration of isomorphism classes", "[canonical]") {
    CHECK(enumerate_nonisomorphic(1).size() == 1);
    CHECK(enumerate_nonisomorphic(4).size() == 11);
    CHECK(enumerate_nonisomorphic(5).size() == 34);
    CHECK(enumerate_nonisomorphic(3, true).size() == 2);
    CHECK(enumerate_nonisomorphic(6, true).size() == 112);
    CHECK_THROWS_AS(enumerate_nonisomorphic(8), CapacityExceeded);
    CHECK_THROWS_AS(enumerate_nonisomorphic(0), InvalidInput);
}
