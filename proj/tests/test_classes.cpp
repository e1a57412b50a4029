#include <catch2/catch_amalgamated.hpp>

#include "oldoind/canonical.hpp"
#include "oldoind/cotree.hpp"
#include "oldoind/families.hpp"
#include "oldoind/p4tidy.hpp"
#include "oldoind/spider.hpp"

using namespace oldoind;

TEST_CASE("cotree construction", "[classes]") {
    CHECK_FALSE(build_cotree(gen_path(4)).has_value());
    CHECK_FALSE(is_cograph(gen_cycle(5)));

    auto k3 = build_cotree(gen_complete(3));
    REQUIRE(k3.has_value());
    CHECK(k3->kind == Cotree::Kind::join);
    CHECK(k3->children.size() == 3);
    for (const auto& c : k3->children) CHECK(c.kind == Cotree::Kind::leaf);

    Graph g = join(disjoint_union(gen_complete(2), gen_path(3)), gen_edgeless(2));
    auto tree = build_cotree(g);
    REQUIRE(tree.has_value());
    CHECK(cotree_graph(*tree, g.order()) == g);
}

TEST_CASE("named generators", "[classes]") {
    CHECK(is_isomorphic(gen_r(1, 1), gen_complete(3)));
    CHECK(is_isomorphic(gen_r_star(1, 1), gen_path(3)));
    CHECK(is_isomorphic(gen_k1_join_cocktail_party(1), gen_path(3)));
    CHECK(gen_r(2, 3).order() == 8);
    CHECK(gen_named("cycle", {5}) == gen_cycle(5));
    CHECK_THROWS_AS(gen_named("cycle", {5, 2}), InvalidInput);
    CHECK_THROWS_AS(gen_named("unknown", {1}), InvalidInput);
    CHECK_THROWS_AS(gen_r(0, 1), InvalidInput);
}

TEST_CASE("R-family recognition", "[classes]") {
    auto k3 = recognize_r(gen_complete(3));
    REQUIRE(k3.has_value());
    CHECK((k3->l == 1 && k3->m == 1 && !k3->starred));

    auto p3 = recognize_r(gen_path(3));
    REQUIRE(p3.has_value());
    CHECK((p3->l == 1 && p3->m == 1 && p3->starred));

    CHECK_FALSE(recognize_r(gen_path(5)).has_value());
    CHECK(recognize_base(gen_path(5)) == "P5");

    // the deficient vertex of R*(2,1) is the independent missing its edge;
    // the partner depends on which of the two symmetric readings is taken
    Graph paw = gen_r_star(2, 1);
    auto rs21 = recognize_r(paw);
    REQUIRE(rs21.has_value());
    CHECK(rs21->starred);
    CHECK(rs21->deficient == 0);
    CHECK(rs21->independents.contains(rs21->deficient));
    CHECK(rs21->matching.contains(rs21->deficient_pair));
    CHECK_FALSE(paw.adjacent(rs21->deficient, rs21->deficient_pair));
}

TEST_CASE("base catalog", "[classes]") {
    CHECK(recognize_base(gen_complete(2)) == "K2");
    CHECK(recognize_base(gen_z()) == "Z");
    CHECK(recognize_base(complement(gen_path(5))) == "co_P5");
    CHECK(recognize_base(join(gen_z(), gen_complete(1))) == "Z_join_K1");
    CHECK_FALSE(recognize_base(gen_path(4)).has_value());
}

TEST_CASE("spider generation and recognition", "[classes]") {
    Graph fig_thin3 = gen_spider(SpiderKind::thin, 3, gen_complete(1));
    CHECK(fig_thin3.order() == 7);
    auto sp = find_spider_partition(fig_thin3);
    REQUIRE(sp.has_value());
    CHECK(sp->kind == SpiderKind::thin);
    CHECK(sp->weight == 3);
    CHECK(sp->head.count() == 1);

    CHECK(is_isomorphic(gen_spider(SpiderKind::thick, 2, Graph(0)), gen_spider(SpiderKind::thin, 2, Graph(0))));

    auto p4 = find_spider_partition(gen_path(4));
    REQUIRE(p4.has_value());
    CHECK(p4->kind == SpiderKind::thin);
    CHECK(p4->weight == 2);
    CHECK(p4->head.empty());

    CHECK_FALSE(find_spider_partition(gen_complete(4)).has_value());
    CHECK_FALSE(find_spider_partition(gen_cycle(5)).has_value());
}

TEST_CASE("quasi-spider recognition", "[classes]") {
    Graph z = gen_quasi_spider(SpiderKind::thin, 2, Graph(0), SpiderSide::independent, 0, TwinKind::adjacent);
    CHECK(z.order() == 5);
    CHECK(is_isomorphic(z, gen_z()));
    auto qz = find_quasi_spider(z);
    REQUIRE(qz.has_value());
    REQUIRE(qz->quasi.has_value());
    CHECK(qz->weight == 2);
    CHECK(qz->quasi->replacement == TwinKind::adjacent);
    CHECK(qz->quasi->original_side == SpiderSide::independent);

    Graph thick3 = gen_quasi_spider(SpiderKind::thick, 3, Graph(0), SpiderSide::clique, 1, TwinKind::nonadjacent);
    auto q = find_quasi_spider(thick3);
    REQUIRE(q.has_value());
    CHECK(q->weight == 3);
    CHECK((q->clique | q->independent | q->head) == VertexSet::full(thick3.order()));

    CHECK_FALSE(find_quasi_spider(gen_cycle(6)).has_value());
}

TEST_CASE("P4-tidy recognition", "[classes]") {
    CHECK(is_p4_tidy(gen_cycle(5)));
    CHECK(is_p4_tidy(gen_path(5)));
    CHECK(is_p4_tidy(complement(gen_path(5))));
    CHECK(is_p4_tidy(gen_spider(SpiderKind::thin, 3, gen_complete(1))));

    CHECK_FALSE(is_p4_tidy(gen_cycle(6)));
    CHECK_FALSE(is_p4_tidy_definitional(gen_cycle(6)));
    CHECK_FALSE(is_p4_tidy(gen_path(6)));

    for (const auto& g : enumerate_nonisomorphic(5))
        if (is_cograph(g)) CHECK(is_p4_tidy(g));

    CHECK_THROWS_AS(is_p4_tidy_definitional(Graph(9)), CapacityExceeded);
}
