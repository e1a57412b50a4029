#include <catch2/catch_amalgamated.hpp>

#include "oldoind/families.hpp"
#include "oldoind/graph.hpp"
#include "oldoind/x3c.hpp"

using namespace oldoind;

TEST_CASE("from_edges builds simple graphs", "[graph]") {
    Graph k2 = from_edges(2, {{0, 1}});
    CHECK(k2.adjacent(0, 1));
    CHECK(k2.edge_count() == 1);

    Graph empty3 = from_edges(3, {});
    CHECK(empty3.edge_count() == 0);

    Graph p5 = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(p5 == gen_path(5));

    // duplicate edges collapse
    Graph dup = from_edges(2, {{0, 1}, {1, 0}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(from_edges(3, {{0, 3}}), InvalidInput);
    CHECK_THROWS_AS(from_edges(3, {{1, 1}}), InvalidInput);
    CHECK_THROWS_AS(Graph(65), CapacityExceeded);
}

TEST_CASE("complement", "[graph]") {
    CHECK(complement(gen_complete(3)) == gen_edgeless(3));
    Graph p5 = gen_path(5);
    CHECK(complement(complement(p5)) == p5);

    // the complement of a universal vertex over a cocktail party is an
    // isolated vertex beside the matching edges
    for (int m : {1, 2, 3}) {
        Graph c = complement(gen_k1_join_cocktail_party(m));
        CHECK(c.edge_count() == m);
        CHECK(c.degree(0) == 0);
        for (int p = 0; p < m; ++p) CHECK(c.adjacent(1 + 2 * p, 2 + 2 * p));
    }
}

TEST_CASE("disjoint union and join", "[graph]") {
    Graph p3 = join(gen_complete(1), gen_edgeless(2));
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(0) == 2);

    Graph two_k2 = disjoint_union(gen_complete(2), gen_complete(2));
    CHECK(two_k2.order() == 4);
    CHECK(two_k2.edge_count() == 2);

    Graph a = gen_complete(2), b = gen_complete(3);
    CHECK(complement(join(a, b)) == disjoint_union(complement(a), complement(b)));

    CHECK_THROWS_AS(disjoint_union(Graph(40), Graph(40)), CapacityExceeded);
}

TEST_CASE("induced subgraph", "[graph]") {
    Graph p5 = gen_path(5);
    auto sub = induced_subgraph(p5, VertexSet::of({0, 1, 2}));
    CHECK(sub.graph == gen_path(3));
    CHECK(sub.to_old == std::vector<int>{0, 1, 2});

    auto whole = induced_subgraph(p5, VertexSet::full(5));
    CHECK(whole.graph == p5);

    auto pair = induced_subgraph(gen_complete(4), VertexSet::of({1, 3}));
    CHECK(pair.graph == gen_complete(2));

    CHECK_THROWS_AS(induced_subgraph(p5, VertexSet()), InvalidInput);
}

TEST_CASE("complementary prism", "[graph]") {
    CHECK(complementary_prism(gen_complete(1)) == gen_complete(2));

    Graph pk2 = complementary_prism(gen_complete(2));
    CHECK(pk2.order() == 4);
    CHECK(pk2.edge_count() == 3);
    // path 2-0-1-3
    CHECK(pk2.adjacent(0, 1));
    CHECK(pk2.adjacent(0, 2));
    CHECK(pk2.adjacent(1, 3));

    Graph pp3 = complementary_prism(gen_path(3));
    CHECK(pp3.degree(0) == 2);
    CHECK(pp3.degree(1) == 3);
    CHECK(pp3.degree(2) == 2);
    for (int v = 0; v < 3; ++v) CHECK(pp3.degree(v + 3) == 3 - gen_path(3).degree(v));

    CHECK_THROWS_AS(complementary_prism(Graph(33)), CapacityExceeded);
}

TEST_CASE("components and anticomponents", "[graph]") {
    Graph two_k2 = disjoint_union(gen_complete(2), gen_complete(2));
    auto parts = components(two_k2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == VertexSet::of({0, 1}));
    CHECK(parts[1] == VertexSet::of({2, 3}));

    auto anti = anticomponents(gen_k1_join_cocktail_party(2));
    REQUIRE(anti.size() == 3);
    CHECK(anti[0].count() == 1);
    CHECK(anti[1].count() == 2);
    CHECK(anti[2].count() == 2);

    CHECK(components(gen_path(5)).size() == 1);
    CHECK(is_connected(gen_path(5)));
    CHECK_FALSE(is_connected(two_k2));
    CHECK(is_co_connected(gen_path(4)));
}

TEST_CASE("girth", "[graph]") {
    CHECK(girth(gen_cycle(5)) == std::optional<int>(5));
    CHECK_FALSE(girth(gen_path(5)).has_value());
    CHECK(girth(gen_complete(4)) == std::optional<int>(3));

    X3CInstance inst;
    inst.ground = 6;
    inst.triples = {{0, 1, 3}, {1, 3, 5}, {2, 4, 5}};
    CHECK(girth(build_gadget(inst).graph) == std::optional<int>(6));
}

TEST_CASE("universal vertices", "[graph]") {
    CHECK(universal_vertices(gen_k1_join_cocktail_party(2)) == std::vector<int>{0});
    CHECK(universal_vertices(gen_complete(3)).size() == 3);
    CHECK(universal_vertices(gen_path(4)).empty());
}
