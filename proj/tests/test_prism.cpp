#include <catch2/catch_amalgamated.hpp>

#include "oldoind/families.hpp"
#include "oldoind/prism.hpp"
#include "oldoind/solver.hpp"

using namespace oldoind;

TEST_CASE("universal base of the prism decider", "[prism]") {
    for (int m : {1, 2, 3, 4}) {
        Graph g = gen_k1_join_cocktail_party(m);
        auto w = prism_cograph_oldoind(g);
        REQUIRE(w.has_value());
        CHECK(w->derivation.kind == "universal-base");
        CHECK(w->s0 == VertexSet::of({0}));
        CHECK(w->s1bar.count() == g.order());  // the whole complement copy
        CHECK(verify_oldoind(complementary_prism(g), w->full()).valid);
    }
    CHECK(prism_cograph_oldoind(gen_complete(1)).has_value());
    CHECK_FALSE(prism_cograph_oldoind(gen_complete(2)).has_value());
    CHECK_FALSE(prism_cograph_oldoind(gen_complete(3)).has_value());
}

TEST_CASE("two-vertex structure case", "[prism]") {
    // complement components R(2,2), R*(1,1), K2: eleven vertices
    Graph g = complement(disjoint_union(disjoint_union(gen_r(2, 2), gen_r_star(1, 1)), gen_complete(2)));
    auto w = prism_cograph_oldoind(g);
    REQUIRE(w.has_value());
    CHECK(w->derivation.kind == "size2-structure");
    CHECK(w->s0.count() == 2);
    CHECK(w->s1bar.count() == 8);

    auto audit = audit_prism_set(g, *w);
    CHECK(audit.hypotheses_met);
    CHECK(audit.all_passed());
}

TEST_CASE("structure case over two triangles", "[prism]") {
    Graph g = complement(disjoint_union(gen_complete(3), gen_complete(3)));  // K_{3,3}
    auto w = prism_cograph_oldoind(g);
    REQUIRE(w.has_value());
    CHECK(w->s0.count() == 2);
    CHECK(w->s1bar.count() == 4);
}

TEST_CASE("direct two-vertex constructor", "[prism]") {
    // one pick from each triangle, all four remaining complement vertices
    Graph k33 = complement(disjoint_union(gen_complete(3), gen_complete(3)));
    PrismWitness w = prism_size2_witness(k33);
    CHECK(w.s0 == VertexSet::of({0, 3}));
    CHECK(w.s1bar.count() == 4);

    Graph fig = complement(disjoint_union(disjoint_union(gen_r(2, 2), gen_r_star(1, 1)), gen_complete(2)));
    PrismWitness wf = prism_size2_witness(fig);
    CHECK(wf.s0.count() == 2);
    CHECK(wf.s1bar.count() == 8);

    Graph mixed = complement(disjoint_union(gen_r(2, 1), gen_r(1, 1)));
    CHECK(prism_size2_witness(mixed).s0.count() == 2);

    CHECK_THROWS_AS(prism_size2_witness(gen_path(3)), ClassMismatch);      // universal-base shape
    CHECK_THROWS_AS(prism_size2_witness(gen_complete(3)), ClassMismatch);  // singleton components
}

TEST_CASE("structure case with a deficient part", "[prism]") {
    for (const Graph& extra : {gen_r(2, 1), gen_r_star(2, 1)}) {
        Graph g = complement(disjoint_union(extra, gen_complete(3)));
        auto w = prism_cograph_oldoind(g);
        REQUIRE(w.has_value());
        CHECK(w->derivation.kind == "size2-structure");
        CHECK(verify_oldoind(complementary_prism(g), w->full()).valid);
    }
}

TEST_CASE("peel recursion and its trace", "[prism]") {
    Graph level1 = complement(disjoint_union(gen_path(3), gen_complete(2)));
    auto w1 = prism_cograph_oldoind(level1);
    REQUIRE(w1.has_value());
    CHECK(w1->derivation.kind == "peel");
    REQUIRE_FALSE(w1->derivation.inner.empty());
    CHECK(w1->derivation.inner.front().kind == "universal-base");
    CHECK(w1->s0.count() == 3);

    // peel again: the previous graph becomes the recursive component
    Graph level2 = complement(disjoint_union(level1, gen_complete(2)));
    auto w2 = prism_cograph_oldoind(level2);
    REQUIRE(w2.has_value());
    CHECK(w2->derivation.kind == "peel");
    REQUIRE_FALSE(w2->derivation.inner.empty());
    CHECK(w2->derivation.inner.front().kind == "peel");

    // peeling through an R(1,m) component; the recursive part is chosen so
    // that no other branch can claim the graph first
    Graph with_r = complement(disjoint_union(gen_k1_join_cocktail_party(2), gen_r(1, 2)));
    auto w3 = prism_cograph_oldoind(with_r);
    REQUIRE(w3.has_value());
    CHECK(w3->derivation.kind == "peel");
    CHECK(w3->derivation.f_type == "R_1_m");
    CHECK(w3->derivation.f_m == 2);
    REQUIRE_FALSE(w3->derivation.inner.empty());
    CHECK(w3->derivation.inner.front().kind == "universal-base");
}

TEST_CASE("prism decider preconditions", "[prism]") {
    CHECK_THROWS_AS(prism_cograph_oldoind(disjoint_union(gen_complete(2), gen_complete(2))), ClassMismatch);
    CHECK_THROWS_AS(prism_cograph_oldoind(gen_path(5)), ClassMismatch);
    CHECK_THROWS_AS(prism_cograph_oldoind(gen_path(33)), CapacityExceeded);
}

TEST_CASE("witness halves live on their own sides", "[prism]") {
    Graph g = complement(disjoint_union(gen_complete(3), gen_complete(3)));
    auto w = prism_cograph_oldoind(g);
    REQUIRE(w.has_value());
    int n = g.order();
    CHECK((w->s0.bits >> n) == 0);
    CHECK((w->s1bar.bits & ((std::uint64_t{1} << n) - 1)) == 0);
}

TEST_CASE("audit reports unmet hypotheses", "[prism]") {
    Graph g = gen_k1_join_cocktail_party(1);  // a solitary complement vertex
    auto w = prism_cograph_oldoind(g);
    REQUIRE(w.has_value());
    auto audit = audit_prism_set(g, *w);
    CHECK_FALSE(audit.hypotheses_met);
    CHECK(audit.clauses.empty());

    PrismWitness bogus = *w;
    bogus.s0 = VertexSet::of({1});
    CHECK_THROWS_AS(audit_prism_set(g, bogus), InvalidInput);
}

TEST_CASE("structure conditions decide acceptance, oracle-confirmed", "[prism]") {
    auto K2 = gen_complete(2);
    auto K3 = gen_r(1, 1);
    struct Case {
        std::vector<Graph> parts;
        bool expect;
    };
    const std::vector<Case> cases = {
        {{gen_r(2, 1), gen_r(2, 1)}, false},                          // two l=2 parts
        {{gen_r(2, 1), K3, K3}, false},                               // l=2 part beside t'=3
        {{gen_r_star(1, 1), gen_r_star(1, 1), gen_r_star(1, 1)}, false},  // three special parts
        {{gen_r_star(1, 1), gen_r_star(1, 1), gen_r(1, 2)}, true},
        {{K3, K3, K3}, true},
        {{K3, K3, K3, K3}, false},                                    // four big parts
        {{gen_r(2, 2), K3, K2}, true},
        {{gen_r(2, 2), K3, K3}, false},
        {{gen_r(1, 3), gen_r(1, 2)}, true},
        {{gen_r_star(2, 1), gen_r_star(1, 1)}, true},
        {{gen_r_star(2, 1), gen_r_star(1, 1), K3}, false},
        {{K3, K2}, false},                                            // single big part
    };
    for (const auto& c : cases) {
        Graph u = c.parts[0];
        for (std::size_t i = 1; i < c.parts.size(); ++i) u = disjoint_union(u, c.parts[i]);
        Graph g = complement(u);
        CAPTURE(graph6_encode(g));
        CHECK(prism_cograph_oldoind(g).has_value() == c.expect);
        CHECK(exists_oldoind(complementary_prism(g)).found() == c.expect);
    }
}

TEST_CASE("prism decider matches the oracle on small cographs", "[prism]") {
    for (const Graph& g : {gen_complete(4), gen_path(3), join(gen_complete(2), gen_complete(2)),
                           complement(disjoint_union(gen_path(3), gen_complete(2)))}) {
        bool oracle = exists_oldoind(complementary_prism(g)).found();
        CHECK(prism_cograph_oldoind(g).has_value() == oracle);
    }
}
