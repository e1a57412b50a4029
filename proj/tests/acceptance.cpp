// Acceptance harness: replays the library's guarantees end to end and
// prints one pass/fail line per criterion.  Exits nonzero if any fail.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oldoind/report.hpp"
#include "oldoind/selftest.hpp"

using namespace oldoind;

namespace {

struct Criterion {
    std::string label;
    bool passed = true;
    long checks = 0;
    std::string detail;

    explicit Criterion(std::string criterion_label) : label(std::move(criterion_label)) {}

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            passed = false;
            if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

const std::vector<Graph>& classes(int n) { return selftest_detail::classes(n); }

Criterion criterion1_oracle_consistency() {
    Criterion c("1 oracle self-consistency (verify vs reference, min minimality)");
    std::mt19937 rng(20240901);
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : classes(n)) {
            std::uint64_t mask = VertexSet::full(n).bits;
            for (int trial = 0; trial < 1000; ++trial) {
                VertexSet s(rng() & mask);
                bool fast = verify_oldoind(g, s).valid;
                bool slow = reference_check(g, s.vertices()).valid();
                if (fast != slow) {
                    c.expect(false, "verify mismatch on " + graph6_encode(g));
                    break;
                }
                ++c.checks;
            }
            SolveResult r = min_oldoind(g);
            if (r.found()) {
                c.expect(verify_oldoind(g, *r.set).valid, "min invalid on " + graph6_encode(g));
                bool smaller = false;
                for (std::uint64_t bits = 0; bits <= mask && !smaller; ++bits)
                    if (__builtin_popcountll(bits) < r.size && reference_check(g, VertexSet(bits).vertices()).valid())
                        smaller = true;
                c.expect(!smaller, "smaller set on " + graph6_encode(g));
            } else {
                bool any = false;
                for (std::uint64_t bits = 0; bits <= mask && !any; ++bits)
                    any = reference_check(g, VertexSet(bits).vertices()).valid();
                c.expect(!any, "missed set on " + graph6_encode(g));
            }
        }
    return c;
}

Criterion criterion2_spiders() {
    Criterion c("2 spider refutation");
    SuiteResult s = selftest_detail::suite_spider_refutation(7);
    c.checks = s.checks;
    c.passed = s.passed;
    for (const auto& f : s.failures) c.detail += f + "; ";
    return c;
}

Criterion criterion3_quasi_spiders() {
    Criterion c("3 quasi-spider classification (accepts exactly Z)");
    SuiteResult s = selftest_detail::suite_quasi_classification(7);
    c.checks = s.checks;
    c.passed = s.passed;
    for (const auto& f : s.failures) c.detail += f + "; ";
    return c;
}

Criterion criterion4_p4tidy() {
    Criterion c("4 P4-tidy characterization vs oracle");
    std::string p5 = canonical_form(gen_path(5)), z = canonical_form(gen_z());
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : classes(n)) {
            if (!is_connected(g) || !is_p4_tidy(g)) continue;
            auto witness = p4tidy_oldoind(g);
            bool oracle = exists_oldoind(g).found();
            c.expect(witness.has_value() == oracle, "verdict mismatch on " + graph6_encode(g));
            if (witness) c.expect(verify_oldoind(g, *witness).valid, "witness invalid on " + graph6_encode(g));
            if (is_co_connected(g)) {
                bool expected = n == 5 && (canonical_form(g) == p5 || canonical_form(g) == z);
                c.expect(witness.has_value() == expected, "co-connected filter on " + graph6_encode(g));
            }
        }
    return c;
}

void collect_base_names(const DecideTrace& t, std::vector<std::string>& out) {
    if (t.kind == "base") out.push_back(t.base_name);
    for (const auto& child : t.children) collect_base_names(child, out);
}

Criterion criterion5_cographs() {
    Criterion c("5 cograph characterization (bases exactly K2 and K3)");
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : classes(n)) {
            if (!is_connected(g) || !is_cograph(g)) continue;
            DecideResult r = cograph_oldoind_traced(g);
            bool oracle = exists_oldoind(g).found();
            c.expect(r.accepted == oracle, "verdict mismatch on " + graph6_encode(g));
            if (r.accepted) {
                c.expect(verify_oldoind(g, r.witness).valid, "witness invalid on " + graph6_encode(g));
                std::vector<std::string> names;
                collect_base_names(r.trace, names);
                c.expect(!names.empty(), "accepted without any base case on " + graph6_encode(g));
                for (const auto& name : names)
                    c.expect(name == "K2" || name == "K3", "foreign base " + name + " on " + graph6_encode(g));
            }
        }
    c.expect(cograph_oldoind(gen_complete(2)).has_value(), "K2 rejected");
    c.expect(cograph_oldoind(gen_complete(3)).has_value(), "K3 rejected");
    return c;
}

Criterion criterion6_prisms() {
    Criterion c("6 prism characterization vs oracle (connected cographs n<=6)");
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : classes(n)) {
            if (!is_connected(g) || !is_cograph(g)) continue;
            auto witness = prism_cograph_oldoind(g);
            Graph prism = complementary_prism(g);
            bool oracle = exists_oldoind(prism).found();
            c.expect(witness.has_value() == oracle, "verdict mismatch on " + graph6_encode(g));
            if (witness) {
                c.expect(verify_oldoind(prism, witness->full()).valid, "witness invalid on " + graph6_encode(g));
                PrismAudit audit = audit_prism_set(g, *witness);
                if (audit.hypotheses_met)
                    c.expect(audit.all_passed(), "audit failed on " + graph6_encode(g));
            }
        }
    return c;
}

Criterion criterion7_universal_base() {
    Criterion c("7 universal-vertex base family");
    for (int m : {1, 2, 3, 4}) {
        Graph g = gen_k1_join_cocktail_party(m);
        auto w = prism_cograph_oldoind(g);
        if (!w) {
            c.expect(false, "family member rejected, m=" + std::to_string(m));
            continue;
        }
        c.expect(w->s0.count() == 1, "S0 not a single vertex, m=" + std::to_string(m));
        c.expect(w->s1bar.count() == g.order(), "S1 misses part of the complement, m=" + std::to_string(m));
    }
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : classes(n)) {
            if (universal_vertices(g).size() != 1) continue;
            bool in_family = (n % 2 == 1) && is_isomorphic(g, gen_k1_join_cocktail_party((n - 1) / 2));
            if (in_family) continue;
            c.expect(!exists_oldoind(complementary_prism(g)).found(),
                     "oracle accepts prism of " + graph6_encode(g));
            if (is_cograph(g))
                c.expect(!prism_cograph_oldoind(g).has_value(), "decider accepts " + graph6_encode(g));
        }
    return c;
}

Criterion criterion8_reduction() {
    Criterion c("8 X3C reduction correctness");
    SuiteResult s = selftest_detail::suite_reduction(7);
    c.checks = s.checks;
    c.passed = s.passed;
    for (const auto& f : s.failures) c.detail += f + "; ";

    X3CInstance inst;
    inst.ground = 6;
    inst.triples = {{0, 1, 3}, {1, 3, 5}, {2, 4, 5}};
    Gadget gadget = build_gadget(inst);
    c.expect(gadget.graph.order() == 33, "gadget size");
    auto cover = x3c_bruteforce(inst);
    c.expect(cover.has_value() && *cover == std::vector<int>{0, 2}, "expected cover {S1,S3}");
    if (cover) {
        VertexSet d = cover_to_set(inst, gadget, *cover);
        c.expect(d.count() == 24, "expected |D| = 24, got " + std::to_string(d.count()));
        c.expect(verify_oldoind(gadget.graph, d).valid, "D fails verification");
    }
    return c;
}

Criterion criterion9_codec() {
    Criterion c("9 graph6 roundtrip");
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : classes(n))
            c.expect(graph6_decode(graph6_encode(g)) == g, "roundtrip failed on " + graph6_encode(g));
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 32);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1u) g.add_edge(u, v);
        c.expect(graph6_decode(graph6_encode(g)) == g, "random roundtrip failed, n=" + std::to_string(n));
    }
    return c;
}

Criterion criterion10_determinism() {
    Criterion c("10 selftest determinism (byte-identical reports)");
    std::string first = selftest_report_json(run_selftest(7));
    std::string second = selftest_report_json(run_selftest(7));
    c.expect(first == second, "consecutive selftest reports differ");
    json parsed = json::parse(first);
    c.expect(parsed["all_passed"].get<bool>(), "selftest suites failed");
    return c;
}

}  // namespace

int main() {
    std::vector<std::function<Criterion()>> criteria = {
        criterion1_oracle_consistency, criterion2_spiders,  criterion3_quasi_spiders,
        criterion4_p4tidy,             criterion5_cographs, criterion6_prisms,
        criterion7_universal_base,     criterion8_reduction, criterion9_codec,
        criterion10_determinism,
    };
    int failures = 0;
    for (auto& run : criteria) {
        Criterion c = run();
        if (!c.passed) ++failures;
        std::printf("[%s] criterion %s (%ld checks)%s%s\n", c.passed ? "PASS" : "FAIL", c.label.c_str(), c.checks,
                    c.detail.empty() ? "" : " -- ", c.detail.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
