// Command-line front end: graph ingestion (graph6 / edge list / X3C
// instances), the exact solver, the class deciders, generators, and the
// selftest harness.  Machine output is deterministic JSON; human output is
// a rendering of the same report.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oldoind/oldoind.hpp"
#include "oldoind/report.hpp"
#include "oldoind/selftest.hpp"

namespace {

using oldoind::json;

constexpr const char* kReportSchema = "oldoind-report/1";

int g_workers = 1;  // reserved: all operations currently run serially

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw oldoind::InvalidInput("cannot open input: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    long v;
    while (in >> v) out.push_back(static_cast<int>(v));
    if (!in.eof()) throw oldoind::InvalidInput("expected a list of integers: '" + text + "'");
    return out;
}

oldoind::VertexSet parse_vertex_set(const oldoind::Graph& g, const std::string& text) {
    oldoind::VertexSet s;
    for (int v : parse_int_list(text)) {
        g.check_vertex(v);
        s.add(v);
    }
    return s;
}

oldoind::Graph parse_head(const std::string& name) {
    using namespace oldoind;
    if (name.empty() || name == "none") return Graph(0);
    if (name == "K1") return gen_complete(1);
    if (name == "K2") return gen_complete(2);
    if (name == "K2bar") return gen_edgeless(2);
    if (name == "K3") return gen_complete(3);
    if (name == "P3") return gen_path(3);
    if (name == "P4") return gen_path(4);
    return graph6_decode(name);
}

json make_report(const std::string& command) {
    json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    return j;
}

void emit(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // human rendering of the same fields
    std::function<void(const json&, int)> render = [&](const json& j, int indent) {
        std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "schema") continue;
            if (it->is_object()) {
                std::cout << pad << it.key() << ":\n";
                render(*it, indent + 1);
            } else if (it->is_array() && !it->empty() && it->front().is_object()) {
                std::cout << pad << it.key() << ":\n";
                for (const auto& e : *it) {
                    std::cout << pad << "  -\n";
                    render(e, indent + 2);
                }
            } else {
                std::cout << pad << it.key() << ": " << it->dump() << "\n";
            }
        }
    };
    render(report, 0);
}

int cmd_verify(const std::string& input, const std::string& set_text, bool as_json) {
    using namespace oldoind;
    Graph g = parse_graph_text(read_input(input));
    VertexSet s = parse_vertex_set(g, set_text);
    Verdict v = verify_oldoind(g, s);

    json report = make_report("verify");
    report["input"] = {{"graph6", graph6_encode(g)}, {"order", g.order()}};
    report["set"] = s.vertices();
    report["verdict"] = to_json(v);
    report["codes"] = codes_json(v);
    emit(report, as_json);
    return v.valid ? 0 : 1;
}

int cmd_solve(const std::string& input, bool minimum, std::uint64_t budget, bool as_json) {
    using namespace oldoind;
    Graph g = parse_graph_text(read_input(input));
    SolverOptions opts;
    opts.node_budget = budget;
    SolveResult r = minimum ? min_oldoind(g, opts) : exists_oldoind(g, opts);

    json report = make_report(minimum ? "solve --min" : "solve");
    report["input"] = {{"graph6", graph6_encode(g)}, {"order", g.order()}};
    report["result"] = to_json(r);
    emit(report, as_json);
    if (r.found()) return 0;
    return r.status == SolveResult::Status::absent ? 1 : 2;
}

int cmd_decide(const std::string& input, std::string klass, int fallback_max, bool as_json) {
    using namespace oldoind;
    Graph g = parse_graph_text(read_input(input));

    json report = make_report("decide");
    report["input"] = {{"graph6", graph6_encode(g)}, {"order", g.order()}};

    if (klass == "auto") {
        if (is_cograph(g))
            klass = "cograph";
        else if (is_p4_tidy(g))
            klass = "p4tidy";
        else
            klass = "oracle";
    }
    report["class"] = klass;

    bool yes = false;
    if (klass == "p4tidy" || klass == "cograph") {
        DecideResult r = klass == "p4tidy" ? p4tidy_oldoind_traced(g) : cograph_oldoind_traced(g);
        yes = r.accepted;
        report["verdict"] = r.accepted ? "yes" : "no";
        if (r.accepted) {
            report["witness"] = r.witness.vertices();
            report["trace"] = to_json(r.trace);
        }
    } else if (klass == "prism-cograph") {
        auto r = prism_cograph_oldoind(g);
        yes = r.has_value();
        report["verdict"] = yes ? "yes" : "no";
        if (r) {
            report["prism_graph6"] = graph6_encode(complementary_prism(g));
            report["s0"] = r->s0.vertices();
            report["s1bar"] = r->s1bar.vertices();
            report["witness"] = r->full().vertices();
            report["trace"] = to_json(r->derivation);
        }
    } else if (klass == "oracle") {
        if (g.order() > fallback_max)
            throw ClassMismatch("no polynomial class applies and the graph is too large for the oracle fallback");
        report["warning"] = "no polynomial class applies; falling back to the exact oracle";
        SolveResult r = exists_oldoind(g);
        if (r.status == SolveResult::Status::budget_exceeded) throw Error("oracle fallback exceeded its budget");
        yes = r.found();
        report["verdict"] = yes ? "yes" : "no";
        if (r.found()) report["witness"] = r.set->vertices();
        report["nodes_explored"] = r.nodes_explored;
    } else {
        throw InvalidInput("unknown class: " + klass);
    }
    emit(report, as_json);
    return yes ? 0 : 1;
}

int cmd_gen(const std::string& family, const std::vector<int>& params, const std::string& kind,
            const std::string& head_name, const std::string& side, int index, const std::string& twin,
            bool connected_only, bool as_json) {
    using namespace oldoind;
    Graph g;
    if (family == "classes") {
        // isomorphism-class corpus, one graph6 line per class
        if (params.size() != 1) throw InvalidInput("gen classes takes exactly one parameter (the order)");
        auto all = enumerate_nonisomorphic(params[0], connected_only);
        if (as_json) {
            json report = make_report("gen classes");
            json lines = json::array();
            for (const auto& h : all) lines.push_back(graph6_encode(h));
            report["count"] = all.size();
            report["graphs"] = lines;
            emit(report, true);
        } else {
            for (const auto& h : all) std::cout << graph6_encode(h) << "\n";
        }
        return 0;
    }
    if (family == "spider" || family == "quasi-spider") {
        if (params.size() != 1) throw InvalidInput("spider generators take exactly one parameter (the weight)");
        SpiderKind k = kind == "thick" ? SpiderKind::thick : SpiderKind::thin;
        Graph head = parse_head(head_name);
        if (family == "spider") {
            g = gen_spider(k, params[0], head);
        } else {
            SpiderSide s = side == "C" ? SpiderSide::clique : SpiderSide::independent;
            TwinKind t = twin == "K2bar" ? TwinKind::nonadjacent : TwinKind::adjacent;
            g = gen_quasi_spider(k, params[0], head, s, index, t);
        }
    } else {
        g = gen_named(family, params);
    }
    if (as_json) {
        json report = make_report("gen");
        report["graph6"] = graph6_encode(g);
        report["order"] = g.order();
        report["edges"] = g.edge_count();
        emit(report, true);
    } else {
        std::cout << graph6_encode(g) << "\n";
    }
    return 0;
}

int cmd_prism(const std::string& input, bool as_json) {
    using namespace oldoind;
    Graph g = parse_graph_text(read_input(input));
    Graph p = complementary_prism(g);
    if (as_json) {
        json report = make_report("prism");
        report["input"] = {{"graph6", graph6_encode(g)}, {"order", g.order()}};
        report["graph6"] = graph6_encode(p);
        report["order"] = p.order();
        emit(report, true);
    } else {
        std::cout << graph6_encode(p) << "\n";
    }
    return 0;
}

json gadget_map_json(const oldoind::Gadget& gadget) {
    json names = json::object();
    for (std::size_t v = 0; v < gadget.map.names.size(); ++v) names[gadget.map.names[v]] = v;
    return names;
}

int cmd_x3c(const std::string& mode, const std::string& inst_path, const std::string& cover_text,
            const std::string& set_text, bool as_json) {
    using namespace oldoind;
    X3CInstance inst = x3c_parse(read_input(inst_path));
    json report = make_report("x3c " + mode);
    report["instance"] = {{"ground", inst.ground}, {"sets", inst.triples.size()}};

    if (mode == "build") {
        Gadget gadget = build_gadget(inst);
        report["graph6"] = graph6_encode(gadget.graph);
        report["order"] = gadget.graph.order();
        report["edges"] = gadget.graph.edge_count();
        report["map"] = gadget_map_json(gadget);
        if (as_json) {
            emit(report, true);
        } else {
            std::cout << graph6_encode(gadget.graph) << "\n" << gadget_map_json(gadget).dump() << "\n";
        }
        return 0;
    }
    if (mode == "solve") {
        auto cover = x3c_bruteforce(inst);
        report["verdict"] = cover ? "cover" : "no-cover";
        if (cover) {
            std::vector<int> one_based;
            for (int j : *cover) one_based.push_back(j + 1);
            report["cover"] = one_based;
        }
        emit(report, as_json);
        return cover ? 0 : 1;
    }
    if (mode == "to-set") {
        Gadget gadget = build_gadget(inst);
        std::vector<int> cover;
        for (int j : parse_int_list(cover_text)) cover.push_back(j - 1);
        VertexSet d = cover_to_set(inst, gadget, cover);
        report["set"] = d.vertices();
        report["size"] = d.count();
        report["verdict"] = to_json(verify_oldoind(gadget.graph, d));
        emit(report, as_json);
        return 0;
    }
    if (mode == "to-cover") {
        Gadget gadget = build_gadget(inst);
        VertexSet d = parse_vertex_set(gadget.graph, set_text);
        auto cover = set_to_cover(inst, gadget, d);
        std::vector<int> one_based;
        for (int j : cover) one_based.push_back(j + 1);
        report["cover"] = one_based;
        emit(report, as_json);
        return 0;
    }
    throw oldoind::InvalidInput("unknown x3c mode: " + mode);
}

int cmd_selftest(int maxn, bool as_json) {
    auto report = oldoind::run_selftest(maxn);
    std::string payload = oldoind::selftest_report_json(report);
    if (as_json) {
        std::cout << payload;
    } else {
        for (const auto& s : report.suites) {
            std::cout << (s.passed ? "pass  " : "FAIL  ") << s.name << " (" << s.checks << " checks)\n";
            for (const auto& f : s.failures) std::cout << "      " << f << "\n";
        }
        std::cout << (report.all_passed() ? "all suites passed" : "suite failures detected") << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"open-independent open-locating-dominating sets: exact solver, class deciders, reductions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may trail the subcommand arguments
    bool as_json = false;
    bool timing = false;
    app.add_flag("--json", as_json, "emit the JSON report instead of the human rendering");
    app.add_flag("--timing", timing, "report wall time on stderr");

    if (const char* env = std::getenv("OLDOIND_WORKERS")) {
        char* end = nullptr;
        long w = std::strtol(env, &end, 10);
        if (!end || *end != '\0' || w < 1) {
            std::cerr << "error: OLDOIND_WORKERS must be a positive integer\n";
            return 2;
        }
        g_workers = static_cast<int>(w);
        (void)g_workers;
    }

    std::string input = "-", set_text, cover_text, klass = "auto", family, kind = "thin", head, side = "C",
                twin = "K2", x3c_mode;
    std::vector<int> params;
    int index = 0, fallback_max = 20, maxn = 7;
    bool minimum = false, connected_only = false;
    std::uint64_t budget = 200'000'000;

    auto* verify = app.add_subcommand("verify", "check a candidate set against the definition");
    verify->add_option("input", input, "graph file (graph6 or edge list), '-' for stdin");
    verify->add_option("--set", set_text, "candidate vertices, e.g. \"0 1 3 4\"")->required();

    auto* solve = app.add_subcommand("solve", "run the exact oracle");
    solve->add_option("input", input);
    solve->add_flag("--min", minimum, "insist on a minimum-size set");
    solve->add_option("--budget", budget, "search node budget");

    auto* decide = app.add_subcommand("decide", "run a polynomial class decider");
    decide->add_option("input", input);
    decide->add_option("--class", klass, "auto | p4tidy | cograph | prism-cograph")
        ->check(CLI::IsMember({"auto", "p4tidy", "cograph", "prism-cograph"}));
    decide->add_option("--fallback-max", fallback_max, "largest order for the oracle fallback");

    auto* gen = app.add_subcommand("gen", "generate a named graph as graph6");
    gen->add_option("family", family,
                    "path | cycle | complete | edgeless | cocktail | r | rstar | k1-cocktail | spider | "
                    "quasi-spider | classes")
        ->required();
    gen->add_option("params", params, "integer parameters");
    gen->add_option("--kind", kind, "spider kind: thin | thick")->check(CLI::IsMember({"thin", "thick"}));
    gen->add_option("--head", head, "spider head: none | K1 | K2 | K2bar | K3 | P3 | P4 | <graph6>");
    gen->add_option("--side", side, "quasi-spider side: C | X")->check(CLI::IsMember({"C", "X"}));
    gen->add_option("--index", index, "replaced vertex index within its side");
    gen->add_option("--twin", twin, "replacement pair: K2 | K2bar")->check(CLI::IsMember({"K2", "K2bar"}));
    gen->add_flag("--connected", connected_only, "classes: keep connected graphs only");

    auto* prism = app.add_subcommand("prism", "complementary prism of the input graph");
    prism->add_option("input", input);

    auto* x3c = app.add_subcommand("x3c", "exact-cover tooling and the hardness gadget");
    x3c->add_option("mode", x3c_mode, "build | solve | to-set | to-cover")
        ->required()
        ->check(CLI::IsMember({"build", "solve", "to-set", "to-cover"}));
    x3c->add_option("instance", input, "instance file: '3n m' then m one-based triples");
    x3c->add_option("--cover", cover_text, "one-based set indices (to-set)");
    x3c->add_option("--set", set_text, "gadget vertices (to-cover)");

    auto* selftest = app.add_subcommand("selftest", "run every module invariant suite");
    selftest->add_option("--max-n", maxn, "largest graph order to sweep (1..7)");

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        if (*verify)
            rc = cmd_verify(input, set_text, as_json);
        else if (*solve)
            rc = cmd_solve(input, minimum, budget, as_json);
        else if (*decide)
            rc = cmd_decide(input, klass, fallback_max, as_json);
        else if (*gen)
            rc = cmd_gen(family, params, kind, head, side, index, twin, connected_only, as_json);
        else if (*prism)
            rc = cmd_prism(input, as_json);
        else if (*x3c)
            rc = cmd_x3c(x3c_mode, input, cover_text, set_text, as_json);
        else if (*selftest)
            rc = cmd_selftest(maxn, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    }
    if (timing) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        std::cerr << "time: " << elapsed.count() << " ms\n";
    }
    return rc;
}
