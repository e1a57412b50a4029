#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "oldoind/decide.hpp"
#include "oldoind/prism.hpp"
#include "oldoind/solver.hpp"
#include "oldoind/verify.hpp"

namespace oldoind {

using json = nlohmann::ordered_json;

inline json to_json(const Verdict& v) {
    json j;
    j["valid"] = v.valid;
    if (!v.valid) {
        j["violation"] = v.describe();
        j["witness_u"] = v.witness_u;
        if (v.witness_v >= 0) j["witness_v"] = v.witness_v;
    }
    return j;
}

inline json codes_json(const Verdict& v) {
    json j = json::object();
    for (std::size_t i = 0; i < v.codes.size(); ++i) j[std::to_string(i)] = v.codes[i].vertices();
    return j;
}

inline const char* status_name(SolveResult::Status s) {
    switch (s) {
        case SolveResult::Status::found: return "found";
        case SolveResult::Status::absent: return "absent";
        case SolveResult::Status::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

inline json to_json(const SolveResult& r) {
    json j;
    j["status"] = status_name(r.status);
    if (r.found()) {
        j["set"] = r.set->vertices();
        j["size"] = r.size;
    }
    j["nodes_explored"] = r.nodes_explored;
    return j;
}

inline json to_json(const DecideTrace& t) {
    json j;
    j["case"] = t.kind;
    j["graph6"] = t.graph6;
    if (!t.base_name.empty()) j["base"] = t.base_name;
    if (t.universal_vertex >= 0) j["universal_vertex"] = t.universal_vertex;
    if (!t.witness.empty()) j["witness"] = t.witness;
    if (!t.children.empty()) {
        json kids = json::array();
        for (const auto& c : t.children) kids.push_back(to_json(c));
        j["children"] = kids;
    }
    return j;
}

inline json to_json(const PrismTrace& t) {
    json j;
    j["case"] = t.kind;
    j["graph6"] = t.graph6;
    if (t.kind == "universal-base") j["s"] = t.s;
    if (t.kind == "size2-structure") {
        json parts = json::array();
        for (const auto& p : t.parts) {
            json pj;
            pj["type"] = p.type;
            if (p.type == "R" || p.type == "R*") {
                pj["l"] = p.l;
                pj["m"] = p.m;
            }
            pj["size"] = p.size;
            parts.push_back(pj);
        }
        j["parts"] = parts;
    }
    if (t.kind == "peel") {
        j["h_graph6"] = t.h_graph6;
        j["f"] = t.f_type;
        if (t.f_type == "R_1_m") j["m"] = t.f_m;
        j["r"] = t.r;
    }
    j["s0"] = t.s0;
    if (!t.inner.empty()) j["inner"] = to_json(t.inner.front());
    return j;
}

inline json to_json(const PrismAudit& a) {
    json j;
    j["hypotheses_met"] = a.hypotheses_met;
    if (a.hypotheses_met) {
        json cs = json::array();
        for (const auto& c : a.clauses) {
            json cj;
            cj["clause"] = c.clause;
            cj["passed"] = c.passed;
            if (!c.detail.empty()) cj["detail"] = c.detail;
            cs.push_back(cj);
        }
        j["clauses"] = cs;
        j["all_passed"] = a.all_passed();
    }
    return j;
}

}  // namespace oldoind
