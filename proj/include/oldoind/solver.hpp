#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oldoind/graph.hpp"
#include "oldoind/verify.hpp"

namespace oldoind {

struct SolveResult {
    enum class Status { found, absent, budget_exceeded };

    Status status = Status::absent;
    std::optional<VertexSet> set;
    int size = 0;
    std::uint64_t nodes_explored = 0;

    bool found() const { return status == Status::found; }
};

struct SolverOptions {
    std::uint64_t node_budget = 200'000'000;
    // Conservative domain-specific cut: called with the vertices already in
    // S and the vertices that can no longer join S; returning false prunes
    // the branch.  Must never cut a branch that completes to a valid set.
    std::function<bool(VertexSet in_set, VertexSet cannot_join)> extra_prune;
};

namespace detail {

// Search over induced matchings: any OLD_oind set induces a disjoint union
// of K2's, so candidates are endpoint unions of edge sets whose endpoints
// are pairwise non-adjacent across edges.  Edges are explored in
// lexicographic (min,max) order.
class MatchingSearch {
public:
    MatchingSearch(const Graph& g, const SolverOptions& opts) : g_(g), opts_(opts), edges_(g.edges()) {
        all_ = VertexSet::full(g.order()).bits;
    }

    // Stop at the first valid set of any size.
    SolveResult exists() {
        result_ = SolveResult{};
        target_ = -1;
        best_.reset();
        bool ok = dfs(0, 0, 0, 0);
        finish(ok);
        return result_;
    }

    // All valid sets use exactly `target` edges; the smallest vertex set
    // found is kept so ties break deterministically.
    SolveResult exact(int target, std::uint64_t nodes_so_far) {
        result_ = SolveResult{};
        result_.nodes_explored = nodes_so_far;
        target_ = target;
        best_.reset();
        bool ok = dfs(0, 0, 0, 0);
        finish(ok);
        return result_;
    }

private:
    void finish(bool within_budget) {
        if (!within_budget) {
            result_.status = SolveResult::Status::budget_exceeded;
            result_.set.reset();
            return;
        }
        if (best_) {
            result_.status = SolveResult::Status::found;
            result_.set = *best_;
            result_.size = best_->count();
        } else {
            result_.status = SolveResult::Status::absent;
        }
    }

    bool feasible(std::uint64_t in_set, std::uint64_t closed, int chosen) const {
        std::uint64_t avail = all_ & ~closed;
        if (target_ >= 0 && chosen + __builtin_popcountll(avail) / 2 < target_) return false;
        for (int v = 0; v < g_.order(); ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            std::uint64_t nb = g_.neighbors(v).bits;
            if (in_set & bit) continue;
            int pot = __builtin_popcountll(nb & avail);
            if (avail & bit) {
                if (pot == 0) return false;  // cannot join S, cannot be dominated twice
            } else {
                int cnt = __builtin_popcountll(nb & in_set);
                if (cnt + pot < 2) return false;
            }
        }
        return true;
    }

    // Returns false exactly when the node budget ran out.
    bool dfs(std::size_t next_edge, std::uint64_t in_set, std::uint64_t closed, int chosen) {
        if (++result_.nodes_explored > opts_.node_budget) return false;

        if (target_ < 0) {
            if (in_set && !best_) {
                Verdict v = verify_oldoind(g_, VertexSet(in_set));
                if (v.valid) {
                    best_ = VertexSet(in_set);
                    return true;
                }
            }
        } else if (chosen == target_) {
            Verdict v = verify_oldoind(g_, VertexSet(in_set));
            if (v.valid && (!best_ || vertex_set_less(VertexSet(in_set), *best_)))
                best_ = VertexSet(in_set);
            return true;
        }

        if (!feasible(in_set, closed, chosen)) return true;
        if (opts_.extra_prune && !opts_.extra_prune(VertexSet(in_set), VertexSet(closed & ~in_set))) return true;

        for (std::size_t e = next_edge; e < edges_.size(); ++e) {
            auto [a, b] = edges_[e];
            std::uint64_t ab = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            if (closed & ab) continue;
            std::uint64_t in2 = in_set | ab;
            std::uint64_t cl2 = closed | ab | g_.neighbors(a).bits | g_.neighbors(b).bits;
            if (!dfs(e + 1, in2, cl2, chosen + 1)) return false;
            if (target_ < 0 && best_) return true;
        }
        return true;
    }

    const Graph& g_;
    const SolverOptions& opts_;
    std::vector<std::pair<int, int>> edges_;
    std::uint64_t all_ = 0;
    int target_ = -1;
    std::optional<VertexSet> best_;
    SolveResult result_;
};

}  // namespace detail

// Existence oracle.  `absent` after a completed search is a proof of
// nonexistence; a budget overrun is reported as its own status, never as
// absence.  Accepts anything up to 64 vertices; exhaustive runs are
// practical to roughly 34 vertices on sparse inputs.
inline SolveResult exists_oldoind(const Graph& g, const SolverOptions& opts = {}) {
    require_nonempty(g, "exists_oldoind");
    if (find_open_twins(g)) {
        SolveResult r;
        r.status = SolveResult::Status::absent;
        return r;
    }
    detail::MatchingSearch search(g, opts);
    return search.exists();
}

// Minimum-size oracle: explores by increasing edge count, so the first
// level with a valid set gives the minimum size; ties within the level are
// broken toward the lexicographically smallest vertex set.
inline SolveResult min_oldoind(const Graph& g, const SolverOptions& opts = {}) {
    require_nonempty(g, "min_oldoind");
    if (find_open_twins(g)) {
        SolveResult r;
        r.status = SolveResult::Status::absent;
        return r;
    }
    std::uint64_t nodes = 0;
    detail::MatchingSearch search(g, opts);
    for (int k = 1; 2 * k <= g.order(); ++k) {
        SolveResult r = search.exact(k, nodes);
        if (r.status != SolveResult::Status::absent) return r;
        nodes = r.nodes_explored;
    }
    SolveResult r;
    r.status = SolveResult::Status::absent;
    r.nodes_explored = nodes;
    return r;
}

}  // namespace oldoind
