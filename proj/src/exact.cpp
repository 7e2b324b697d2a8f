#include "mlob/exact.hpp"

#include <stdexcept>

#include "mlob/solver.hpp"

namespace mlob {

namespace {

// Digraph with all out-arcs of s removed.
Digraph strip_out_arcs(const Digraph& g, const std::set<int>& s) {
    Digraph result(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (s.count(u)) continue;
        for (int v : g.out(u)) result.add_arc(u, v);
    }
    return result;
}

// Any out-branching of h, rooted in its source component. Empty when h has
// none.
std::optional<OutTree> any_branching(const Digraph& h) {
    auto comp = out_branching_root_component(h);
    if (!comp) return std::nullopt;
    return extend_to_branching(h, OutTree(h.vertex_count(), comp->front()));
}

// Lexicographic subset scan with early exit: does any S of size k make
// stripping its out-arcs keep an out-branching alive?
bool any_feasible_set(const Digraph& g, int k, std::set<int>* found) {
    const int n = g.vertex_count();
    if (k > n) return false;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::set<int> s(pick.begin(), pick.end());
        if (leaves_feasible(g, s)) {
            if (found) *found = s;
            return true;
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

bool leaves_feasible(const Digraph& g, const std::set<int>& s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("leaves_feasible: vertex out of range");
    return out_branching_root_component(strip_out_arcs(g, s)).has_value();
}

ExactOutcome adml(const Digraph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("adml: empty digraph");
    ExactOutcome outcome;
    const int k0 = (526 * n + 999) / 1000;  // ceil(0.526 n), exact in integers

    // Stage 1.
    SolveOutcome threshold = algo_b(g, k0);
    if (!threshold.yes) {
        outcome.stage_reached = 1;
        int lo = 1, hi = k0 - 1, best = 0;
        std::optional<OutTree> best_witness;
        while (lo <= hi) {
            int mid = lo + (hi - lo) / 2;
            SolveOutcome probe = algo_b(g, mid);
            if (probe.yes) {
                best = mid;
                best_witness = probe.witness;
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
        outcome.max_leaves = best;
        outcome.witness = std::move(best_witness);
        return outcome;
    }

    // Stage 2.
    outcome.stage_reached = 2;
    int best = k0;
    std::optional<OutTree> best_witness = threshold.witness;
    for (int k = k0 + 1; k <= n; ++k) {
        std::set<int> found;
        if (!any_feasible_set(g, k, &found)) break;
        // Monotonicity spot-check: dropping an element keeps feasibility.
        if (k >= 2) {
            std::set<int> smaller = found;
            smaller.erase(*smaller.rbegin());
            if (!leaves_feasible(g, smaller))
                throw std::logic_error("adml: stage-2 monotonicity violated");
        }
        best = k;
        if (auto w = any_branching(strip_out_arcs(g, found))) best_witness = std::move(w);
    }
    outcome.max_leaves = best;
    outcome.witness = std::move(best_witness);
    return outcome;
}

}  // namespace mlob
