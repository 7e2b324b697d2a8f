#include "mlob/solver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mlob {

namespace {

bool reaches_all(const Digraph& dhat, int root) {
    const int n = dhat.vertex_count();
    std::vector<char> seen(n, 0);
    std::deque<int> queue{root};
    seen[root] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : dhat.out(u)) {
            if (seen[v]) continue;
            seen[v] = 1;
            ++reached;
            queue.push_back(v);
        }
    }
    return reached == n;
}

// l_max(D,T,L+{x}) == 0 ?
bool forced_internal(const SearchState& s, int x) {
    std::set<int> l2 = s.l_set;
    l2.insert(x);
    Digraph dh = derived_graph(*s.graph, s.tree, l2);
    return !reaches_all(dh, s.tree.root());
}

// Depth-first pivot rule: the last vertex added to T that is a leaf of T
// outside L. -1 when none exists.
int pick_branch_vertex(const SearchState& s) {
    const auto& order = s.tree.insertion_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (s.tree.is_leaf(*it) && !s.l_set.count(*it)) return *it;
    return -1;
}

int nearest_red_ancestor(const SearchState& s, int x) {
    for (int v = s.tree.parent(x); v != -1; v = s.tree.parent(v))
        if (s.red.count(v)) return v;
    return -1;
}

struct Ctx {
    const Digraph* g;
    int k;
    bool use_b;
    Telemetry* tel;
    std::optional<OutTree>* witness;
    const P0Observer* observer;
};

// Builds the witness for a YES at step (3): extend T inside the current
// dhat, which keeps every vertex of L a leaf.
void record_witness(const SearchState& s, Ctx& c) {
    if (c.witness->has_value()) return;
    OutTree w = extend_in_derived(s.dhat, s.tree);
    if (w.size() != c.g->vertex_count())
        throw std::logic_error("solver: YES state failed to extend to a branching");
    *c.witness = std::move(w);
}

bool recurse(SearchState s, int depth, Ctx& c) {
    ++c.tel->nodes_visited;
    c.tel->max_depth = std::max(c.tel->max_depth, depth);
    if (!s.proper()) throw std::logic_error("solver: improper argument (L meets Int(T))");

    // (1)
    if (!tl_branching_exists(s)) return false;

    // (2)
    force_internal_pass(s);

    // (3)
    if (static_cast<int>(s.l_set.size()) >= c.k || s.tree.leaf_count() >= c.k) {
        record_witness(s, c);
        return true;
    }
    bool all_in_l = true;
    for (int v : s.tree.leaves())
        if (!s.l_set.count(v)) {
            all_in_l = false;
            break;
        }
    if (all_in_l) return false;

    // (4)
    int x = pick_branch_vertex(s);
    std::set<int> l_extra{x};
    if (c.use_b) {
        s.red.insert(x);
        s.snapshots.emplace(x, s.dhat);
        int z = nearest_red_ancestor(s, x);
        if (z != -1) {
            auto tz = s.tree.subtree_vertices(z);
            std::vector<int> tz_leaves;
            for (int v : tz)
                if (s.tree.is_leaf(v)) tz_leaves.push_back(v);
            if (tz_leaves.size() == 2) {
                int other = tz_leaves[0] == x ? tz_leaves[1] : tz_leaves[0];
                bool has_x = tz_leaves[0] == x || tz_leaves[1] == x;
                if (has_x && s.l_set.count(other)) {
                    int p0 = find_p0(s, z);
                    if (c.observer && *c.observer) (*c.observer)(s, z, p0);
                    l_extra.insert(p0);
                }
            }
        }
    }

    // (4.3)
    {
        SearchState child = s;
        bool improper = false;
        for (int v : l_extra) {
            if (child.tree.is_internal(v)) improper = true;
            child.l_set.insert(v);
        }
        // An L' touching Int(T) admits no (T,L')-out-branching; skip the call.
        if (!improper) {
            child.refresh_dhat();
            ++c.tel->l_branches;
            if (recurse(std::move(child), depth + 1, c)) return true;
        }
    }

    // (4.4)
    if (s.dhat.out_degree(x) >= 1) {
        SearchState child = std::move(s);
        OutTree grown = grow_tree(child, x);
        if (grown.leaf_count() >= 2) {
            ++c.tel->grow_branches;
            return recurse(std::move(child), depth + 1, c);
        }
    }
    return false;
}

SolveOutcome run_solver(const Digraph& g, int k, bool use_b, const P0Observer& observer) {
    if (k < 1) throw std::invalid_argument("solver: k must be at least 1");
    SolveOutcome outcome;
    const int n = g.vertex_count();
    // An out-branching has at most n-1 leaves for n >= 2, at most 1 for n = 1.
    if (k > n || (k == n && n >= 2)) {
        outcome.telemetry.nodes_visited = 1;
        return outcome;
    }
    auto root_comp = out_branching_root_component(g);
    if (!root_comp) {
        outcome.telemetry.nodes_visited = 1;
        return outcome;
    }
    Ctx ctx{&g, k, use_b, &outcome.telemetry, &outcome.witness, &observer};
    for (int r : *root_comp) {
        SearchState state(g, r);
        if (recurse(std::move(state), 1, ctx)) {
            outcome.yes = true;
            break;
        }
    }
    return outcome;
}

}  // namespace

SearchState::SearchState(const Digraph& g, int root) : graph(&g), tree(g.vertex_count(), root) {
    refresh_dhat();
}

void SearchState::refresh_dhat() { dhat = derived_graph(*graph, tree, l_set); }

bool SearchState::proper() const {
    for (int v : l_set)
        if (tree.is_internal(v)) return false;
    return true;
}

bool tl_branching_exists(const SearchState& s) { return reaches_all(s.dhat, s.tree.root()); }

void force_internal_pass(SearchState& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x : s.tree.insertion_order()) {
            if (!s.tree.is_leaf(x) || s.l_set.count(x)) continue;
            if (!forced_internal(s, x)) continue;
            // x cannot be a leaf of any (T,L)-out-branching: make it internal.
            std::vector<int> targets = s.dhat.out(x);
            for (int y : targets) s.tree.add_arc(x, y);
            s.refresh_dhat();
            changed = true;
            break;  // rescan from the start, dhat changed
        }
    }
}

OutTree grow_tree(SearchState& s, int x) {
    if (!s.tree.is_leaf(x) || s.l_set.count(x))
        throw std::logic_error("grow_tree: x must be a leaf of T outside L");
    if (s.dhat.out_degree(x) == 0)
        throw std::logic_error("grow_tree: x has no out-arc in the derived graph");
    int cur = x;
    while (s.dhat.out_degree(cur) == 1) {
        int next = s.dhat.out(cur)[0];
        s.tree.add_arc(cur, next);
        s.refresh_dhat();
        cur = next;
    }
    std::vector<int> targets = s.dhat.out(cur);
    for (int y : targets) s.tree.add_arc(cur, y);
    s.refresh_dhat();
    return s.tree.subtree(x);
}

int find_p0(const SearchState& s, int z) {
    const Digraph& hz = s.snapshots.at(z);
    const int n = hz.vertex_count();
    std::vector<char> in_tz(n, 0);
    for (int v : s.tree.subtree_vertices(z)) in_tz[v] = 1;
    std::vector<char> is_target(n, 0);  // N+_dhat(z), the removed out-arc heads
    for (int v : s.dhat.out(z)) is_target[v] = 1;

    // R: vertices of T_z reaching N+_dhat(z) inside (H_z - A+_dhat(z))[V(T_z)],
    // found by backward search from the targets lying in T_z.
    std::vector<char> in_r(n, 0);
    std::deque<int> queue;
    for (int v = 0; v < n; ++v)
        if (is_target[v] && in_tz[v]) {
            in_r[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : hz.in(v)) {
            if (u == z && is_target[v]) continue;  // arc of A+_dhat(z)
            if (!in_tz[u] || in_r[u]) continue;
            in_r[u] = 1;
            queue.push_back(u);
        }
    }

    int best = -1;
    for (int v = 0; v < n; ++v) {
        if (!in_r[v]) continue;
        for (int u : hz.in(v)) {
            if (in_tz[u]) continue;
            if (u == z && is_target[v]) continue;
            if (best == -1 || u < best) best = u;
        }
    }
    if (best != -1) return best;
    // Degenerate path of length zero: p0 itself is an out-neighbor of z
    // outside T_z.
    for (int v = 0; v < n; ++v)
        if (is_target[v] && !in_tz[v] && (best == -1 || v < best)) best = v;
    if (best != -1) return best;
    throw std::logic_error("find_p0: no valid p0 exists (invariant violation)");
}

SolveOutcome algo_a(const Digraph& g, int k) { return run_solver(g, k, false, {}); }

SolveOutcome algo_b(const Digraph& g, int k, const P0Observer& observer) {
    return run_solver(g, k, true, observer);
}

}  // namespace mlob
