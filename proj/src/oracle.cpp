#include "mlob/oracle.hpp"

#include <deque>
#include <stdexcept>

namespace mlob {

namespace {

// Enumerates every in-arc assignment for the non-root vertices, pruning
// assignments whose partial parent graph already contains a cycle. Each
// surviving full assignment is a spanning arborescence rooted at `root`,
// and every arborescence appears exactly once.
struct Enumerator {
    const Digraph& g;
    int root;
    const OutTree* forced;          // forced parents from T, may be null
    const std::set<int>* excluded;  // parents that may not be used (L)
    const OracleBudget& budget;

    std::vector<int> order;   // non-root vertices, ascending
    std::vector<int> parent;  // -1 root / unassigned
    long long count = 0;
    int best = -1;
    std::vector<int> best_parent;

    Enumerator(const Digraph& graph, int r, const OutTree* t, const std::set<int>* l,
               const OracleBudget& b)
        : g(graph), root(r), forced(t), excluded(l), budget(b), parent(graph.vertex_count(), -1) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != root) order.push_back(v);
    }

    bool creates_cycle(int child, int chosen) const {
        for (int v = chosen; v != -1; v = parent[v]) {
            if (v == child) return true;
            if (v == root) return false;
        }
        return false;
    }

    void finish() {
        if (++count > budget.max_arborescences)
            throw std::runtime_error("oracle: arborescence budget exceeded");
        std::vector<char> internal(g.vertex_count(), 0);
        for (int v : order) internal[parent[v]] = 1;
        int leaves = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!internal[v]) ++leaves;
        if (leaves > best) {
            best = leaves;
            best_parent = parent;
        }
    }

    void assign(std::size_t idx) {
        if (idx == order.size()) {
            finish();
            return;
        }
        int v = order[idx];
        if (forced && forced->contains(v) && v != forced->root()) {
            int p = forced->parent(v);
            if (creates_cycle(v, p)) return;  // mandatory arc closes a cycle
            parent[v] = p;
            assign(idx + 1);
            parent[v] = -1;
            return;
        }
        for (int p : g.in(v)) {
            if (excluded && excluded->count(p)) continue;
            if (creates_cycle(v, p)) continue;
            parent[v] = p;
            assign(idx + 1);
            parent[v] = -1;
        }
    }

    std::optional<OutTree> best_tree() const {
        if (best < 0) return std::nullopt;
        OutTree tree(g.vertex_count(), root);
        std::vector<std::vector<int>> kids(g.vertex_count());
        for (int v : order) kids[best_parent[v]].push_back(v);
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : kids[u]) {
                tree.add_arc(u, v);
                queue.push_back(v);
            }
        }
        return tree;
    }
};

void check_budget(const Digraph& g, const OracleBudget& budget) {
    if (g.vertex_count() > budget.max_vertices)
        throw std::runtime_error("oracle: instance exceeds the vertex budget");
}

}  // namespace

OracleResult oracle_max_leaves(const Digraph& g, const OracleBudget& budget) {
    check_budget(g, budget);
    OracleResult result;
    for (int root = 0; root < g.vertex_count(); ++root) {
        Enumerator e(g, root, nullptr, nullptr, budget);
        e.assign(0);
        result.count += e.count;
        if (e.best > result.max_leaves) {
            result.max_leaves = e.best;
            result.witness = e.best_tree();
        }
    }
    return result;
}

int oracle_tl_max(const Digraph& g, const OutTree& t, const std::set<int>& l,
                  const OracleBudget& budget) {
    check_budget(g, budget);
    for (int v : l)
        if (t.is_internal(v))
            throw std::invalid_argument("oracle_tl_max: improper argument, L meets Int(T)");
    Enumerator e(g, t.root(), &t, &l, budget);
    e.assign(0);
    return e.best < 0 ? 0 : e.best;
}

}  // namespace mlob
