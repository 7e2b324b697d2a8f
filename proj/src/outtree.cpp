#include "mlob/outtree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "mlob/digraph.hpp"

namespace mlob {

OutTree::OutTree(int n, int root) : root_(root) {
    if (n <= 0) throw std::invalid_argument("OutTree: host size must be positive");
    if (root < 0 || root >= n) throw std::invalid_argument("OutTree: root out of range");
    parent_.assign(n, -1);
    in_tree_.assign(n, 0);
    children_.resize(n);
    in_tree_[root] = 1;
    order_.push_back(root);
}

int OutTree::parent(int v) const {
    if (!contains(v)) throw std::invalid_argument("OutTree: vertex not in tree");
    return parent_[v];
}

void OutTree::add_arc(int u, int v) {
    if (!contains(u)) throw std::invalid_argument("OutTree::add_arc: parent not in tree");
    if (contains(v)) throw std::invalid_argument("OutTree::add_arc: child already in tree");
    parent_[v] = u;
    in_tree_[v] = 1;
    children_[u].push_back(v);
    order_.push_back(v);
}

std::vector<int> OutTree::leaves() const {
    std::vector<int> result;
    for (int v : order_)
        if (children_[v].empty()) result.push_back(v);
    return result;
}

int OutTree::leaf_count() const {
    int count = 0;
    for (int v : order_)
        if (children_[v].empty()) ++count;
    return count;
}

std::vector<int> OutTree::subtree_vertices(int x) const {
    if (!contains(x)) throw std::invalid_argument("OutTree::subtree_vertices: vertex not in tree");
    std::vector<char> mark(in_tree_.size(), 0);
    mark[x] = 1;
    std::deque<int> queue{x};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int c : children_[v]) {
            mark[c] = 1;
            queue.push_back(c);
        }
    }
    std::vector<int> result;
    for (int v : order_)
        if (mark[v]) result.push_back(v);
    return result;
}

OutTree OutTree::subtree(int x) const {
    auto verts = subtree_vertices(x);  // throws if x absent; x comes first
    OutTree result(host_size(), x);
    for (int v : verts)
        if (v != x) result.add_arc(parent_[v], v);
    return result;
}

std::vector<std::pair<int, int>> OutTree::arcs() const {
    std::vector<std::pair<int, int>> result;
    for (int v : order_)
        if (parent_[v] != -1) result.emplace_back(parent_[v], v);
    return result;
}

OutTree extend_in_derived(const Digraph& dhat, OutTree t) {
    std::deque<int> queue(t.insertion_order().begin(), t.insertion_order().end());
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : dhat.out(u)) {
            if (t.contains(v)) continue;
            t.add_arc(u, v);
            queue.push_back(v);
        }
    }
    return t;
}

std::optional<OutTree> extend_to_branching(const Digraph& g, const OutTree& t) {
    OutTree extended = extend_in_derived(derived_graph(g, t, {}), t);
    if (extended.size() != g.vertex_count()) return std::nullopt;
    return extended;
}

}  // namespace mlob
