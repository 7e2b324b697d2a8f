#ifndef MLOB_OUTTREE_HPP
#define MLOB_OUTTREE_HPP

#include <optional>
#include <utility>
#include <vector>

namespace mlob {

class Digraph;

/// Rooted out-tree over the vertex ids of some host digraph.
/// Vertices with no children are leaves; a single-vertex tree has one leaf
/// (its root). Children lists and the insertion-order record preserve the
/// order in which vertices were attached.
class OutTree {
public:
    OutTree() = default;
    OutTree(int n, int root);

    int host_size() const { return static_cast<int>(in_tree_.size()); }
    int root() const { return root_; }
    int size() const { return static_cast<int>(order_.size()); }
    bool contains(int v) const { return in_tree_.at(v) != 0; }

    /// Parent of v, or -1 for the root. Throws if v is not in the tree.
    int parent(int v) const;
    const std::vector<int>& children(int v) const { return children_.at(v); }
    const std::vector<int>& insertion_order() const { return order_; }

    /// Attaches v under u. u must be in the tree, v must not.
    void add_arc(int u, int v);

    bool is_leaf(int v) const { return contains(v) && children_.at(v).empty(); }
    bool is_internal(int v) const { return contains(v) && !children_.at(v).empty(); }
    std::vector<int> leaves() const;
    int leaf_count() const;

    /// Vertices of the maximal subtree rooted at x, in insertion order.
    std::vector<int> subtree_vertices(int x) const;

    /// The maximal subtree T_x as its own OutTree (same host size).
    OutTree subtree(int x) const;

    /// Tree arcs (parent, child) in child insertion order.
    std::vector<std::pair<int, int>> arcs() const;

private:
    int root_ = -1;
    std::vector<int> parent_;
    std::vector<char> in_tree_;
    std::vector<std::vector<int>> children_;
    std::vector<int> order_;
};

/// Extends t to an out-branching of g rooted at root(t) containing all of
/// t's arcs, if one exists; otherwise empty. Never decreases the leaf count.
std::optional<OutTree> extend_to_branching(const Digraph& g, const OutTree& t);

/// Extension step in a caller-supplied derived graph: BFS from V(t) in dhat,
/// attaching each newly reached vertex by its discovery arc. The result may
/// be non-spanning; the caller checks size().
OutTree extend_in_derived(const Digraph& dhat, OutTree t);

}  // namespace mlob

#endif
