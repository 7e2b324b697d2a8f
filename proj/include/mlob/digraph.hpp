#ifndef MLOB_DIGRAPH_HPP
#define MLOB_DIGRAPH_HPP

#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace mlob {

class OutTree;

/// Simple digraph on vertices 0..n-1: no parallel arcs, no self-loops.
/// Adjacency is kept in both directions and stays mutually consistent.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int arc_count() const { return m_; }

    bool has_arc(int u, int v) const;

    /// Adds arc u->v. Returns false if the arc is already present.
    /// Throws std::invalid_argument on self-loops or out-of-range ids.
    bool add_arc(int u, int v);

    /// Removes arc u->v if present; returns whether it was there.
    bool remove_arc(int u, int v);

    const std::vector<int>& out(int u) const { return out_.at(u); }
    const std::vector<int>& in(int v) const { return in_.at(v); }
    int out_degree(int u) const { return static_cast<int>(out_.at(u).size()); }
    int in_degree(int v) const { return static_cast<int>(in_.at(v).size()); }

    /// All arcs as (u,v) pairs, sorted.
    std::vector<std::pair<int, int>> arcs() const;

    /// Arc-set equality (independent of insertion order).
    bool operator==(const Digraph& other) const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    int m_ = 0;
};

/// Strongly connected components, in reverse topological order of the
/// condensation (a component is listed before any component it can reach...
/// precisely: if C1 has an arc into C2 then C2 appears before C1).
std::vector<std::vector<int>> strong_components(const Digraph& g);

/// The unique source component of the condensation, if exactly one exists.
/// An out-branching of g exists iff this is nonempty, and then every
/// out-branching is rooted inside the returned component.
std::optional<std::vector<int>> out_branching_root_component(const Digraph& g);

/// Arc predicate: return true to keep the arc.
using ArcFilter = std::function<bool(int, int)>;

/// Forward reachability from `from`, restricted to arcs passing `keep`
/// (empty filter = all arcs). Always contains `from`. Sorted.
std::vector<int> reachable_set(const Digraph& g, int from, const ArcFilter& keep = {});

/// The derived graph D^(T,L): g minus all arcs out of vertices in l and
/// minus all arcs not in A(t) that enter V(t).
/// Throws std::invalid_argument if l contains an internal vertex of t.
Digraph derived_graph(const Digraph& g, const OutTree& t, const std::set<int>& l);

}  // namespace mlob

#endif
