#ifndef MLOB_SOLVER_HPP
#define MLOB_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "mlob/digraph.hpp"
#include "mlob/outtree.hpp"

namespace mlob {

/// Search-tree instrumentation for the branching solvers.
struct Telemetry {
    long long nodes_visited = 0;
    int max_depth = 0;
    long long l_branches = 0;     // child calls that extend L
    long long grow_branches = 0;  // child calls that grow T
};

struct SolveOutcome {
    bool yes = false;
    std::optional<OutTree> witness;  // present on YES
    Telemetry telemetry;
};

/// The triple (D,T,L) plus the cached derived graph and, for algorithm B,
/// the red-vertex bookkeeping. Cloned wholesale when the search branches.
struct SearchState {
    const Digraph* graph = nullptr;
    OutTree tree;
    std::set<int> l_set;
    Digraph dhat;                      // derived_graph(*graph, tree, l_set)
    std::set<int> red;                 // red-colored branch pivots
    std::map<int, Digraph> snapshots;  // red vertex -> H_x, dhat at coloring time

    SearchState(const Digraph& g, int root);

    void refresh_dhat();

    /// Proper argument: L contains no internal vertex of T.
    bool proper() const;
};

/// True iff l_max(D,T,L) >= 1: the root of T reaches every vertex in dhat.
bool tl_branching_exists(const SearchState& s);

/// Step (2) of both algorithms: while some leaf x of T outside L has
/// l_max(D,T,L+{x}) = 0, add the dhat out-arcs of x to T. Scans leaves in
/// ascending insertion order and restarts after every change.
void force_internal_pass(SearchState& s);

/// GrowTree: starting at leaf x, follow the unique dhat out-arc while the
/// current endpoint has dhat out-degree 1, then add all out-arcs of the
/// final vertex. Mutates s (tree and dhat) and returns the grown subtree
/// T^root(x). Throws std::logic_error if x has no out-arc in dhat.
OutTree grow_tree(SearchState& s, int x);

/// Step (4.2) path start: a vertex p0 outside V(T_z) with an arc of
/// H_z - A+_dhat(z) into the part of T_z that can still reach N+_dhat(z).
/// Smallest index among the valid choices. Throws std::logic_error when no
/// valid p0 exists.
int find_p0(const SearchState& s, int z);

/// Algorithm A: decides whether g has an out-branching with >= k leaves,
/// in 4^k * n^O(1) time. On YES the witness has >= k leaves.
SolveOutcome algo_a(const Digraph& g, int k);

/// Observation hook for find_p0 calls (state at the moment of the call,
/// the red ancestor z, and the chosen p0).
using P0Observer = std::function<void(const SearchState&, int, int)>;

/// Algorithm B: same decision contract as algo_a, in 3.72^k * n^O(1) time.
/// Branch pivots are chosen depth-first (last vertex added to T that is a
/// leaf outside L) and the step (4.2) refinement may put an extra vertex
/// into L.
SolveOutcome algo_b(const Digraph& g, int k, const P0Observer& observer = {});

}  // namespace mlob

#endif
