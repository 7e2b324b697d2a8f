#ifndef MLOB_EXACT_HPP
#define MLOB_EXACT_HPP

#include <optional>
#include <set>

#include "mlob/digraph.hpp"
#include "mlob/outtree.hpp"

namespace mlob {

struct ExactOutcome {
    int max_leaves = 0;  // 0 when g has no out-branching
    std::optional<OutTree> witness;
    int stage_reached = 1;
};

/// True iff deleting all out-arcs of s leaves a digraph with an
/// out-branching. When true, every out-branching of that digraph has all
/// of s as leaves.
bool leaves_feasible(const Digraph& g, const std::set<int>& s);

/// ADML: exact maximum leaf count over all out-branchings of g.
/// Stage 1 decides k = ceil(0.526 n) with algorithm B and binary-searches
/// below the threshold on NO; stage 2 scans k upward, testing all vertex
/// sets S of size k for feasibility, and returns the last feasible k.
ExactOutcome adml(const Digraph& g);

}  // namespace mlob

#endif
