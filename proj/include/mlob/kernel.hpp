#ifndef MLOB_KERNEL_HPP
#define MLOB_KERNEL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mlob/digraph.hpp"
#include "mlob/outtree.hpp"

namespace mlob {

enum class Rule { A, B };

/// One reduction step, recorded in original vertex ids.
/// Rule A contracts arc x->y (y is merged into x, which keeps x's in-arcs
/// and inherits y's out-arcs). Rule B deletes x and adds u->v for every
/// u in in_nbrs, v in out_nbrs; `added` lists the arcs that were actually
/// new (pre-existing ones are not duplicated).
struct ReductionRecord {
    Rule rule;
    int x = -1;
    int y = -1;
    std::vector<int> in_nbrs;
    std::vector<int> out_nbrs;
    std::vector<std::pair<int, int>> added;
};

struct ReduceResult {
    Digraph dstar;             // the reduced digraph, compacted ids
    std::vector<int> to_old;   // dstar id -> original id
    std::vector<int> to_new;   // original id -> dstar id, -1 if removed
    std::vector<ReductionRecord> trace;
    int rule_a_count = 0;
    int rule_b_count = 0;
};

enum class KernelVerdict { YesWithWitness, Reduced };

struct KernelResult {
    KernelVerdict verdict;
    std::optional<OutTree> witness;  // on the original digraph
    std::optional<Digraph> reduced;  // D* when verdict is Reduced
    int reduced_k = 0;
    ReduceResult reduction;
};

/// The unique in-degree-0 vertex of an acyclic digraph, or empty when
/// there is none or more than one. Throws std::invalid_argument if g has
/// a cycle.
std::optional<int> check_single_source(const Digraph& g);

/// Applies reduction rules A and B as long as possible. Requires an
/// acyclic digraph with a single source. The result is acyclic with a
/// single source and preserves, for every k, whether a k-out-branching
/// exists.
ReduceResult reduce(const Digraph& g);

/// Greedy bidominating set on the bipartite double cover of the reduced
/// digraph: returns R = S + {source}, where S greedily covers every
/// non-source vertex that is not an in-degree-1 out-neighbor of the
/// source. Every non-source vertex of dstar has an in-neighbor in R.
std::vector<int> bidominate(const Digraph& dstar);

/// Linear kernel for single-source acyclic digraphs. When the reduced
/// instance has at least 6.6(k+2) vertices the answer is YES and a witness
/// with >= k leaves is built on the original digraph; otherwise the
/// reduced instance (with fewer than 6.6(k+2) vertices) is returned.
KernelResult kernelize(const Digraph& g, int k);

/// Replays the reduction trace backwards, turning an out-branching of D*
/// into an out-branching of g with at least as many leaves.
OutTree lift_witness(const Digraph& g, const ReduceResult& red, const OutTree& t_star);

}  // namespace mlob

#endif
