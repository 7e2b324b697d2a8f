#ifndef MLOB_ORACLE_HPP
#define MLOB_ORACLE_HPP

#include <optional>
#include <set>

#include "mlob/digraph.hpp"
#include "mlob/outtree.hpp"

namespace mlob {

/// Hard limits for the brute-force enumeration. The oracle refuses
/// instances beyond the caps instead of truncating silently.
struct OracleBudget {
    int max_vertices = 10;
    long long max_arborescences = 50'000'000;
};

struct OracleResult {
    int max_leaves = 0;
    std::optional<OutTree> witness;
    long long count = 0;  // number of out-branchings enumerated
};

/// Exact l_max(D) by enumerating every spanning arborescence over every
/// root. Throws std::runtime_error when a budget cap is hit.
OracleResult oracle_max_leaves(const Digraph& g, const OracleBudget& budget = {});

/// Exact l_max(D,T,L): maximum leaves over all (T,L)-out-branchings
/// (supergraphs of A(t) rooted at root(t) with every vertex of l a leaf).
/// 0 when none exists. Throws on improper arguments or budget caps.
int oracle_tl_max(const Digraph& g, const OutTree& t, const std::set<int>& l,
                  const OracleBudget& budget = {});

}  // namespace mlob

#endif
