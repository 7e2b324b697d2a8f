#ifndef MLOB_TESTUTIL_HPP
#define MLOB_TESTUTIL_HPP

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mlob/digraph.hpp"
#include "mlob/io.hpp"
#include "mlob/outtree.hpp"

namespace mlob::test {

inline Digraph make_graph(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph g(n);
    for (auto [u, v] : arcs) g.add_arc(u, v);
    return g;
}

/// All ordered pairs (u,v), u != v, on n vertices, in a fixed order.
inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) pairs.emplace_back(u, v);
    return pairs;
}

/// The digraph on n vertices whose arc set is selected by `mask` over
/// all_pairs(n). Enumerating mask in [0, 2^(n(n-1))) visits every simple
/// digraph on n labelled vertices exactly once.
inline Digraph graph_from_mask(int n, std::uint64_t mask) {
    auto pairs = all_pairs(n);
    Digraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) g.add_arc(pairs[i].first, pairs[i].second);
    return g;
}

inline Digraph random_gnp(int n, double p, std::uint64_t seed) {
    return generate({InstanceSpec::Kind::Gnp, n, p, seed});
}

inline Digraph random_dag(int n, double p, std::uint64_t seed) {
    return generate({InstanceSpec::Kind::RandomSingleSourceDag, n, p, seed});
}

/// A random out-tree of g: random root, then a few random attachments
/// along arcs of g leaving the tree.
inline OutTree random_tree(const Digraph& g, std::mt19937_64& rng, int max_extra = 3) {
    std::uniform_int_distribution<int> pick_root(0, g.vertex_count() - 1);
    OutTree t(g.vertex_count(), pick_root(rng));
    std::uniform_int_distribution<int> grow(0, max_extra);
    int steps = grow(rng);
    for (int i = 0; i < steps; ++i) {
        std::vector<std::pair<int, int>> frontier;
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (!t.contains(u)) continue;
            for (int v : g.out(u))
                if (!t.contains(v)) frontier.emplace_back(u, v);
        }
        if (frontier.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
        auto [u, v] = frontier[pick(rng)];
        t.add_arc(u, v);
    }
    return t;
}

/// A random L disjoint from Int(T).
inline std::set<int> random_l(const Digraph& g, const OutTree& t, std::mt19937_64& rng,
                              double p = 0.25) {
    std::set<int> l;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!t.is_internal(v) && coin(rng) < p) l.insert(v);
    return l;
}

/// Independent witness check: spanning out-branching of g, rooted at
/// t.root(), containing arcs of g only, with at least k leaves.
inline bool valid_branching(const Digraph& g, const OutTree& t, int k) {
    if (t.size() != g.vertex_count()) return false;
    for (auto [u, v] : t.arcs())
        if (!g.has_arc(u, v)) return false;
    return t.leaf_count() >= k;
}

}  // namespace mlob::test

#endif
