#include <doctest.h>

#include <cmath>

#include "mlob/kernel.hpp"
#include "mlob/oracle.hpp"
#include "mlob/solver.hpp"
#include "testutil.hpp"

using namespace mlob;
using namespace mlob::test;

namespace {

// Replays a trace from scratch and compares with the reduction output.
Digraph replay(const Digraph& g, const ReduceResult& red) {
    std::vector<std::set<int>> out(g.vertex_count());
    std::vector<char> alive(g.vertex_count(), 1);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.out(u)) out[u].insert(v);
    auto in_degree = [&](int y) {
        int d = 0;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (alive[u] && out[u].count(y)) ++d;
        return d;
    };
    for (const ReductionRecord& rec : red.trace) {
        if (rec.rule == Rule::A) {
            REQUIRE(out[rec.x].size() == 1);
            REQUIRE(*out[rec.x].begin() == rec.y);
            REQUIRE(in_degree(rec.y) == 1);
            out[rec.x] = out[rec.y];
            out[rec.y].clear();
            alive[rec.y] = 0;
        } else {
            alive[rec.x] = 0;
            out[rec.x].clear();
            for (int u = 0; u < g.vertex_count(); ++u) out[u].erase(rec.x);
            for (auto [u, v] : rec.added) out[u].insert(v);
        }
    }
    Digraph result(red.dstar.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!alive[u]) continue;
        for (int v : out[u]) result.add_arc(red.to_new[u], red.to_new[v]);
    }
    return result;
}

}  // namespace

TEST_CASE("check_single_source examples") {
    CHECK(check_single_source(make_graph(3, {{0, 1}, {1, 2}})) == 0);
    CHECK_FALSE(check_single_source(make_graph(4, {{0, 1}, {2, 3}})).has_value());
    CHECK_FALSE(check_single_source(make_graph(3, {{0, 1}, {2, 1}})).has_value());
    CHECK_THROWS_AS(check_single_source(make_graph(2, {{0, 1}, {1, 0}})),
                    std::invalid_argument);
}

TEST_CASE("reduce examples") {
    SUBCASE("path contracts to a single vertex") {
        ReduceResult r = reduce(make_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
        CHECK(r.dstar.vertex_count() == 1);
        CHECK(r.rule_a_count == 3);
    }
    SUBCASE("splice below the source") {
        // s=0 -> x=1 -> {2,3}: rule application leaves the out-star on s.
        Digraph g = make_graph(4, {{0, 1}, {1, 2}, {1, 3}});
        ReduceResult r = reduce(g);
        CHECK(r.dstar.vertex_count() == 3);
        CHECK(oracle_max_leaves(r.dstar).max_leaves == oracle_max_leaves(g).max_leaves);
    }
    SUBCASE("fixpoint instance is unchanged") {
        // all non-source in-degrees are 2
        Digraph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        // in-degree of 1 is 1 with in-neighbor 0 = s: no rule applies
        ReduceResult r = reduce(g);
        CHECK(r.dstar.vertex_count() == 4);
        CHECK(r.trace.empty());
    }
}

TEST_CASE("pure rule B application") {
    // s=0 -> {1,4}, 1 -> {2,3}, 4 -> 2: arc 1->3 has indeg(3)=1, outdeg(1)=2.
    Digraph g = make_graph(5, {{0, 1}, {0, 4}, {1, 2}, {1, 3}, {4, 2}});
    ReduceResult r = reduce(g);
    CHECK(r.rule_b_count >= 1);
    CHECK(oracle_max_leaves(r.dstar).max_leaves == oracle_max_leaves(g).max_leaves);
}

TEST_CASE("reduction soundness and degree property on random DAGs") {
    std::mt19937_64 rng(91);
    std::uniform_int_distribution<int> sizes(3, 9);
    std::uniform_real_distribution<double> density(0.1, 0.5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = sizes(rng);
        Digraph g = random_dag(n, density(rng), 80000 + trial);
        ReduceResult r = reduce(g);
        auto source = check_single_source(r.dstar);
        REQUIRE(source.has_value());
        // l_max is preserved by the full reduction.
        CHECK(oracle_max_leaves(g).max_leaves == oracle_max_leaves(r.dstar).max_leaves);
        // In D*, in-degree-1 vertices other than s have s as in-neighbor.
        for (int v = 0; v < r.dstar.vertex_count(); ++v) {
            if (v == *source) continue;
            CHECK(r.dstar.in_degree(v) >= 1);
            if (r.dstar.in_degree(v) == 1) CHECK(r.dstar.in(v)[0] == *source);
        }
        // Replaying the trace reproduces D*.
        CHECK(replay(g, r) == r.dstar);
    }
}

TEST_CASE("each single rule application preserves the oracle maximum") {
    std::mt19937_64 rng(93);
    for (int trial = 0; trial < 120; ++trial) {
        Digraph g = random_dag(8, 0.25, 90000 + trial);
        ReduceResult r = reduce(g);
        if (r.trace.empty()) continue;
        // Check the first record only: apply it alone and compare oracles.
        ReduceResult one = r;
        one.trace.resize(1);
        Digraph after_one = [&] {
            std::vector<std::set<int>> out(g.vertex_count());
            std::vector<char> alive(g.vertex_count(), 1);
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v : g.out(u)) out[u].insert(v);
            const ReductionRecord& rec = r.trace.front();
            if (rec.rule == Rule::A) {
                out[rec.x] = out[rec.y];
                out[rec.y].clear();
                alive[rec.y] = 0;
            } else {
                alive[rec.x] = 0;
                out[rec.x].clear();
                for (int u = 0; u < g.vertex_count(); ++u) out[u].erase(rec.x);
                for (auto [u, v] : rec.added) out[u].insert(v);
            }
            std::vector<int> to_new(g.vertex_count(), -1);
            int next = 0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (alive[v]) to_new[v] = next++;
            Digraph h(next);
            for (int u = 0; u < g.vertex_count(); ++u)
                if (alive[u])
                    for (int v : out[u]) h.add_arc(to_new[u], to_new[v]);
            return h;
        }();
        CHECK(oracle_max_leaves(g).max_leaves == oracle_max_leaves(after_one).max_leaves);
    }
}

TEST_CASE("bidominate covers and respects the size bound") {
    SUBCASE("out-star is covered by the source alone") {
        Digraph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
        auto r = bidominate(star);
        CHECK(r == std::vector<int>{0});
    }
    SUBCASE("random reduced DAGs") {
        for (int trial = 0; trial < 150; ++trial) {
            Digraph g = random_dag(9, 0.35, 100000 + trial);
            Digraph dstar = reduce(g).dstar;
            if (dstar.vertex_count() < 2) continue;
            auto r = bidominate(dstar);
            std::set<int> rset(r.begin(), r.end());
            auto s = check_single_source(dstar);
            for (int v = 0; v < dstar.vertex_count(); ++v) {
                if (v == *s) continue;
                bool covered = false;
                for (int u : dstar.in(v)) covered = covered || rset.count(u);
                CHECK(covered);
            }
            double bound = dstar.vertex_count() / 2.0 * (1.0 + std::log(2.0)) + 1.0;
            CHECK(static_cast<double>(r.size() - 1) <= bound);
        }
    }
}

TEST_CASE("in-degree-1 selections on reduced DAGs are out-branchings") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 150; ++trial) {
        Digraph dstar = reduce(random_dag(8, 0.3, 110000 + trial)).dstar;
        auto s = check_single_source(dstar);
        REQUIRE(s.has_value());
        // Pick a random in-arc for every non-source vertex.
        std::vector<int> parent(dstar.vertex_count(), -1);
        bool ok = true;
        for (int v = 0; v < dstar.vertex_count(); ++v) {
            if (v == *s) continue;
            const auto& in = dstar.in(v);
            if (in.empty()) {
                ok = false;
                break;
            }
            std::uniform_int_distribution<std::size_t> pick(0, in.size() - 1);
            parent[v] = in[pick(rng)];
        }
        REQUIRE(ok);
        // Connected and acyclic: walking up from anywhere hits the source.
        for (int v = 0; v < dstar.vertex_count(); ++v) {
            int w = v, steps = 0;
            while (w != *s) {
                w = parent[w];
                REQUIRE(w != -1);
                REQUIRE(++steps <= dstar.vertex_count());
            }
        }
    }
}

TEST_CASE("kernelize decisions match direct solving on small DAGs") {
    for (int trial = 0; trial < 120; ++trial) {
        Digraph g = random_dag(9, 0.3, 120000 + trial);
        int best = oracle_max_leaves(g).max_leaves;
        for (int k = 1; k <= 6; ++k) {
            KernelResult kr = kernelize(g, k);
            bool decided;
            if (kr.verdict == KernelVerdict::YesWithWitness) {
                decided = true;
                CHECK(valid_branching(g, *kr.witness, k));
            } else {
                CHECK(10LL * kr.reduced->vertex_count() < 66LL * (k + 2));
                decided = algo_b(*kr.reduced, k).yes;
            }
            CHECK(decided == (best >= k));
        }
    }
}

TEST_CASE("kernelize yields an immediate witness above the size threshold") {
    // k = 1 and a long two-strand DAG that reduces poorly enough... build a
    // wide DAG whose reduction keeps >= 20 vertices.
    std::mt19937_64 rng(101);
    int found = 0;
    for (int trial = 0; trial < 400 && found < 20; ++trial) {
        Digraph g = random_dag(30, 0.25, 130000 + trial);
        ReduceResult r = reduce(g);
        int n_star = r.dstar.vertex_count();
        if (10LL * n_star < 66LL * 3) continue;
        KernelResult kr = kernelize(g, 1);
        REQUIRE(kr.verdict == KernelVerdict::YesWithWitness);
        CHECK(valid_branching(g, *kr.witness, 1));
        // Guaranteed leaf yield of the constructed witness: >= 0.153 n* - 2.
        CHECK(kr.witness->leaf_count() >=
              static_cast<int>(std::ceil(0.153 * n_star)) - 2);
        ++found;
    }
    CHECK(found > 0);
}

TEST_CASE("lift_witness preserves leaf counts") {
    SUBCASE("empty trace is the identity") {
        Digraph g = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
        ReduceResult r;
        r.dstar = g;
        r.to_old = {0, 1, 2};
        r.to_new = {0, 1, 2};
        OutTree t(3, 0);
        t.add_arc(0, 1);
        t.add_arc(0, 2);
        OutTree lifted = lift_witness(g, r, t);
        CHECK(lifted.arcs() == t.arcs());
    }
    SUBCASE("chains of rule A keep the leaf count") {
        for (int trial = 0; trial < 80; ++trial) {
            Digraph g = random_dag(7, 0.15, 140000 + trial);
            ReduceResult r = reduce(g);
            OracleResult best = oracle_max_leaves(r.dstar);
            if (!best.witness) continue;
            OutTree lifted = lift_witness(g, r, *best.witness);
            CHECK(valid_branching(g, lifted, best.witness->leaf_count()));
            CHECK(lifted.leaf_count() >= best.witness->leaf_count());
            // The lift cannot beat the true optimum of g.
            CHECK(lifted.leaf_count() <= oracle_max_leaves(g).max_leaves);
        }
    }
}
