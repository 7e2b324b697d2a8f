#include <doctest.h>

#include "mlob/digraph.hpp"
#include "mlob/oracle.hpp"
#include "mlob/outtree.hpp"
#include "mlob/solver.hpp"
#include "testutil.hpp"

using namespace mlob;
using namespace mlob::test;

TEST_CASE("single-vertex tree has one leaf") {
    OutTree t(1, 0);
    CHECK(t.leaf_count() == 1);
    CHECK(t.is_leaf(0));
    CHECK(t.parent(0) == -1);
}

TEST_CASE("leaves and internals") {
    OutTree t(4, 0);
    t.add_arc(0, 1);
    t.add_arc(1, 2);
    t.add_arc(1, 3);
    CHECK(t.leaves() == std::vector<int>{2, 3});
    CHECK(t.is_internal(0));
    CHECK(t.is_internal(1));
    CHECK_THROWS_AS(t.add_arc(0, 2), std::invalid_argument);  // 2 already present
}

TEST_CASE("subtree examples") {
    OutTree t(4, 0);
    t.add_arc(0, 1);
    t.add_arc(1, 2);
    t.add_arc(1, 3);
    SUBCASE("inner subtree") {
        OutTree s = t.subtree(1);
        CHECK(s.root() == 1);
        CHECK(s.size() == 3);
        CHECK(s.arcs() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}});
    }
    SUBCASE("subtree of the root is the tree") {
        OutTree s = t.subtree(0);
        CHECK(s.arcs() == t.arcs());
    }
    SUBCASE("subtree of a leaf") {
        OutTree s = t.subtree(3);
        CHECK(s.size() == 1);
        CHECK(s.leaf_count() == 1);
    }
    SUBCASE("vertex outside the tree") {
        OutTree small(4, 0);
        CHECK_THROWS_AS(small.subtree(2), std::invalid_argument);
    }
}

TEST_CASE("grow_tree follows forced arcs then fans out") {
    SUBCASE("chain then fan") {
        // a=1: 1->2 forced, then 2->{3,4}.
        Digraph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
        SearchState s(g, 0);
        s.tree.add_arc(0, 1);
        s.refresh_dhat();
        OutTree grown = grow_tree(s, 1);
        CHECK(grown.root() == 1);
        CHECK(grown.leaf_count() == 2);
        CHECK(s.tree.contains(3));
        CHECK(s.tree.contains(4));
    }
    SUBCASE("pure path gives a single leaf") {
        Digraph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
        SearchState s(g, 0);
        s.tree.add_arc(0, 1);
        s.refresh_dhat();
        OutTree grown = grow_tree(s, 1);
        CHECK(grown.leaf_count() == 1);
        CHECK(s.tree.size() == 4);
    }
    SUBCASE("immediate fan skips the while loop") {
        Digraph g = make_graph(4, {{0, 1}, {1, 2}, {1, 3}});
        SearchState s(g, 0);
        s.tree.add_arc(0, 1);
        s.refresh_dhat();
        OutTree grown = grow_tree(s, 1);
        CHECK(grown.leaf_count() == 2);
        CHECK(grown.subtree_vertices(1) == std::vector<int>{1, 2, 3});
    }
    SUBCASE("no out-arc is a contract violation") {
        Digraph g = make_graph(2, {{0, 1}});
        SearchState s(g, 0);
        s.tree.add_arc(0, 1);
        s.refresh_dhat();
        CHECK_THROWS_AS(grow_tree(s, 1), std::logic_error);
    }
}

TEST_CASE("grow_tree leaves L outside Int(T)") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Digraph g = random_gnp(6, 0.4, 8000 + trial);
        std::mt19937_64 local(trial);
        OutTree t = random_tree(g, local);
        SearchState s(g, t.root());
        for (auto [u, v] : t.arcs()) s.tree.add_arc(u, v);
        s.l_set = random_l(g, s.tree, local);
        s.refresh_dhat();
        int x = -1;
        for (int v : s.tree.leaves())
            if (!s.l_set.count(v) && s.dhat.out_degree(v) > 0) x = v;
        if (x == -1) continue;
        OutTree grown = grow_tree(s, x);
        CHECK(grown.leaf_count() >= 1);
        CHECK(s.proper());
        for (int v : s.l_set) CHECK_FALSE(s.tree.is_internal(v));
    }
}

TEST_CASE("extend_to_branching examples") {
    SUBCASE("fills in the rest") {
        Digraph g = make_graph(4, {{0, 1}, {0, 2}, {1, 3}});
        OutTree t(4, 0);
        t.add_arc(0, 1);
        t.add_arc(0, 2);
        auto b = extend_to_branching(g, t);
        REQUIRE(b.has_value());
        CHECK(b->size() == 4);
        CHECK(b->leaf_count() == 2);
    }
    SUBCASE("already spanning is returned unchanged") {
        Digraph g = make_graph(3, {{0, 1}, {1, 2}});
        OutTree t(3, 0);
        t.add_arc(0, 1);
        t.add_arc(1, 2);
        auto b = extend_to_branching(g, t);
        REQUIRE(b.has_value());
        CHECK(b->arcs() == t.arcs());
    }
    SUBCASE("single-leaf extension") {
        Digraph g = make_graph(3, {{0, 1}, {1, 2}});
        OutTree t(3, 0);
        t.add_arc(0, 1);
        auto b = extend_to_branching(g, t);
        REQUIRE(b.has_value());
        CHECK(b->leaf_count() == 1);
    }
    SUBCASE("impossible extension is empty") {
        Digraph g = make_graph(3, {{0, 1}});
        CHECK_FALSE(extend_to_branching(g, OutTree(3, 0)).has_value());
    }
}

TEST_CASE("extension never decreases the leaf count") {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int trial = 0; checked < 300; ++trial) {
        REQUIRE(trial < 6000);
        Digraph g = random_gnp(6, 0.35, 12000 + trial);
        OutTree t = random_tree(g, rng, 4);
        auto b = extend_to_branching(g, t);
        if (!b) continue;
        CHECK(b->leaf_count() >= t.leaf_count());
        CHECK(valid_branching(g, *b, t.leaf_count()));
        // The oracle's best extension can only be at least as good.
        CHECK(oracle_tl_max(g, t, {}) >= b->leaf_count());
        ++checked;
    }
}
