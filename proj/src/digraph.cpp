#include "mlob/digraph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "mlob/outtree.hpp"

namespace mlob {

Digraph::Digraph(int n) {
    if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
    out_.resize(n);
    in_.resize(n);
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("Digraph: vertex id out of range");
}

bool Digraph::has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = out_[u];
    return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
}

bool Digraph::add_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Digraph: self-loop rejected");
    if (has_arc(u, v)) return false;
    out_[u].push_back(v);
    in_[v].push_back(u);
    ++m_;
    return true;
}

bool Digraph::remove_arc(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    auto& ou = out_[u];
    auto it = std::find(ou.begin(), ou.end(), v);
    if (it == ou.end()) return false;
    ou.erase(it);
    auto& iv = in_[v];
    iv.erase(std::find(iv.begin(), iv.end(), u));
    --m_;
    return true;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : out_[u]) result.emplace_back(u, v);
    std::sort(result.begin(), result.end());
    return result;
}

bool Digraph::operator==(const Digraph& other) const {
    return vertex_count() == other.vertex_count() && arcs() == other.arcs();
}

namespace {

// Tarjan; components are emitted in reverse topological order.
struct SccState {
    const Digraph& g;
    std::vector<int> index, low, stack_pos;
    std::vector<int> stack;
    int counter = 0;
    std::vector<std::vector<int>> components;

    explicit SccState(const Digraph& graph)
        : g(graph),
          index(graph.vertex_count(), -1),
          low(graph.vertex_count(), -1),
          stack_pos(graph.vertex_count(), -1) {}

    void visit(int v) {
        index[v] = low[v] = counter++;
        stack_pos[v] = static_cast<int>(stack.size());
        stack.push_back(v);
        for (int w : g.out(v)) {
            if (index[w] == -1) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (stack_pos[w] != -1) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp(stack.begin() + stack_pos[v], stack.end());
            for (int w : comp) stack_pos[w] = -1;
            stack.resize(stack.size() - comp.size());
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }
    }
};

}  // namespace

std::vector<std::vector<int>> strong_components(const Digraph& g) {
    SccState state(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (state.index[v] == -1) state.visit(v);
    return state.components;
}

std::optional<std::vector<int>> out_branching_root_component(const Digraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    auto comps = strong_components(g);
    std::vector<int> comp_of(n, -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (int v : comps[c]) comp_of[v] = c;
    std::vector<char> has_incoming(comps.size(), 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.out(u))
            if (comp_of[u] != comp_of[v]) has_incoming[comp_of[v]] = 1;
    int source = -1;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        if (!has_incoming[c]) {
            if (source != -1) return std::nullopt;  // two source components
            source = c;
        }
    }
    return comps[source];
}

std::vector<int> reachable_set(const Digraph& g, int from, const ArcFilter& keep) {
    if (from < 0 || from >= g.vertex_count())
        throw std::invalid_argument("reachable_set: vertex out of range");
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<int> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.out(u)) {
            if (seen[v]) continue;
            if (keep && !keep(u, v)) continue;
            seen[v] = 1;
            queue.push_back(v);
        }
    }
    std::vector<int> result;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (seen[v]) result.push_back(v);
    return result;
}

Digraph derived_graph(const Digraph& g, const OutTree& t, const std::set<int>& l) {
    for (int v : l)
        if (t.is_internal(v))
            throw std::invalid_argument("derived_graph: L contains an internal vertex of T");
    Digraph result(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (l.count(u)) continue;  // out-arcs of L removed
        for (int v : g.out(u)) {
            // non-tree arcs entering V(T) are removed
            if (t.contains(v) && !(t.contains(u) && t.parent(v) == u)) continue;
            result.add_arc(u, v);
        }
    }
    return result;
}

}  // namespace mlob
