#include "steinerlab/graphs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "steinerlab/errors.hpp"

namespace steinerlab {

void validate_graph(const SimpleGraph& g) {
    if (g.n < 1) throw ValidationError("graph needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            throw ValidationError("graph edge endpoint out of range");
        if (u == v) throw ValidationError("graph has a self-loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ValidationError("graph has parallel edges");
    }
}

std::vector<std::vector<int>> adjacency_lists(const SimpleGraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

int max_degree(const SimpleGraph& g) {
    const auto adj = adjacency_lists(g);
    int best = 0;
    for (const auto& a : adj) best = std::max(best, static_cast<int>(a.size()));
    return best;
}

namespace {

/// Exact maximum clique size by subset DFS (n <= 10 after the caller's cap).
int max_clique_size(const SimpleGraph& g) {
    std::vector<unsigned> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    int best = 1;
    std::function<void(unsigned, int)> rec = [&](unsigned cand, int size) {
        best = std::max(best, size);
        if (size + __builtin_popcount(cand) <= best) return;
        if (!cand) return;
        const int v = __builtin_ctz(cand);
        rec(cand & adj[v], size + 1);
        rec(cand & ~(1u << v), size);
    };
    rec((1u << g.n) - 1u, 0);
    return best;
}

bool try_k_coloring(const std::vector<std::vector<int>>& adj, int k, std::vector<int>& colors,
                    const std::vector<int>& order, std::size_t pos, int used) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    // only allow colors up to used+1 to kill color-permutation symmetry
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int w : adj[v])
            if (colors[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[v] = c;
        if (try_k_coloring(adj, k, colors, order, pos + 1, std::max(used, c + 1))) return true;
        colors[v] = -1;
    }
    return false;
}

}  // namespace

int exact_chromatic_number(const SimpleGraph& g) {
    const auto colors = optimal_coloring(g);
    return *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<int> optimal_coloring(const SimpleGraph& g) {
    validate_graph(g);
    if (g.n > 10) throw CapError("exact_chromatic_number cap exceeded (n <= 10)");
    if (g.edges.empty()) return std::vector<int>(g.n, 0);

    const auto adj = adjacency_lists(g);
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return adj[a].size() > adj[b].size(); });

    const int lb = max_clique_size(g);
    for (int k = lb; k <= g.n; ++k) {
        std::vector<int> colors(g.n, -1);
        if (try_k_coloring(adj, k, colors, order, 0, 0)) return colors;
    }
    throw SolverError("coloring search failed");  // unreachable
}

int min_vertex_cover_size(const SimpleGraph& g) {
    validate_graph(g);
    if (g.n > 20) throw CapError("min_vertex_cover_size cap exceeded (n <= 20)");
    int best = g.n;
    for (unsigned mask = 0; mask < (1u << g.n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (auto [u, v] : g.edges)
            if (!((mask >> u) & 1u) && !((mask >> v) & 1u)) {
                covers = false;
                break;
            }
        if (covers) best = size;
    }
    return best;
}

}  // namespace steinerlab
