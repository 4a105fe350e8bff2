#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>

#include "steinerlab/errors.hpp"
#include "steinerlab/solvers.hpp"

namespace steinerlab {

namespace {

constexpr double kInfCost = std::numeric_limits<double>::infinity();

struct DstGraph {
    int num_terminals = 0;
    int num_vertices = 0;
    std::vector<std::vector<double>> direct;  // pairwise distances
    std::vector<std::vector<double>> sp;      // shortest-path closure
    std::vector<std::vector<int>> via;        // intermediate vertex or -1
};

DstGraph build_graph(const DstInstance& inst) {
    DstGraph g;
    g.num_terminals = static_cast<int>(inst.terminals.size());
    g.num_vertices = g.num_terminals + static_cast<int>(inst.facilities.size());
    std::vector<const Point*> pts;
    for (const auto& t : inst.terminals) pts.push_back(&t);
    for (const auto& f : inst.facilities) pts.push_back(&f);

    const int V = g.num_vertices;
    g.direct.assign(V, std::vector<double>(V, 0.0));
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
            g.direct[i][j] = g.direct[j][i] = distance(inst.metric, *pts[i], *pts[j]);

    g.sp = g.direct;
    g.via.assign(V, std::vector<int>(V, -1));
    for (int k = 0; k < V; ++k)
        for (int i = 0; i < V; ++i)
            for (int j = 0; j < V; ++j)
                if (g.sp[i][k] + g.sp[k][j] < g.sp[i][j] - 1e-12) {
                    g.sp[i][j] = g.sp[i][k] + g.sp[k][j];
                    g.via[i][j] = k;
                }
    return g;
}

void unpack_path(const DstGraph& g, int u, int v, std::set<std::pair<int, int>>& edges) {
    if (u == v) return;
    const int k = g.via[u][v];
    if (k < 0) {
        edges.insert({std::min(u, v), std::max(u, v)});
        return;
    }
    unpack_path(g, u, k, edges);
    unpack_path(g, k, v, edges);
}

SteinerTree tree_from_edges(const DstInstance& inst, const DstGraph& g,
                            const std::set<std::pair<int, int>>& edges, double expected_cost) {
    // Collect vertices, re-check tree shape; fall back to a Prim sweep over
    // the collected vertex set when zero-length ties produced a cycle.
    std::set<int> verts;
    for (int t = 0; t < g.num_terminals; ++t) verts.insert(t);
    for (const auto& [a, b] : edges) {
        verts.insert(a);
        verts.insert(b);
    }
    std::vector<int> order(verts.begin(), verts.end());
    std::vector<int> remap(g.num_vertices, -1);
    for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<int>(i);

    SteinerTree tree;
    for (int v : order) {
        if (v < g.num_terminals)
            tree.nodes.push_back(TreeNode::terminal(v));
        else
            tree.nodes.push_back(TreeNode::facility(v - g.num_terminals));
    }

    double total = 0.0;
    for (const auto& [a, b] : edges) total += g.direct[a][b];
    if (edges.size() + 1 == order.size() && total <= expected_cost + 1e-9) {
        SteinerTree candidate = tree;
        for (const auto& [a, b] : edges) candidate.edges.emplace_back(remap[a], remap[b]);
        candidate.cost = total;
        if (is_valid_tree(candidate, inst, /*require_all_terminals=*/true)) return candidate;
    }

    const int n = static_cast<int>(order.size());
    std::vector<char> in_tree(n, 0);
    std::vector<double> best(n, kInfCost);
    std::vector<int> parent(n, -1);
    in_tree[0] = 1;
    for (int i = 1; i < n; ++i) {
        best[i] = g.direct[order[0]][order[i]];
        parent[i] = 0;
    }
    tree.cost = 0.0;
    for (int added = 1; added < n; ++added) {
        int pick = -1;
        for (int i = 0; i < n; ++i)
            if (!in_tree[i] && (pick < 0 || best[i] < best[pick])) pick = i;
        in_tree[pick] = 1;
        tree.edges.emplace_back(parent[pick], pick);
        tree.cost += best[pick];
        for (int i = 0; i < n; ++i)
            if (!in_tree[i] && g.direct[order[pick]][order[i]] < best[i]) {
                best[i] = g.direct[order[pick]][order[i]];
                parent[i] = pick;
            }
    }
    if (tree.cost > expected_cost + 1e-6)
        throw SolverError("exact_dst reconstruction exceeded the optimal cost");
    return tree;
}

}  // namespace

SteinerTree exact_dst(const DstInstance& inst) {
    validate_instance(inst);
    const int T = static_cast<int>(inst.terminals.size());
    const int F = static_cast<int>(inst.facilities.size());
    if (T > 12) throw CapError("exact_dst terminal cap exceeded (12)");
    if (F > 256) throw CapError("exact_dst facility cap exceeded (256)");

    if (T == 1) {
        SteinerTree tree;
        tree.nodes.push_back(TreeNode::terminal(0));
        return tree;
    }

    const DstGraph g = build_graph(inst);
    const int V = g.num_vertices;
    const int root = inst.root_index;

    // Terminal bit positions skip the root.
    std::vector<int> bit_terminal;
    for (int t = 0; t < T; ++t)
        if (t != root) bit_terminal.push_back(t);
    const int nb = static_cast<int>(bit_terminal.size());
    const std::uint32_t full = (1u << nb) - 1u;

    // S[mask][v]: optimal tree spanning {v} + terminals in mask.
    // M[mask][v]: same before the shortest-path closure step.
    std::vector<std::vector<double>> S(full + 1, std::vector<double>(V, kInfCost));
    std::vector<std::vector<std::uint32_t>> split(full + 1, std::vector<std::uint32_t>(V, 0));
    std::vector<std::vector<int>> grow(full + 1, std::vector<int>(V, -1));

    for (int b = 0; b < nb; ++b) {
        const std::uint32_t mask = 1u << b;
        for (int v = 0; v < V; ++v) S[mask][v] = g.sp[v][bit_terminal[b]];
    }
    std::vector<double> merged(V);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        for (int v = 0; v < V; ++v) merged[v] = kInfCost;
        for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            const std::uint32_t other = mask ^ sub;
            if (sub < other) continue;  // each split once
            for (int v = 0; v < V; ++v) {
                const double c = S[sub][v] + S[other][v];
                if (c < merged[v]) {
                    merged[v] = c;
                    split[mask][v] = sub;
                }
            }
        }
        for (int v = 0; v < V; ++v) {
            double best = merged[v];
            int from = -1;
            for (int u = 0; u < V; ++u) {
                const double c = merged[u] + g.sp[u][v];
                if (c < best - 1e-15) {
                    best = c;
                    from = u;
                }
            }
            S[mask][v] = best;
            grow[mask][v] = from;
        }
    }

    std::set<std::pair<int, int>> edges;
    std::function<void(std::uint32_t, int)> rec_closed = [&](std::uint32_t mask, int v) {
        if (__builtin_popcount(mask) == 1) {
            unpack_path(g, v, bit_terminal[__builtin_ctz(mask)], edges);
            return;
        }
        const int u = grow[mask][v] >= 0 ? grow[mask][v] : v;
        if (u != v) unpack_path(g, u, v, edges);
        const std::uint32_t sub = split[mask][u];
        rec_closed(sub, u);
        rec_closed(mask ^ sub, u);
    };
    rec_closed(full, root);

    return tree_from_edges(inst, g, edges, S[full][root]);
}

SteinerTree brute_force_dst(const DstInstance& inst) {
    validate_instance(inst);
    const int F = static_cast<int>(inst.facilities.size());
    if (F > 20) throw CapError("brute_force_dst facility cap exceeded (20)");

    SteinerTree best;
    double best_cost = kInfCost;
    for (std::uint32_t mask = 0; mask < (1u << F); ++mask) {
        std::vector<Point> pts = inst.terminals;
        std::vector<int> fac_ids;
        for (int f = 0; f < F; ++f)
            if ((mask >> f) & 1u) {
                pts.push_back(inst.facilities[f]);
                fac_ids.push_back(f);
            }
        SteinerTree mst = mst_tree(pts, inst.metric);
        if (mst.cost < best_cost - 1e-15) {
            // relabel the appended facilities
            const int T = static_cast<int>(inst.terminals.size());
            for (auto& node : mst.nodes)
                if (node.index >= T) node = TreeNode::facility(fac_ids[node.index - T]);
            best = std::move(mst);
            best_cost = best.cost;
        }
    }
    return best;
}

}  // namespace steinerlab
