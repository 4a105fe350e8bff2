#include "steinerlab/coloring.hpp"

#include <algorithm>
#include <cmath>

#include "steinerlab/errors.hpp"

namespace steinerlab {

bool is_proper(const SimpleGraph& g, const Coloring& pi) {
    if (static_cast<int>(pi.color.size()) != g.n) return false;
    for (int c : pi.color)
        if (c < 0 || c >= pi.num_colors) return false;
    for (auto [u, v] : g.edges)
        if (pi.color[u] == pi.color[v]) return false;
    return true;
}

bool is_proper(const OrientedGraph& og, const Coloring& pi) {
    SimpleGraph g{og.n, og.arcs};
    return is_proper(g, pi);
}

OrientedGraph orient_lexicographic(const SimpleGraph& g) {
    validate_graph(g);
    OrientedGraph og{g.n, {}};
    for (auto [u, v] : g.edges) og.arcs.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(og.arcs.begin(), og.arcs.end());
    return og;
}

std::pair<CstInstance, OrientedGraph> build_cst_instance(const SimpleGraph& g) {
    validate_graph(g);
    if (g.edges.empty()) throw ValidationError("coloring gadget requires at least one edge");
    const OrientedGraph og = orient_lexicographic(g);
    const int dim = static_cast<int>(og.arcs.size());

    CstInstance inst;
    inst.metric = Metric::linf();
    for (int v = 0; v < og.n; ++v) {
        Point t(dim, 0.0);
        for (int a = 0; a < dim; ++a) {
            if (og.arcs[a].first == v) t[a] = 1.0;
            if (og.arcs[a].second == v) t[a] = -1.0;
        }
        inst.terminals.push_back(std::move(t));
    }
    inst.terminals.emplace_back(dim, 0.0);  // root
    inst.root_index = og.n;
    return {std::move(inst), og};
}

SteinerTree completeness_tree_from_coloring(const OrientedGraph& og, const Coloring& pi) {
    if (!is_proper(og, pi))
        throw ValidationError("completeness tree requires a proper coloring");
    const int dim = static_cast<int>(og.arcs.size());
    const int a = pi.num_colors;

    std::vector<Point> sigma(a, Point(dim, 0.0));
    for (int arc = 0; arc < dim; ++arc) {
        const auto [u, v] = og.arcs[arc];
        sigma[pi.color[u]][arc] = 0.5;    // outgoing from u's class
        sigma[pi.color[v]][arc] = -0.5;   // incoming to v's class
    }

    SteinerTree tree;
    for (int v = 0; v <= og.n; ++v) tree.nodes.push_back(TreeNode::terminal(v));
    const int root_node = og.n;
    std::vector<int> sigma_node(a);
    for (int k = 0; k < a; ++k) {
        sigma_node[k] = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back(TreeNode::free_point(sigma[k]));
        tree.edges.emplace_back(sigma_node[k], root_node);
    }
    for (int v = 0; v < og.n; ++v) tree.edges.emplace_back(v, sigma_node[pi.color[v]]);
    tree.cost = 0.5 * (og.n + a);
    return tree;
}

namespace {

struct Workspace {
    std::vector<TreeNode> nodes;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> alive;

    int degree(int v) const {
        int d = 0;
        for (const auto& [a, b] : edges) d += (a == v) + (b == v);
        return d;
    }

    std::vector<char> root_side(int skip_edge, int root) const {
        std::vector<char> seen(nodes.size(), 0);
        std::vector<int> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
                if (e == skip_edge) continue;
                const auto& [x, y] = edges[e];
                const int other = (x == u) ? y : (y == u) ? x : -1;
                if (other >= 0 && !seen[other]) {
                    seen[other] = 1;
                    stack.push_back(other);
                }
            }
        }
        return seen;
    }
};

}  // namespace

SteinerTree canonicalize_tree(const SteinerTree& tree, const CstInstance& inst) {
    if (!inst.metric.is_linf())
        throw ValidationError("canonicalize_tree operates on l_inf gadget instances");
    const DstInstance ctx = as_dst(inst);
    std::string why;
    if (!is_valid_tree(tree, ctx, /*require_all_terminals=*/true, &why))
        throw ValidationError("canonicalize_tree: input does not span the terminals: " + why);

    Workspace ws{tree.nodes, tree.edges, std::vector<char>(tree.nodes.size(), 1)};
    int root_node = -1;
    for (int i = 0; i < static_cast<int>(ws.nodes.size()); ++i)
        if (ws.nodes[i].kind == TreeNode::Kind::terminal && ws.nodes[i].index == inst.root_index)
            root_node = i;

    auto pos = [&](int v) -> const Point& { return node_position(ws.nodes[v], ctx); };
    auto len = [&](int a, int b) { return lp_distance(kInf, pos(a), pos(b)); };

    bool changed = true;
    while (changed) {
        changed = false;

        // clamp Steiner coordinates into [-1, 1] (projection is a contraction)
        for (auto& node : ws.nodes) {
            if (node.kind != TreeNode::Kind::free_point) continue;
            for (double& c : node.coords) {
                const double clamped = std::clamp(c, -1.0, 1.0);
                if (clamped != c) {
                    c = clamped;
                    changed = true;
                }
            }
        }

        // drop dangling Steiner points, shortcut degree-2 Steiner points
        bool degrees_dirty = true;
        while (degrees_dirty) {
            degrees_dirty = false;
            for (int v = 0; v < static_cast<int>(ws.nodes.size()); ++v) {
                if (!ws.alive[v] || ws.nodes[v].kind != TreeNode::Kind::free_point) continue;
                const int d = ws.degree(v);
                if (d <= 1) {
                    std::erase_if(ws.edges,
                                  [&](const auto& e) { return e.first == v || e.second == v; });
                    ws.alive[v] = 0;
                    degrees_dirty = changed = true;
                } else if (d == 2) {
                    int nb[2], k = 0;
                    for (const auto& [a, b] : ws.edges) {
                        if (a == v) nb[k++] = b;
                        if (b == v) nb[k++] = a;
                    }
                    std::erase_if(ws.edges,
                                  [&](const auto& e) { return e.first == v || e.second == v; });
                    ws.edges.emplace_back(nb[0], nb[1]);
                    ws.alive[v] = 0;
                    degrees_dirty = changed = true;
                }
            }
        }

        // reroute non-root edges of length >= 1 through the root
        for (int e = 0; e < static_cast<int>(ws.edges.size()); ++e) {
            const auto [a, b] = ws.edges[e];
            if (a == root_node || b == root_node) continue;
            if (len(a, b) < 1.0) continue;
            const auto seen = ws.root_side(e, root_node);
            const int stranded = seen[a] ? b : a;
            ws.edges[e] = {stranded, root_node};
            changed = true;
            break;  // recompute degrees before the next surgery
        }
    }

    SteinerTree out;
    std::vector<int> remap(ws.nodes.size(), -1);
    for (int v = 0; v < static_cast<int>(ws.nodes.size()); ++v) {
        if (!ws.alive[v]) continue;
        remap[v] = static_cast<int>(out.nodes.size());
        out.nodes.push_back(ws.nodes[v]);
    }
    for (const auto& [a, b] : ws.edges) out.edges.emplace_back(remap[a], remap[b]);
    out.cost = tree_cost(out, ctx);
    return out;
}

}  // namespace steinerlab
