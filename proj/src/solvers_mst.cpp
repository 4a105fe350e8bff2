#include <algorithm>
#include <limits>

#include "steinerlab/errors.hpp"
#include "steinerlab/solvers.hpp"

namespace steinerlab {

SteinerTree mst_tree(const std::vector<Point>& points, const Metric& metric) {
    if (points.empty()) throw ValidationError("mst_tree needs at least one point");
    const int n = static_cast<int>(points.size());

    SteinerTree tree;
    for (int i = 0; i < n; ++i) tree.nodes.push_back(TreeNode::terminal(i));
    if (n == 1) return tree;

    // Prim with deterministic smallest-index tie-breaking.
    std::vector<char> in_tree(n, 0);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<int> parent(n, -1);
    in_tree[0] = 1;
    for (int v = 1; v < n; ++v) {
        best[v] = distance(metric, points[0], points[v]);
        parent[v] = 0;
    }
    for (int added = 1; added < n; ++added) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!in_tree[v] && (pick < 0 || best[v] < best[pick] - 1e-15)) pick = v;
        in_tree[pick] = 1;
        tree.edges.emplace_back(parent[pick], pick);
        tree.cost += best[pick];
        for (int v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const double d = distance(metric, points[pick], points[v]);
            if (d < best[v] - 1e-15) {
                best[v] = d;
                parent[v] = pick;
            }
        }
    }
    return tree;
}

SteinerTree mst_tree(const DstInstance& inst) { return mst_tree(inst.terminals, inst.metric); }

}  // namespace steinerlab
