#pragma once

#include <utility>
#include <vector>

#include "steinerlab/graphs.hpp"
#include "steinerlab/tree.hpp"

namespace steinerlab {

/// Each underlying edge oriented exactly once.
struct OrientedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
};

/// Vertex -> color map, colors 0..num_colors-1.
struct Coloring {
    std::vector<int> color;
    int num_colors = 0;
};

bool is_proper(const SimpleGraph& g, const Coloring& pi);
bool is_proper(const OrientedGraph& og, const Coloring& pi);

/// Default orientation: edge {i, j} with i < j becomes arc (i, j).
OrientedGraph orient_lexicographic(const SimpleGraph& g);

/// l_inf terminal set of the coloring reduction: one coordinate per arc,
/// terminal of vertex i is +1 on outgoing arcs, -1 on incoming arcs; the
/// zero root is appended last.
std::pair<CstInstance, OrientedGraph> build_cst_instance(const SimpleGraph& g);

/// Tree induced by a proper coloring: one Steiner point per color class with
/// entries +-1/2 on arcs touching the class, terminals hang off their class
/// point, class points hang off the root. Every edge has length exactly 1/2.
SteinerTree completeness_tree_from_coloring(const OrientedGraph& og, const Coloring& pi);

/// Cost-non-increasing rewrites to fixpoint: clamp Steiner coordinates to
/// [-1, 1], drop degree <= 1 Steiner points, shortcut degree-2 Steiner
/// points, reroute any non-root edge of length >= 1 through the root.
SteinerTree canonicalize_tree(const SteinerTree& tree, const CstInstance& inst);

}  // namespace steinerlab
