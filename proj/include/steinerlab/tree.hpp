#pragma once

#include <utility>
#include <vector>

#include "steinerlab/metric.hpp"
#include "steinerlab/point.hpp"

namespace steinerlab {

/// Node of a Steiner tree: a terminal or facility referenced by index into
/// the owning instance, or a free coordinate point.
struct TreeNode {
    enum class Kind { terminal, facility, free_point };

    Kind kind = Kind::terminal;
    int index = -1;  // terminal/facility only
    Point coords;    // free_point only

    static TreeNode terminal(int i) { return {Kind::terminal, i, {}}; }
    static TreeNode facility(int i) { return {Kind::facility, i, {}}; }
    static TreeNode free_point(Point p) { return {Kind::free_point, -1, std::move(p)}; }
};

struct SteinerTree {
    std::vector<TreeNode> nodes;
    std::vector<std::pair<int, int>> edges;  // unordered node-index pairs
    double cost = 0.0;
};

/// Discrete instance: terminals (one of which is the designated root) plus a
/// facility pool the tree may draw Steiner points from.
struct DstInstance {
    Metric metric;
    std::vector<Point> terminals;
    int root_index = 0;
    std::vector<Point> facilities;
};

/// Continuous instance: any point of the space may serve as a Steiner point.
struct CstInstance {
    Metric metric;
    std::vector<Point> terminals;
    int root_index = 0;
};

void validate_instance(const DstInstance& inst);
void validate_instance(const CstInstance& inst);
DstInstance as_dst(const CstInstance& inst);

/// Coordinates of a tree node resolved against its instance.
const Point& node_position(const TreeNode& node, const DstInstance& inst);

/// Sum of edge distances. Throws on dangling node indices.
double tree_cost(const SteinerTree& tree, const DstInstance& inst);
double tree_cost(const SteinerTree& tree, const CstInstance& inst);

/// True iff edges form a spanning tree of the node set and, when
/// require_all_terminals is set, every instance terminal appears exactly once.
bool is_valid_tree(const SteinerTree& tree, const DstInstance& inst, bool require_all_terminals,
                   std::string* why = nullptr);

}  // namespace steinerlab
