#include "steinerlab/tree.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "steinerlab/errors.hpp"

namespace steinerlab {

void validate_instance(const DstInstance& inst) {
    if (inst.terminals.empty()) throw ValidationError("instance needs at least one terminal");
    if (inst.root_index < 0 || inst.root_index >= static_cast<int>(inst.terminals.size()))
        throw ValidationError("root_index out of range");
    if (inst.metric.kind != Metric::Kind::graph) {
        const std::size_t d = inst.terminals.front().size();
        for (const auto& t : inst.terminals)
            if (t.size() != d) throw ValidationError("terminal dimension mismatch");
        for (const auto& f : inst.facilities)
            if (f.size() != d) throw ValidationError("facility dimension mismatch");
    }
    for (std::size_t i = 0; i < inst.terminals.size(); ++i)
        for (std::size_t j = i + 1; j < inst.terminals.size(); ++j)
            if (inst.terminals[i] == inst.terminals[j])
                throw ValidationError("terminals must be pairwise distinct");
}

void validate_instance(const CstInstance& inst) { validate_instance(as_dst(inst)); }

DstInstance as_dst(const CstInstance& inst) {
    return DstInstance{inst.metric, inst.terminals, inst.root_index, {}};
}

const Point& node_position(const TreeNode& node, const DstInstance& inst) {
    switch (node.kind) {
        case TreeNode::Kind::terminal:
            if (node.index < 0 || node.index >= static_cast<int>(inst.terminals.size()))
                throw ValidationError("dangling terminal index in tree");
            return inst.terminals[node.index];
        case TreeNode::Kind::facility:
            if (node.index < 0 || node.index >= static_cast<int>(inst.facilities.size()))
                throw ValidationError("dangling facility index in tree");
            return inst.facilities[node.index];
        case TreeNode::Kind::free_point:
            return node.coords;
    }
    throw ValidationError("unknown tree node kind");
}

double tree_cost(const SteinerTree& tree, const DstInstance& inst) {
    double total = 0.0;
    for (const auto& [u, v] : tree.edges) {
        if (u < 0 || v < 0 || u >= static_cast<int>(tree.nodes.size()) ||
            v >= static_cast<int>(tree.nodes.size()))
            throw ValidationError("dangling node index in tree edge");
        total += distance(inst.metric, node_position(tree.nodes[u], inst),
                          node_position(tree.nodes[v], inst));
    }
    return total;
}

double tree_cost(const SteinerTree& tree, const CstInstance& inst) {
    return tree_cost(tree, as_dst(inst));
}

bool is_valid_tree(const SteinerTree& tree, const DstInstance& inst, bool require_all_terminals,
                   std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int nn = static_cast<int>(tree.nodes.size());
    if (nn == 0) return fail("empty tree");
    if (static_cast<int>(tree.edges.size()) != nn - 1) return fail("|edges| != |nodes| - 1");
    std::vector<std::vector<int>> adj(nn);
    for (const auto& [u, v] : tree.edges) {
        if (u < 0 || v < 0 || u >= nn || v >= nn) return fail("edge endpoint out of range");
        if (u == v) return fail("self-loop");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(nn, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != nn) return fail("tree not connected");
    if (require_all_terminals) {
        std::multiset<int> terms;
        for (const auto& node : tree.nodes)
            if (node.kind == TreeNode::Kind::terminal) terms.insert(node.index);
        for (int i = 0; i < static_cast<int>(inst.terminals.size()); ++i) {
            if (terms.count(i) != 1) {
                std::ostringstream os;
                os << "terminal " << i << " appears " << terms.count(i) << " times";
                return fail(os.str());
            }
        }
    }
    if (why) why->clear();
    return true;
}

}  // namespace steinerlab
