#pragma once

#include <utility>
#include <vector>

namespace steinerlab {

/// Simple undirected graph, vertices 0..n-1.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Throws ValidationError on loops, parallel edges or out-of-range endpoints.
void validate_graph(const SimpleGraph& g);

std::vector<std::vector<int>> adjacency_lists(const SimpleGraph& g);

/// Exact chromatic number by branch and bound (clique lower bound, greedy
/// upper bound, backtracking k-coloring). Cap: n <= 10.
int exact_chromatic_number(const SimpleGraph& g);

/// A proper coloring witnessing exact_chromatic_number. Colors are 0-based.
std::vector<int> optimal_coloring(const SimpleGraph& g);

/// Exact minimum vertex cover size by exhaustive search. Cap: n <= 20.
int min_vertex_cover_size(const SimpleGraph& g);

int max_degree(const SimpleGraph& g);

}  // namespace steinerlab
