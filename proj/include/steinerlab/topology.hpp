#pragma once

#include <string>
#include <utility>
#include <vector>

namespace steinerlab {

/// Abstract full Steiner topology: terminals 0..t-1 are leaves, Steiner slots
/// t..2t-3 have degree 3. Degenerate trees arise by letting slots coincide.
struct SteinerTopology {
    int num_terminals = 0;
    int num_steiner = 0;
    std::vector<std::pair<int, int>> edges;

    /// Canonical encoding (sorted normalized edge list) used for
    /// deterministic tie-breaking.
    std::string encode() const;
};

/// All full topologies on t terminals ((2t-4)!! of them). Cap: t <= 8.
std::vector<SteinerTopology> enumerate_full_topologies(int t);

}  // namespace steinerlab
