#include "steinerlab/topology.hpp"

#include <algorithm>
#include <sstream>

#include "steinerlab/errors.hpp"

namespace steinerlab {

std::string SteinerTopology::encode() const {
    auto sorted = edges;
    for (auto& [a, b] : sorted)
        if (a > b) std::swap(a, b);
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    os << num_terminals << ":";
    for (const auto& [a, b] : sorted) os << a << "-" << b << ";";
    return os.str();
}

std::vector<SteinerTopology> enumerate_full_topologies(int t) {
    if (t < 2) throw ValidationError("topologies need at least two terminals");
    if (t > 8) throw CapError("full-topology enumeration cap exceeded (t <= 8)");

    // Start from the 2-terminal edge; insert terminal k by subdividing any
    // existing edge with a fresh Steiner slot. Steiner slots occupy t..2t-3.
    std::vector<SteinerTopology> result;
    SteinerTopology base{t, t - 2, {{0, 1}}};
    std::vector<SteinerTopology> frontier{base};
    for (int k = 2; k < t; ++k) {
        std::vector<SteinerTopology> next;
        const int steiner = t + (k - 2);
        for (const auto& topo : frontier) {
            for (std::size_t e = 0; e < topo.edges.size(); ++e) {
                SteinerTopology grown = topo;
                const auto [a, b] = grown.edges[e];
                grown.edges[e] = {a, steiner};
                grown.edges.emplace_back(b, steiner);
                grown.edges.emplace_back(k, steiner);
                next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }
    if (t == 2) return frontier;
    result = std::move(frontier);
    std::sort(result.begin(), result.end(),
              [](const SteinerTopology& x, const SteinerTopology& y) {
                  return x.encode() < y.encode();
              });
    return result;
}

}  // namespace steinerlab
