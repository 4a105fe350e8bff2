#pragma once

#include <cstdint>
#include <vector>

#include "steinerlab/topology.hpp"
#include "steinerlab/tree.hpp"

namespace steinerlab {

struct SolveReport {
    long long iterations = 0;
    int restarts = 0;
    double achieved_tol = 0.0;
    bool converged = true;
};

struct OptimizeOptions {
    int restarts = 10;
    long long max_iters = 50000;
    double tol = 1e-7;
    std::uint64_t seed = 0;
};

/// Subset-size cap and per-subset solver tolerance for the CST -> DST
/// facility generation. The theoretical cap constant is astronomically large
/// and never evaluated; C is a user parameter.
struct CstToDstConfig {
    int subset_size_cap = 3;
    double tol = 1e-6;
};

/// Minimum spanning tree over the points (no Steiner nodes).
SteinerTree mst_tree(const std::vector<Point>& points, const Metric& metric);
SteinerTree mst_tree(const DstInstance& inst);

/// Globally optimal discrete Steiner tree by dynamic programming over
/// terminal subsets. Caps: 12 terminals, 256 facilities.
SteinerTree exact_dst(const DstInstance& inst);

/// Oracle: minimize MST(P union S') over all facility subsets S'.
/// Cap: 20 facilities.
SteinerTree brute_force_dst(const DstInstance& inst);

struct FixedTopologyResult {
    std::vector<Point> steiner;  // one per Steiner slot
    double cost = 0.0;
    SolveReport report;
};

/// Minimizes tree length over Steiner coordinates for a fixed topology
/// (convex for every lp). l1/l_inf solve an exact LP; l2 runs block
/// geometric-median descent; other p use a Polyak-style subgradient method
/// with a smooth polish.
FixedTopologyResult optimize_fixed_topology(const SteinerTopology& topology,
                                            const std::vector<Point>& terminals,
                                            const Metric& metric,
                                            const OptimizeOptions& opt = {});

/// Minimum over all full Steiner topologies (collapses allowed) of the
/// fixed-topology optimum. Ties broken by topology encoding.
SteinerTree exact_cst(const CstInstance& inst, int max_terminals = 6,
                      const OptimizeOptions& opt = {});

/// exact_cst cost / mst cost.
double steiner_ratio(const std::vector<Point>& points, const Metric& metric,
                     const OptimizeOptions& opt = {});

/// Union of Steiner points of exact CST solutions over every subset of P of
/// size at most cfg.subset_size_cap (terminal-coincident points dropped,
/// duplicates removed).
std::vector<Point> cst_to_dst_facilities(const std::vector<Point>& points, const Metric& metric,
                                         const CstToDstConfig& cfg, const OptimizeOptions& opt = {});

/// exact_dst over (P, cst_to_dst_facilities(P)).
SteinerTree approx_cst_via_dst(const std::vector<Point>& points, const Metric& metric,
                               const CstToDstConfig& cfg, const OptimizeOptions& opt = {});

}  // namespace steinerlab
