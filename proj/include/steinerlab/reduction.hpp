#pragma once

#include <array>
#include <vector>

#include "steinerlab/embeddability.hpp"
#include "steinerlab/set_system.hpp"
#include "steinerlab/tree.hpp"

namespace steinerlab {

/// Weighted complete graph over n universe points, one root and m facilities,
/// with pairwise weights read off an EmbeddabilityTuple. Point order:
/// t_1..t_n (0..n-1), root (n), s_1..s_m (n+1..n+m).
struct SetSystemSpace {
    SetSystem sys;
    EmbeddabilityTuple tuple;
    std::vector<std::vector<double>> weights;

    int n() const { return sys.n; }
    int m() const { return static_cast<int>(sys.sets.size()); }
    int num_points() const { return n() + m() + 1; }
    int root_point() const { return n(); }
    int facility_point(int j) const { return n() + 1 + j; }

    /// Graph-metric DST view: terminals are index points 0..n (root last),
    /// facilities index points n+1..n+m.
    DstInstance as_dst_instance() const;
};

SetSystemSpace build_space(const SetSystem& sys, const EmbeddabilityTuple& t);

/// Star-of-stars tree for a perfect packing: each part's three universe
/// points hang off the part's facility, facilities hang off the root.
SteinerTree build_completeness_tree(const SetSystem& sys,
                                    const std::vector<std::array<int, 3>>& partition,
                                    const SetSystemSpace& space);

/// n (alpha_x / 3 + beta_in).
double completeness_cost(int n, const EmbeddabilityTuple& t);

/// Soundness-case lower bound on the Steiner tree cost of the space.
double soundness_bound(int n, const EmbeddabilityTuple& t, const SoundnessParams& sp);

/// soundness_bound / completeness_cost (independent of n).
double gap_factor(const EmbeddabilityTuple& t, const SoundnessParams& sp);

/// 1 + delta / 4.
double general_metric_gap(const SoundnessParams& sp);

}  // namespace steinerlab
