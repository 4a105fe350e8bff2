#pragma once

#include "steinerlab/embeddability.hpp"
#include "steinerlab/graphs.hpp"
#include "steinerlab/set_system.hpp"
#include "steinerlab/tree.hpp"

namespace steinerlab {

/// Scale of the facility vectors in the lp embedding of an SP3 system.
struct LpGadgetParams {
    double p = 2.0;  // in (1, inf]
    double theta = 0.5;
};

/// Branch boundary 1/log3(4/3) of the piecewise gap table.
double tight_gap_p_threshold();

/// True iff 0 < theta <= 1/2 and 3((1-theta)^p + 2 theta^p)^{1/p}
/// + 3^{1/p} theta < 3 (l_inf case degenerates to theta > 0).
bool theta_valid(double p, double theta);

/// Largest valid theta for the given p (bisection over the convex validity
/// window). Throws SolverError when the window is numerically empty.
double max_valid_theta(double p);

/// Distance tuple realized by the lp embedding at scale theta.
EmbeddabilityTuple lp_tuple(double p, double theta);

/// Terminals e_1..e_n plus zero root in R^n; facilities are the scaled
/// characteristic vectors of the sets. Requires p > 1 (or inf) and
/// 0 < theta <= 1/2; callers wanting hardness guarantees should also hold
/// theta_valid(p, theta).
DstInstance build_lp_dst_instance(const SetSystem& sys, const LpGadgetParams& params);

/// Gap factor of the lp reduction, evaluated from the displayed closed form.
double lp_gap_factor(double p, double theta, const SoundnessParams& sp);

/// Closed form at theta = 1/2, valid for p >= 1/log3(4/3).
double tight_lp_gap(double p, const SoundnessParams& sp);

/// Four-branch inapproximability increment gamma over p in [1, inf].
double intro_gamma(double p, const SoundnessParams& sp);

/// theta maximizing lp_gap_factor: exactly 1/2 for p >= 1/log3(4/3),
/// otherwise golden-section search over the valid window (ties toward
/// larger theta, tolerance 1e-6).
double optimal_theta(double p, const SoundnessParams& sp);

/// Vertex-cover gadget: terminals e_u + e_v per edge plus zero root,
/// facilities e_v per vertex. Kind must be hamming or lp with p = 1.
DstInstance build_vc_dst_instance(const SimpleGraph& g, const Metric& metric);

/// (max_degree/2 + b) / (max_degree/2 + a) for (a, b)-VC hardness.
double vc_gap_factor(int max_degree, double a, double b);

/// Euclidean gap from packing-coverage deficiencies: a (completeness) and
/// b (soundness) are the uncovered fractions, a <= b <= 1.
double euclidean_ab_gap(double a, double b);

}  // namespace steinerlab
