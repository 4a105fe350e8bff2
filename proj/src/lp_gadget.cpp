#include "steinerlab/lp_gadget.hpp"

#include <algorithm>
#include <cmath>

#include "steinerlab/errors.hpp"

namespace steinerlab {

namespace {

double root3(double p) { return p == kInf ? 1.0 : std::pow(3.0, 1.0 / p); }

void require_p_range(double p) {
    if (p == kInf) return;
    if (!(p > 1.0)) throw ValidationError("lp gadget requires p > 1 (or inf)");
}

/// 3((1-theta)^p + 2 theta^p)^{1/p} + 3^{1/p} theta - 3; negative iff valid.
double validity_gap(double p, double theta) {
    if (p == kInf) return -2.0 * theta;
    const double beta = std::pow(std::pow(1.0 - theta, p) + 2.0 * std::pow(theta, p), 1.0 / p);
    return 3.0 * beta + root3(p) * theta - 3.0;
}

}  // namespace

double tight_gap_p_threshold() { return 1.0 / (std::log(4.0 / 3.0) / std::log(3.0)); }

bool theta_valid(double p, double theta) {
    require_p_range(p);
    if (!(theta > 0.0 && theta <= 0.5)) return false;
    return validity_gap(p, theta) < 0.0;
}

double max_valid_theta(double p) {
    require_p_range(p);
    if (p == kInf) return 0.5;
    if (validity_gap(p, 0.5) < 0.0) return 0.5;
    // validity_gap is convex in theta with a negative window hugging zero;
    // find a valid point, then bisect toward the root.
    double lo = 0.5;
    for (int k = 0; k < 200 && !(validity_gap(p, lo) < 0.0); ++k) lo *= 0.5;
    if (!(validity_gap(p, lo) < 0.0))
        throw SolverError("no numerically valid theta for this p");
    double hi = 0.5;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (validity_gap(p, mid) < 0.0 ? lo : hi) = mid;
    }
    return lo;
}

EmbeddabilityTuple lp_tuple(double p, double theta) {
    require_p_range(p);
    if (!(theta > 0.0 && theta <= 0.5))
        throw ValidationError("lp_tuple requires 0 < theta <= 1/2");
    EmbeddabilityTuple t;
    if (p == kInf) {
        t.alpha_x = t.gamma0 = t.gamma1 = t.gamma2 = theta;
        t.alpha_p = t.beta_out = t.tau = 1.0;
        t.beta_in = 1.0 - theta;
        return t;
    }
    t.alpha_x = root3(p) * theta;
    t.alpha_p = 1.0;
    t.beta_in = std::pow(std::pow(1.0 - theta, p) + 2.0 * std::pow(theta, p), 1.0 / p);
    t.beta_out = std::pow(1.0 + 3.0 * std::pow(theta, p), 1.0 / p);
    t.gamma0 = std::pow(6.0, 1.0 / p) * theta;
    t.gamma1 = std::pow(4.0, 1.0 / p) * theta;
    t.gamma2 = std::pow(2.0, 1.0 / p) * theta;
    t.tau = std::pow(2.0, 1.0 / p);
    return t;
}

DstInstance build_lp_dst_instance(const SetSystem& sys, const LpGadgetParams& params) {
    require_p_range(params.p);
    if (!(params.theta > 0.0 && params.theta <= 0.5))
        throw ValidationError("build_lp_dst_instance requires 0 < theta <= 1/2");
    auto issues = validate(sys);
    if (!issues.empty()) throw ValidationError("build_lp_dst_instance: " + issues.front());

    DstInstance inst;
    inst.metric = Metric::lp(params.p);
    for (int i = 0; i < sys.n; ++i) {
        Point e(sys.n, 0.0);
        e[i] = 1.0;
        inst.terminals.push_back(std::move(e));
    }
    inst.terminals.emplace_back(sys.n, 0.0);  // root
    inst.root_index = sys.n;
    for (const auto& s : sys.sets) {
        Point f(sys.n, 0.0);
        for (int e : s) f[e - 1] = params.theta;
        inst.facilities.push_back(std::move(f));
    }
    return inst;
}

double lp_gap_factor(double p, double theta, const SoundnessParams& sp) {
    require_p_range(p);
    if (!(theta > 0.0 && theta <= 0.5))
        throw ValidationError("lp_gap_factor requires 0 < theta <= 1/2");
    double beta, ax3;  // beta_in and alpha_x/3
    if (p == kInf) {
        beta = 1.0 - theta;
        ax3 = theta / 3.0;
    } else {
        beta = std::pow(std::pow(1.0 - theta, p) + 2.0 * std::pow(theta, p), 1.0 / p);
        ax3 = std::pow(3.0, (1.0 - p) / p) * theta;
    }
    const double denom = beta + ax3;
    const double pair_num = std::min(1.0, beta + root3(p) * theta / 2.0);
    return (1.0 - sp.eps) + (4.0 * sp.eps - 2.0 * sp.delta) / 3.0 * (pair_num / denom) +
           (2.0 * sp.delta - sp.eps) / 3.0 * (1.0 / denom);
}

double tight_lp_gap(double p, const SoundnessParams& sp) {
    if (p != kInf && !(p >= tight_gap_p_threshold() - 1e-12))
        throw ValidationError("tight_lp_gap requires p >= 1/log3(4/3)");
    const double half_inv = 1.0 / (2.0 * root3(p));
    return 1.0 + sp.eps * (0.5 - half_inv) + 2.0 * sp.delta * (half_inv - 0.375);
}

double intro_gamma(double p, const SoundnessParams& sp) {
    if (p != kInf && !(p >= 1.0)) throw ValidationError("intro_gamma requires p in [1, inf]");
    if (p == kInf) return sp.delta / 4.0;
    const double p0 = tight_gap_p_threshold();
    if (std::fabs(p - p0) <= 1e-9) return sp.eps / 8.0;
    if (p > p0) {
        const double half_inv = 1.0 / (2.0 * root3(p));
        return sp.eps / 2.0 * (1.0 - 1.0 / root3(p)) + 2.0 * sp.delta * (half_inv - 0.375);
    }
    return sp.eps / 26.0;
}

double optimal_theta(double p, const SoundnessParams& sp) {
    require_p_range(p);
    if (p == kInf || p >= tight_gap_p_threshold() - 1e-12) return 0.5;

    const double hi = max_valid_theta(p);
    const double lo = hi * 1e-6;
    auto value = [&](double theta) { return lp_gap_factor(p, theta, sp); };

    // Golden-section maximization; final sweep breaks ties toward larger theta.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = value(c), fd = value(d);
    while (b - a > 1e-9) {
        if (fc < fd) {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = value(d);
        } else {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = value(c);
        }
    }
    double best = 0.5 * (a + b);
    double best_val = value(best);
    for (double theta = best; theta <= hi + 1e-12; theta += 1e-6) {
        const double t = std::min(theta, hi);
        const double v = value(t);
        if (v >= best_val - 1e-15) {
            best = t;
            best_val = std::max(best_val, v);
        } else {
            break;
        }
    }
    return best;
}

DstInstance build_vc_dst_instance(const SimpleGraph& g, const Metric& metric) {
    validate_graph(g);
    if (g.edges.empty()) throw ValidationError("vc gadget requires at least one edge");
    const bool ok_metric = metric.kind == Metric::Kind::hamming ||
                           (metric.kind == Metric::Kind::lp && metric.p == 1.0);
    if (!ok_metric) throw ValidationError("vc gadget uses the hamming or l1 metric");

    DstInstance inst;
    inst.metric = metric;
    for (const auto& [u, v] : g.edges) {
        Point t(g.n, 0.0);
        t[u] = 1.0;
        t[v] = 1.0;
        inst.terminals.push_back(std::move(t));
    }
    inst.terminals.emplace_back(g.n, 0.0);  // root
    inst.root_index = static_cast<int>(g.edges.size());
    for (int v = 0; v < g.n; ++v) {
        Point f(g.n, 0.0);
        f[v] = 1.0;
        inst.facilities.push_back(std::move(f));
    }
    return inst;
}

double vc_gap_factor(int max_degree, double a, double b) {
    if (max_degree < 1) throw ValidationError("vc_gap_factor requires max_degree >= 1");
    if (!(a <= b)) throw ValidationError("vc_gap_factor requires a <= b");
    return (max_degree / 2.0 + b) / (max_degree / 2.0 + a);
}

double euclidean_ab_gap(double a, double b) {
    if (!(0.0 <= a && a <= b && b <= 1.0))
        throw ValidationError("euclidean_ab_gap requires 0 <= a <= b <= 1");
    const double slope = 5.0 * std::sqrt(3.0) / 9.0 - 1.0;  // covered-element saving
    return ((1.0 - b) * slope + 1.0) / ((1.0 - a) * slope + 1.0);
}

}  // namespace steinerlab
