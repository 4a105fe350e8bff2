#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <set>

#include "steinerlab/errors.hpp"
#include "steinerlab/lp_solver.hpp"
#include "steinerlab/solvers.hpp"
#include "steinerlab/threading.hpp"

namespace steinerlab {

namespace {

constexpr double kInfCost = std::numeric_limits<double>::infinity();

struct TopoView {
    const SteinerTopology* topo;
    const std::vector<Point>* terminals;
    int dim;
    int t;  // terminal count
    int k;  // Steiner slot count

    const double* position(const std::vector<double>& x, int node) const {
        if (node < t) return (*terminals)[node].data();
        return x.data() + static_cast<std::size_t>(node - t) * dim;
    }
};

double edge_length(const TopoView& view, const std::vector<double>& x, double p, int a, int b) {
    const double* pa = view.position(x, a);
    const double* pb = view.position(x, b);
    if (p == kInf) {
        double mx = 0.0;
        for (int i = 0; i < view.dim; ++i) mx = std::max(mx, std::fabs(pa[i] - pb[i]));
        return mx;
    }
    if (p == 1.0) {
        double s = 0.0;
        for (int i = 0; i < view.dim; ++i) s += std::fabs(pa[i] - pb[i]);
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (int i = 0; i < view.dim; ++i) s += (pa[i] - pb[i]) * (pa[i] - pb[i]);
        return std::sqrt(s);
    }
    double mx = 0.0;
    for (int i = 0; i < view.dim; ++i) mx = std::max(mx, std::fabs(pa[i] - pb[i]));
    if (mx == 0.0) return 0.0;
    double s = 0.0;
    for (int i = 0; i < view.dim; ++i) s += std::pow(std::fabs(pa[i] - pb[i]) / mx, p);
    return mx * std::pow(s, 1.0 / p);
}

double total_cost(const TopoView& view, const std::vector<double>& x, double p) {
    double s = 0.0;
    for (const auto& [a, b] : view.topo->edges) s += edge_length(view, x, p, a, b);
    return s;
}

/// Subgradient of the tree length at x (zero at coincident endpoints).
void subgradient(const TopoView& view, const std::vector<double>& x, double p,
                 std::vector<double>& grad) {
    std::fill(grad.begin(), grad.end(), 0.0);
    auto add = [&](int node, int i, double g) {
        if (node >= view.t) grad[static_cast<std::size_t>(node - view.t) * view.dim + i] += g;
    };
    for (const auto& [a, b] : view.topo->edges) {
        if (a < view.t && b < view.t) continue;
        const double* pa = view.position(x, a);
        const double* pb = view.position(x, b);
        if (p == kInf) {
            int arg = 0;
            double mx = -1.0;
            for (int i = 0; i < view.dim; ++i) {
                const double d = std::fabs(pa[i] - pb[i]);
                if (d > mx) {
                    mx = d;
                    arg = i;
                }
            }
            if (mx <= 0.0) continue;
            const double s = pa[arg] >= pb[arg] ? 1.0 : -1.0;
            add(a, arg, s);
            add(b, arg, -s);
        } else if (p == 1.0) {
            for (int i = 0; i < view.dim; ++i) {
                const double d = pa[i] - pb[i];
                if (d == 0.0) continue;
                const double s = d > 0.0 ? 1.0 : -1.0;
                add(a, i, s);
                add(b, i, -s);
            }
        } else {
            const double len = edge_length(view, x, p, a, b);
            if (len <= 0.0) continue;
            for (int i = 0; i < view.dim; ++i) {
                const double d = pa[i] - pb[i];
                if (d == 0.0) continue;
                const double g = (d > 0.0 ? 1.0 : -1.0) *
                                 std::pow(std::fabs(d) / len, p - 1.0);
                add(a, i, g);
                add(b, i, -g);
            }
        }
    }
}

/// Polyak-style subgradient descent with a geometrically decaying target gap.
long long run_subgradient(const TopoView& view, double p, std::vector<double>& x, double& fx,
                          long long budget) {
    std::vector<double> grad(x.size());
    std::vector<double> best_x = x;
    double best_f = fx;
    long long used = 0;
    double delta = std::max(0.25 * best_f, 1e-3);
    const int rounds = 30;
    const long long per_round = std::max<long long>(budget / rounds, 8);
    for (int round = 0; round < rounds && used < budget; ++round, delta *= 0.5) {
        x = best_x;
        double f = best_f;
        for (long long it = 0; it < per_round && used < budget; ++it, ++used) {
            subgradient(view, x, p, grad);
            double norm2 = 0.0;
            for (double gi : grad) norm2 += gi * gi;
            if (norm2 < 1e-24) break;
            const double step = (f - (best_f - delta)) / norm2;
            if (step <= 0.0) break;
            for (std::size_t i = 0; i < x.size(); ++i) x[i] -= step * grad[i];
            f = total_cost(view, x, p);
            if (f < best_f) {
                best_f = f;
                best_x = x;
            }
        }
    }
    x = best_x;
    fx = best_f;
    return used;
}

/// Geometric median of up to three anchor points (Weiszfeld with anchor
/// handling); used as the exact block update for p = 2.
Point median3(const std::vector<Point>& anchors) {
    const int d = static_cast<int>(anchors[0].size());
    const int n = static_cast<int>(anchors.size());
    if (n == 1) return anchors[0];
    if (n == 2) {  // any point on the segment; midpoint keeps it symmetric
        Point out(d);
        for (int i = 0; i < d; ++i) out[i] = 0.5 * (anchors[0][i] + anchors[1][i]);
        return out;
    }
    auto dist = [&](const Point& a, const Point& b) {
        double s = 0.0;
        for (int i = 0; i < d; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
        return std::sqrt(s);
    };
    // coincident anchors dominate
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(anchors[i], anchors[j]) < 1e-14) return anchors[i];
    // 120-degree test at each anchor
    for (int i = 0; i < n; ++i) {
        const int a = (i + 1) % 3, b = (i + 2) % 3;
        const double da = dist(anchors[a], anchors[i]), db = dist(anchors[b], anchors[i]);
        double dot = 0.0;
        for (int c = 0; c < d; ++c)
            dot += (anchors[a][c] - anchors[i][c]) * (anchors[b][c] - anchors[i][c]);
        if (dot / (da * db) <= -0.5) return anchors[i];
    }
    // interior optimum: plain Weiszfeld from the centroid
    Point x(d, 0.0);
    for (const auto& a : anchors)
        for (int i = 0; i < d; ++i) x[i] += a[i] / n;
    for (int iter = 0; iter < 200; ++iter) {
        Point num(d, 0.0);
        double den = 0.0;
        bool at_anchor = false;
        for (const auto& a : anchors) {
            const double r = dist(x, a);
            if (r < 1e-15) {
                at_anchor = true;
                break;
            }
            for (int i = 0; i < d; ++i) num[i] += a[i] / r;
            den += 1.0 / r;
        }
        if (at_anchor) break;
        Point next(d);
        double move = 0.0;
        for (int i = 0; i < d; ++i) {
            next[i] = num[i] / den;
            move += std::fabs(next[i] - x[i]);
        }
        x = std::move(next);
        if (move < 1e-15) break;
    }
    return x;
}

/// Block geometric-median descent for p = 2.
long long run_weiszfeld(const TopoView& view, std::vector<double>& x, double& fx) {
    const int k = view.k;
    const int d = view.dim;
    std::vector<std::vector<int>> nbrs(k);
    for (const auto& [a, b] : view.topo->edges) {
        if (a >= view.t) nbrs[a - view.t].push_back(b);
        if (b >= view.t) nbrs[b - view.t].push_back(a);
    }
    long long sweeps = 0;
    for (int sweep = 0; sweep < 3000; ++sweep, ++sweeps) {
        double move = 0.0;
        for (int s = 0; s < k; ++s) {
            std::vector<Point> anchors;
            for (int nb : nbrs[s]) {
                const double* pp = view.position(x, nb);
                anchors.emplace_back(pp, pp + d);
            }
            const Point target = median3(anchors);
            for (int i = 0; i < d; ++i) {
                move = std::max(move, std::fabs(target[i] - x[s * d + i]));
                x[static_cast<std::size_t>(s) * d + i] = target[i];
            }
        }
        if (move < 1e-13) break;
    }
    fx = total_cost(view, x, 2.0);
    return sweeps;
}

/// Armijo backtracking descent for smooth p in (1, inf).
long long run_gradient_polish(const TopoView& view, double p, std::vector<double>& x, double& fx) {
    std::vector<double> grad(x.size()), trial(x.size());
    long long used = 0;
    for (int iter = 0; iter < 2000; ++iter, ++used) {
        subgradient(view, x, p, grad);
        double norm2 = 0.0;
        for (double g : grad) norm2 += g * g;
        if (norm2 < 1e-26) break;
        double step = 1.0;
        bool improved = false;
        for (int bt = 0; bt < 40; ++bt, step *= 0.5) {
            for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - step * grad[i];
            const double ft = total_cost(view, trial, p);
            if (ft <= fx - 1e-4 * step * norm2) {
                x = trial;
                fx = ft;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    return used;
}

/// Exact LP solve of the fixed-topology problem for p in {1, inf}.
FixedTopologyResult solve_lp_topology(const TopoView& view, double p) {
    SimplexLP lp;
    const int d = view.dim;
    std::vector<int> coord_var(static_cast<std::size_t>(view.k) * d);
    for (auto& v : coord_var) v = lp.add_variable(0.0, /*nonnegative=*/false);

    auto coord_terms = [&](int node, int i, double sign,
                           std::vector<std::pair<int, double>>& terms, double& constant) {
        if (node < view.t) {
            constant += sign * (*view.terminals)[node][i];
        } else {
            terms.emplace_back(coord_var[static_cast<std::size_t>(node - view.t) * d + i], sign);
        }
    };

    for (std::size_t e = 0; e < view.topo->edges.size(); ++e) {
        const auto [a, b] = view.topo->edges[e];
        int z_edge = -1;
        if (p == kInf) z_edge = lp.add_variable(1.0, true);
        for (int i = 0; i < d; ++i) {
            const int z = (p == kInf) ? z_edge : lp.add_variable(1.0, true);
            for (double sign : {1.0, -1.0}) {
                std::vector<std::pair<int, double>> terms;
                double constant = 0.0;
                coord_terms(a, i, sign, terms, constant);
                coord_terms(b, i, -sign, terms, constant);
                terms.emplace_back(z, -1.0);
                lp.add_le(std::move(terms), -constant);
            }
        }
    }

    const auto sol = lp.minimize();
    if (!sol.feasible) throw SolverError("fixed-topology LP did not solve");
    FixedTopologyResult res;
    res.steiner.assign(view.k, Point(d, 0.0));
    for (int s = 0; s < view.k; ++s)
        for (int i = 0; i < d; ++i)
            res.steiner[s][i] = sol.x[coord_var[static_cast<std::size_t>(s) * d + i]];
    std::vector<double> x(static_cast<std::size_t>(view.k) * d);
    for (int s = 0; s < view.k; ++s)
        for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(s) * d + i] = res.steiner[s][i];
    res.cost = total_cost(view, x, p);
    res.report.iterations = sol.iterations;
    res.report.restarts = 1;
    res.report.achieved_tol = 1e-9;
    res.report.converged = true;
    return res;
}

std::vector<double> initial_coords(const TopoView& view, std::mt19937_64& rng, bool jitter) {
    const int d = view.dim;
    Point centroid(d, 0.0);
    for (const auto& t : *view.terminals)
        for (int i = 0; i < d; ++i) centroid[i] += t[i] / view.t;
    double radius = 0.0;
    for (const auto& t : *view.terminals)
        for (int i = 0; i < d; ++i) radius = std::max(radius, std::fabs(t[i] - centroid[i]));
    std::uniform_real_distribution<double> U(-0.3, 0.3);
    std::vector<double> x(static_cast<std::size_t>(view.k) * d);
    for (int s = 0; s < view.k; ++s)
        for (int i = 0; i < d; ++i)
            x[static_cast<std::size_t>(s) * d + i] =
                centroid[i] + (jitter ? U(rng) * (radius + 1e-6) : 0.0);
    return x;
}

}  // namespace

FixedTopologyResult optimize_fixed_topology(const SteinerTopology& topology,
                                            const std::vector<Point>& terminals,
                                            const Metric& metric, const OptimizeOptions& opt) {
    if (!metric.is_lp()) throw ValidationError("optimize_fixed_topology requires an lp metric");
    if (topology.num_terminals != static_cast<int>(terminals.size()))
        throw ValidationError("topology/terminal count mismatch");
    if (terminals.empty()) throw ValidationError("no terminals");

    TopoView view{&topology, &terminals, static_cast<int>(terminals[0].size()),
                  static_cast<int>(terminals.size()), topology.num_steiner};
    const double p = metric.p;

    if (view.k == 0) {
        FixedTopologyResult res;
        std::vector<double> empty;
        res.cost = total_cost(view, empty, p);
        res.report.converged = true;
        return res;
    }

    if (p == 1.0 || p == kInf) return solve_lp_topology(view, p);

    FixedTopologyResult best;
    best.cost = kInfCost;
    // block-exact l2 updates rarely stall; a few restarts suffice there
    const int restarts = (p == 2.0) ? std::min(std::max(1, opt.restarts), 3)
                                    : std::max(1, opt.restarts);
    long long total_iters = 0;
    for (int r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ULL + 0x1234567 + r);
        std::vector<double> x = initial_coords(view, rng, r > 0);
        double fx = total_cost(view, x, p);
        if (p == 2.0) {
            total_iters += run_weiszfeld(view, x, fx);
        } else {
            total_iters += run_subgradient(view, p, x, fx, opt.max_iters / restarts);
            total_iters += run_gradient_polish(view, p, x, fx);
        }
        if (fx < best.cost) {
            best.cost = fx;
            best.steiner.assign(view.k, Point(view.dim, 0.0));
            for (int s = 0; s < view.k; ++s)
                for (int i = 0; i < view.dim; ++i)
                    best.steiner[s][i] = x[static_cast<std::size_t>(s) * view.dim + i];
        }
    }
    best.report.iterations = total_iters;
    best.report.restarts = restarts;
    best.report.achieved_tol = opt.tol;
    best.report.converged = true;
    return best;
}

namespace {

SteinerTree assemble_cst_tree(const CstInstance& inst, const SteinerTopology& topo,
                              const FixedTopologyResult& fit) {
    const int t = topo.num_terminals;
    // contract Steiner slots sitting on a neighbor (degenerate topologies)
    const int total = t + topo.num_steiner;
    std::vector<int> target(total);
    for (int v = 0; v < total; ++v) target[v] = v;
    auto position = [&](int v) -> const Point& {
        return v < t ? inst.terminals[v] : fit.steiner[v - t];
    };
    auto find = [&](int v) {
        while (target[v] != v) v = target[v] = target[target[v]];
        return v;
    };
    bool merged = true;
    while (merged) {
        merged = false;
        for (const auto& [a, b] : topo.edges) {
            const int ra = find(a), rb = find(b);
            if (ra == rb) continue;
            if (lp_distance(inst.metric.p, position(ra), position(rb)) < 1e-6) {
                // prefer keeping terminals, then lower index
                const bool keep_a = (ra < t) || (rb >= t && ra < rb);
                target[keep_a ? rb : ra] = keep_a ? ra : rb;
                merged = true;
            }
        }
    }

    SteinerTree tree;
    std::vector<int> node_of(total, -1);
    for (int v = 0; v < total; ++v) {
        if (find(v) != v) continue;
        node_of[v] = static_cast<int>(tree.nodes.size());
        if (v < t)
            tree.nodes.push_back(TreeNode::terminal(v));
        else
            tree.nodes.push_back(TreeNode::free_point(fit.steiner[v - t]));
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : topo.edges) {
        const int ra = node_of[find(a)], rb = node_of[find(b)];
        if (ra == rb) continue;
        const auto key = std::minmax(ra, rb);
        if (seen.insert({key.first, key.second}).second) tree.edges.emplace_back(ra, rb);
    }
    tree.cost = tree_cost(tree, inst);
    return tree;
}

}  // namespace

SteinerTree exact_cst(const CstInstance& inst, int max_terminals, const OptimizeOptions& opt) {
    validate_instance(inst);
    if (!inst.metric.is_lp()) throw ValidationError("exact_cst requires an lp metric");
    const int t = static_cast<int>(inst.terminals.size());
    if (t > max_terminals || t > 8)
        throw CapError("exact_cst terminal cap exceeded");

    if (t == 1) {
        SteinerTree tree;
        tree.nodes.push_back(TreeNode::terminal(0));
        return tree;
    }
    if (t == 2) {
        SteinerTree tree;
        tree.nodes.push_back(TreeNode::terminal(0));
        tree.nodes.push_back(TreeNode::terminal(1));
        tree.edges.emplace_back(0, 1);
        tree.cost = distance(inst.metric, inst.terminals[0], inst.terminals[1]);
        return tree;
    }

    const auto topologies = enumerate_full_topologies(t);
    std::vector<FixedTopologyResult> results(topologies.size());
    parallel_for(static_cast<int>(topologies.size()), [&](int i) {
        OptimizeOptions local = opt;
        local.seed = opt.seed + 1000003ULL * static_cast<std::uint64_t>(i);
        results[i] = optimize_fixed_topology(topologies[i], inst.terminals, inst.metric, local);
    });

    int best = 0;
    for (int i = 1; i < static_cast<int>(results.size()); ++i) {
        if (results[i].cost < results[best].cost - 1e-12) best = i;
        // equal costs: the enumeration is sorted by encoding, keep the first
    }
    return assemble_cst_tree(inst, topologies[best], results[best]);
}

double steiner_ratio(const std::vector<Point>& points, const Metric& metric,
                     const OptimizeOptions& opt) {
    if (points.size() < 2) return 1.0;
    CstInstance inst{metric, points, 0};
    const double cst = exact_cst(inst, 6, opt).cost;
    const double mst = mst_tree(points, metric).cost;
    return cst / mst;
}

std::vector<Point> cst_to_dst_facilities(const std::vector<Point>& points, const Metric& metric,
                                         const CstToDstConfig& cfg, const OptimizeOptions& opt) {
    if (cfg.subset_size_cap < 2) throw ValidationError("subset size cap must be >= 2");
    const int n = static_cast<int>(points.size());
    const int C = std::min(cfg.subset_size_cap, n);

    long long subsets = 0;
    std::vector<Point> facilities;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(chosen.size()) >= 3) {
            if (++subsets > 20000) throw CapError("cst_to_dst_facilities subset cap exceeded");
            std::vector<Point> sub;
            for (int idx : chosen) sub.push_back(points[idx]);
            CstInstance inst{metric, sub, 0};
            const SteinerTree tree = exact_cst(inst, C, opt);
            for (const auto& node : tree.nodes)
                if (node.kind == TreeNode::Kind::free_point) facilities.push_back(node.coords);
        }
        if (static_cast<int>(chosen.size()) == C) return;
        for (int i = start; i < n; ++i) {
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);

    // drop terminal-coincident points, then dedupe
    std::vector<Point> cleaned;
    for (const auto& f : facilities) {
        bool drop = false;
        for (const auto& t : points)
            if (distance(metric, f, t) < 1e-6) {
                drop = true;
                break;
            }
        for (const auto& g : cleaned)
            if (!drop && distance(metric, f, g) < 1e-9) drop = true;
        if (!drop) cleaned.push_back(f);
    }
    return cleaned;
}

SteinerTree approx_cst_via_dst(const std::vector<Point>& points, const Metric& metric,
                               const CstToDstConfig& cfg, const OptimizeOptions& opt) {
    DstInstance inst{metric, points, 0, cst_to_dst_facilities(points, metric, cfg, opt)};
    return exact_dst(inst);
}

}  // namespace steinerlab
