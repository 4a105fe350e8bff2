#include "steinerlab/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "steinerlab/errors.hpp"

namespace steinerlab {

namespace {

int overlap(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    int c = 0;
    for (int x : a)
        for (int y : b) c += (x == y);
    return c;
}

}  // namespace

DstInstance SetSystemSpace::as_dst_instance() const {
    DstInstance inst;
    inst.metric = Metric::graph(weights);
    for (int i = 0; i <= n(); ++i) inst.terminals.push_back({static_cast<double>(i)});
    inst.root_index = n();
    for (int j = 0; j < m(); ++j)
        inst.facilities.push_back({static_cast<double>(facility_point(j))});
    return inst;
}

SetSystemSpace build_space(const SetSystem& sys, const EmbeddabilityTuple& t) {
    auto issues = validate(sys);
    if (!issues.empty()) throw ValidationError("build_space: " + issues.front());

    SetSystemSpace space;
    space.sys = sys;
    space.tuple = t;
    const int n = sys.n;
    const int m = static_cast<int>(sys.sets.size());
    const int total = n + m + 1;
    space.weights.assign(total, std::vector<double>(total, 0.0));
    auto set_w = [&](int a, int b, double w) {
        space.weights[a][b] = w;
        space.weights[b][a] = w;
    };

    const int r = space.root_point();
    for (int i = 0; i < n; ++i) {
        set_w(r, i, t.alpha_p);
        for (int j = i + 1; j < n; ++j) set_w(i, j, t.tau);
    }
    const double gammas[3] = {t.gamma0, t.gamma1, t.gamma2};
    for (int a = 0; a < m; ++a) {
        const int pa = space.facility_point(a);
        set_w(r, pa, t.alpha_x);
        for (int i = 0; i < n; ++i) {
            const bool member = std::find(sys.sets[a].begin(), sys.sets[a].end(), i + 1) !=
                                sys.sets[a].end();
            set_w(i, pa, member ? t.beta_in : t.beta_out);
        }
        for (int b = a + 1; b < m; ++b)
            set_w(pa, space.facility_point(b), gammas[overlap(sys.sets[a], sys.sets[b])]);
    }
    return space;
}

SteinerTree build_completeness_tree(const SetSystem& sys,
                                    const std::vector<std::array<int, 3>>& partition,
                                    const SetSystemSpace& space) {
    if (sys.n % 3 != 0) throw ValidationError("completeness tree needs 3 | n");
    if (static_cast<int>(partition.size()) * 3 != sys.n)
        throw ValidationError("partition must consist of n/3 sets");

    std::vector<char> covered(sys.n + 1, 0);
    std::vector<int> part_set_index;
    for (auto part : partition) {
        std::sort(part.begin(), part.end());
        const auto it = std::find(sys.sets.begin(), sys.sets.end(), part);
        if (it == sys.sets.end())
            throw ValidationError("partition set does not belong to the system");
        part_set_index.push_back(static_cast<int>(it - sys.sets.begin()));
        for (int e : part) {
            if (covered[e]) throw ValidationError("partition sets are not pairwise disjoint");
            covered[e] = 1;
        }
    }

    SteinerTree tree;
    for (int i = 0; i < sys.n; ++i) tree.nodes.push_back(TreeNode::terminal(i));
    tree.nodes.push_back(TreeNode::terminal(sys.n));  // root
    const int root_node = sys.n;
    for (std::size_t k = 0; k < partition.size(); ++k) {
        const int fac_node = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back(TreeNode::facility(part_set_index[k]));
        tree.edges.emplace_back(fac_node, root_node);
        for (int e : partition[k]) tree.edges.emplace_back(e - 1, fac_node);
    }
    tree.cost = tree_cost(tree, space.as_dst_instance());
    return tree;
}

double completeness_cost(int n, const EmbeddabilityTuple& t) {
    if (n % 3 != 0) throw ValidationError("completeness_cost needs 3 | n");
    return n * (t.alpha_x / 3.0 + t.beta_in);
}

double soundness_bound(int n, const EmbeddabilityTuple& t, const SoundnessParams& sp) {
    const auto check = is_steiner_embeddable(t);
    if (!check.ok && !check.boundary)
        throw ValidationError("soundness_bound requires a Steiner-embeddable tuple: " +
                              (check.violations.empty() ? std::string("?") : check.violations.front()));
    const double per = t.alpha_x / 3.0 + t.beta_in;
    const double m_pair = std::min({t.alpha_p, t.tau, t.beta_in + t.alpha_x / 2.0});
    const double m_single = std::min(t.alpha_p, t.tau);
    return n * per *
           (1.0 - sp.eps + (4.0 * sp.eps - 2.0 * sp.delta) / 3.0 * (m_pair / per) +
            (2.0 * sp.delta - sp.eps) / 3.0 * (m_single / per));
}

double gap_factor(const EmbeddabilityTuple& t, const SoundnessParams& sp) {
    return soundness_bound(3, t, sp) / completeness_cost(3, t);
}

double general_metric_gap(const SoundnessParams& sp) { return 1.0 + sp.delta / 4.0; }

}  // namespace steinerlab
