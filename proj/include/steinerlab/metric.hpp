#pragma once

#include <limits>
#include <string>
#include <vector>

#include "steinerlab/point.hpp"

namespace steinerlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Distance function tag: lp (p in [1, inf]), hamming (l0), an explicit
/// weighted-graph metric, or the two string metrics.
struct Metric {
    enum class Kind { lp, hamming, graph, edit, ulam };

    Kind kind = Kind::lp;
    double p = 2.0;                            // lp only; kInf for l_infinity
    std::vector<std::vector<double>> weights;  // graph only

    static Metric lp(double p);
    static Metric l1() { return lp(1.0); }
    static Metric l2() { return lp(2.0); }
    static Metric linf() { return lp(kInf); }
    static Metric hamming();
    static Metric graph(std::vector<std::vector<double>> weights);
    static Metric edit();
    static Metric ulam();

    bool is_lp() const { return kind == Kind::lp; }
    bool is_linf() const { return kind == Kind::lp && p == kInf; }
    std::string name() const;
};

/// Checks symmetry, nonnegativity and zero diagonal.
void validate_graph_weights(const std::vector<std::vector<double>>& w);

/// lp distance between dense points (p = kInf for max, p >= 1 otherwise).
double lp_distance(double p, const Point& a, const Point& b);

/// Metric distance. For the graph kind, a and b are 1-d index points into the
/// weight matrix. For edit/ulam kinds coordinates are treated as symbols.
double distance(const Metric& metric, const Point& a, const Point& b);

/// Exact edit distance (insert/delete/substitute) by dynamic programming.
/// Kind ulam additionally rejects inputs with repeated symbols.
int string_distance(Metric::Kind kind, const std::vector<int>& a, const std::vector<int>& b);
int string_distance(Metric::Kind kind, const std::string& a, const std::string& b);

}  // namespace steinerlab
