#include "steinerlab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "steinerlab/errors.hpp"

namespace steinerlab {

Point sparse_point(std::size_t dim, const std::vector<std::pair<std::size_t, double>>& entries) {
    if (dim < 1) throw ValidationError("point dimension must be >= 1");
    if (dim > kMaxDenseDimension) throw ValidationError("point dimension exceeds dense cap");
    Point p(dim, 0.0);
    for (const auto& [idx, value] : entries) {
        if (idx >= dim) throw ValidationError("sparse entry index out of range");
        p[idx] = value;
    }
    return p;
}

std::vector<std::pair<std::size_t, double>> support(const Point& p) {
    std::vector<std::pair<std::size_t, double>> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0.0) out.emplace_back(i, p[i]);
    return out;
}

Metric Metric::lp(double p) {
    if (!(p >= 1.0)) throw ValidationError("lp metric requires p >= 1");
    Metric m;
    m.kind = Kind::lp;
    m.p = p;
    return m;
}

Metric Metric::hamming() {
    Metric m;
    m.kind = Kind::hamming;
    return m;
}

Metric Metric::graph(std::vector<std::vector<double>> weights) {
    validate_graph_weights(weights);
    Metric m;
    m.kind = Kind::graph;
    m.weights = std::move(weights);
    return m;
}

Metric Metric::edit() {
    Metric m;
    m.kind = Kind::edit;
    return m;
}

Metric Metric::ulam() {
    Metric m;
    m.kind = Kind::ulam;
    return m;
}

std::string Metric::name() const {
    switch (kind) {
        case Kind::lp: {
            if (p == kInf) return "linf";
            std::ostringstream os;
            os << "l" << p;
            return os.str();
        }
        case Kind::hamming: return "hamming";
        case Kind::graph: return "graph";
        case Kind::edit: return "edit";
        case Kind::ulam: return "ulam";
    }
    return "?";
}

void validate_graph_weights(const std::vector<std::vector<double>>& w) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i].size() != n) throw ValidationError("graph weight matrix must be square");
        if (w[i][i] != 0.0) throw ValidationError("graph weight matrix must have zero diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (!(w[i][j] >= 0.0)) throw ValidationError("graph weights must be nonnegative");
            if (w[i][j] != w[j][i]) throw ValidationError("graph weight matrix must be symmetric");
        }
    }
}

double lp_distance(double p, const Point& a, const Point& b) {
    if (a.size() != b.size()) throw ValidationError("dimension mismatch in lp_distance");
    if (a.empty()) throw ValidationError("points must have dimension >= 1");
    if (p == kInf) {
        double best = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::fabs(a[i] - b[i]));
        return best;
    }
    if (!(p >= 1.0)) throw ValidationError("lp distance requires p >= 1");
    if (p == 1.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
        return s;
    }
    if (p == 2.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double d = a[i] - b[i];
            s += d * d;
        }
        return std::sqrt(s);
    }
    // scale by the max difference so the powers stay in range
    double mx = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) mx = std::max(mx, std::fabs(a[i] - b[i]));
    if (mx == 0.0) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::pow(std::fabs(a[i] - b[i]) / mx, p);
    return mx * std::pow(s, 1.0 / p);
}

namespace {

int graph_index(const Point& p, std::size_t n, const char* which) {
    if (p.size() != 1)
        throw ValidationError(std::string("graph metric expects 1-d index points (") + which + ")");
    const double v = p[0];
    if (v != std::floor(v) || v < 0.0 || v >= static_cast<double>(n))
        throw ValidationError("graph metric index point out of range");
    return static_cast<int>(v);
}

std::vector<int> to_symbols(const Point& p) {
    std::vector<int> s;
    s.reserve(p.size());
    for (double v : p) s.push_back(static_cast<int>(v));
    return s;
}

}  // namespace

double distance(const Metric& metric, const Point& a, const Point& b) {
    switch (metric.kind) {
        case Metric::Kind::lp:
            return lp_distance(metric.p, a, b);
        case Metric::Kind::hamming: {
            if (a.size() != b.size()) throw ValidationError("dimension mismatch in hamming distance");
            int c = 0;
            for (std::size_t i = 0; i < a.size(); ++i) c += a[i] != b[i];
            return c;
        }
        case Metric::Kind::graph: {
            const int i = graph_index(a, metric.weights.size(), "a");
            const int j = graph_index(b, metric.weights.size(), "b");
            return metric.weights[i][j];
        }
        case Metric::Kind::edit:
        case Metric::Kind::ulam:
            return string_distance(metric.kind, to_symbols(a), to_symbols(b));
    }
    throw ValidationError("unknown metric kind");
}

int string_distance(Metric::Kind kind, const std::vector<int>& a, const std::vector<int>& b) {
    if (kind != Metric::Kind::edit && kind != Metric::Kind::ulam)
        throw ValidationError("string_distance requires edit or ulam kind");
    if (kind == Metric::Kind::ulam) {
        auto distinct = [](const std::vector<int>& s) {
            std::set<int> seen(s.begin(), s.end());
            return seen.size() == s.size();
        };
        if (!distinct(a) || !distinct(b))
            throw ValidationError("ulam distance requires inputs without repeated symbols");
    }
    const std::size_t n = a.size(), m = b.size();
    std::vector<int> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= m; ++j) {
            const int sub = prev[j - 1] + (a[i - 1] != b[j - 1]);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

int string_distance(Metric::Kind kind, const std::string& a, const std::string& b) {
    std::vector<int> va(a.begin(), a.end()), vb(b.begin(), b.end());
    return string_distance(kind, va, vb);
}

}  // namespace steinerlab
