#include "steinerlab/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "steinerlab/errors.hpp"
#include "steinerlab/metric.hpp"

namespace steinerlab {

std::vector<int> ulam_embed(const std::vector<int>& bits) {
    if (bits.empty()) throw ValidationError("ulam_embed needs n >= 1 bits");
    std::vector<int> perm;
    perm.reserve(2 * bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const int a = static_cast<int>(2 * i + 1), b = static_cast<int>(2 * i + 2);
        if (bits[i] != 0 && bits[i] != 1) throw ValidationError("ulam_embed expects a bit vector");
        if (bits[i] == 0) {
            perm.push_back(a);
            perm.push_back(b);
        } else {
            perm.push_back(b);
            perm.push_back(a);
        }
    }
    return perm;
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

LinearCode make_reed_solomon(int q, int K, int N) {
    if (!is_prime(q)) throw ValidationError("Reed-Solomon field size must be prime here");
    if (K < 1 || N < K) throw ValidationError("Reed-Solomon needs 1 <= K <= N");
    if (N > q) throw ValidationError("Reed-Solomon needs N <= q distinct evaluation points");
    return LinearCode{q, K, N};
}

std::vector<int> rs_encode(const LinearCode& code, const std::vector<int>& message) {
    if (static_cast<int>(message.size()) != code.K)
        throw ValidationError("message length must equal K");
    for (int c : message)
        if (c < 0 || c >= code.q) throw ValidationError("message symbol out of field range");
    std::vector<int> out(code.N);
    for (int x = 0; x < code.N; ++x) {
        long long acc = 0;
        for (int j = code.K - 1; j >= 0; --j) acc = (acc * x + message[j]) % code.q;
        out[x] = static_cast<int>(acc);
    }
    return out;
}

std::vector<int> index_to_message(const LinearCode& code, long long index) {
    double capacity = 1.0;
    for (int i = 0; i < code.K; ++i) capacity *= code.q;
    if (index < 1 || static_cast<double>(index) > capacity)
        throw ValidationError("index out of range for q^K messages");
    std::vector<int> msg(code.K, 0);
    long long v = index - 1;
    for (int i = 0; i < code.K; ++i) {
        msg[i] = static_cast<int>(v % code.q);
        v /= code.q;
    }
    return msg;
}

std::vector<int> one_hot_blocks(const std::vector<int>& symbols, int q) {
    std::vector<int> out(symbols.size() * static_cast<std::size_t>(q), 0);
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] < 0 || symbols[i] >= q)
            throw ValidationError("symbol out of field range in one_hot_blocks");
        out[i * q + symbols[i]] = 1;  // element e occupies block position e+1
    }
    return out;
}

std::string one_hot_bitstring(const std::vector<int>& symbols, int q) {
    std::string s;
    for (int b : one_hot_blocks(symbols, q)) s += static_cast<char>('0' + b);
    return s;
}

Point sigma_basis(long long i, const DimReductionParams& params) {
    const auto codeword = rs_encode(params.code, index_to_message(params.code, i));
    const auto bits = one_hot_blocks(codeword, params.code.q);
    return Point(bits.begin(), bits.end());
}

Point sigma_extend(const Point& x, const DimReductionParams& params) {
    const auto sup = support(x);
    if (static_cast<int>(sup.size()) > params.support_bound)
        throw ValidationError("sigma_extend support bound exceeded");
    for (const auto& [idx, value] : sup)
        if (std::fabs(value) > params.magnitude_bound + 1e-12)
            throw ValidationError("sigma_extend magnitude bound exceeded");

    Point out(params.output_dim(), 0.0);
    std::vector<int> contributors(params.output_dim(), 0);
    for (const auto& [idx, value] : sup) {
        const Point img = sigma_basis(static_cast<long long>(idx) + 1, params);
        for (int j = 0; j < params.output_dim(); ++j) {
            if (img[j] == 0.0) continue;
            ++contributors[j];
            out[j] = value;  // kept only if this stays the sole contributor
        }
    }
    for (int j = 0; j < params.output_dim(); ++j)
        if (contributors[j] != 1) out[j] = 0.0;
    return out;
}

DistortionReport measure_distortion(const std::vector<Point>& points, double p,
                                    const DimReductionParams& params) {
    if (p == kInf) throw ValidationError("distortion measurement needs finite p");
    if (points.empty()) throw ValidationError("empty point set");
    const int n = static_cast<int>(points.size());
    const double alpha = params.alpha();
    const int overlap_cap = params.code.N - params.code.min_distance();  // N - d

    std::vector<Point> images(n);
    for (int i = 0; i < n; ++i) images[i] = sigma_extend(points[i], params);

    auto pow_p = [&](const Point& a, const Point& b) {
        double s = 0.0;
        for (std::size_t c = 0; c < a.size(); ++c) s += std::pow(std::fabs(a[c] - b[c]), p);
        return s;
    };

    DistortionReport rep;
    double min_gap = std::numeric_limits<double>::infinity();
    rep.min_ratio = std::numeric_limits<double>::infinity();
    rep.max_ratio = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double orig = pow_p(points[i], points[j]);
            if (orig <= 0.0) continue;  // coincident points carry no ratio
            min_gap = std::min(min_gap, orig);
            const double emb = alpha * pow_p(images[i], images[j]);
            const double ratio = emb / orig;
            rep.rows.push_back({i, j, orig, emb, ratio});
            if (ratio < rep.min_ratio) rep.min_ratio = ratio;
            if (ratio > rep.max_ratio) rep.max_ratio = ratio;
        }
    }
    if (rep.rows.empty()) throw ValidationError("no distinct pairs to measure");

    const double C = params.support_bound;
    rep.lower_bound = 1.0 - 2.0 * C * overlap_cap / params.code.N;
    rep.upper_bound =
        1.0 + 2.0 * C * overlap_cap * std::pow(params.magnitude_bound, p) / min_gap;
    rep.ok = true;
    for (const auto& row : rep.rows) {
        if (row.ratio < rep.lower_bound - 1e-9 || row.ratio > rep.upper_bound + 1e-9) {
            rep.ok = false;
            std::ostringstream os;
            os << "pair (" << row.i << "," << row.j << ") ratio " << row.ratio
               << " outside [" << rep.lower_bound << ", " << rep.upper_bound << "]";
            rep.witness = os.str();
            break;
        }
    }
    return rep;
}

}  // namespace steinerlab
