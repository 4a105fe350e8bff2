#pragma once

#include <string>
#include <vector>

#include "steinerlab/point.hpp"

namespace steinerlab {

/// Pair-swap embedding of a bit vector into a permutation of [2n]: block i is
/// (2i-1, 2i) when bit i is 0 and (2i, 2i-1) when it is 1. Ulam distance of
/// two images equals exactly twice the Hamming distance of the inputs.
std::vector<int> ulam_embed(const std::vector<int>& bits);

/// Reed-Solomon code over a prime field: messages are polynomials of degree
/// < K evaluated at the points 0..N-1. Minimum distance is N - K + 1.
struct LinearCode {
    int q = 0;
    int K = 0;
    int N = 0;

    int min_distance() const { return N - K + 1; }
};

LinearCode make_reed_solomon(int q, int K, int N);

std::vector<int> rs_encode(const LinearCode& code, const std::vector<int>& message);

/// Base-q digits (little-endian, K of them) of index - 1; index is 1-based.
std::vector<int> index_to_message(const LinearCode& code, long long index);

/// One-hot block expansion: symbol e in {0..q-1} occupies position e+1 of its
/// length-q block. Output length is q * |symbols|.
std::vector<int> one_hot_blocks(const std::vector<int>& symbols, int q);
std::string one_hot_bitstring(const std::vector<int>& symbols, int q);

struct DimReductionParams {
    LinearCode code;
    int support_bound = 3;        // C
    double magnitude_bound = 1.0; // B

    double alpha() const { return 1.0 / code.N; }
    int output_dim() const { return code.q * code.N; }
};

/// Image of the i-th standard basis vector (i is 1-based): one-hot blocks of
/// the codeword for index i. Exactly N ones.
Point sigma_basis(long long i, const DimReductionParams& params);

/// Extension to bounded-support points: coordinate j carries a_i iff exactly
/// one support index contributes a nonzero there, else 0.
Point sigma_extend(const Point& x, const DimReductionParams& params);

struct DistortionRow {
    int i = 0;
    int j = 0;
    double original = 0.0;
    double embedded = 0.0;
    double ratio = 0.0;
};

struct DistortionReport {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    bool ok = false;
    std::string witness;  // offending pair when a bound fails
    std::vector<DistortionRow> rows;
};

/// Ratios alpha ||sigma x - sigma y||_p^p / ||x - y||_p^p over all distinct
/// pairs, checked against the band
///   [1 - 2C(N-d)/N,  1 + 2C(N-d)B^p / min ||x-y||_p^p].
DistortionReport measure_distortion(const std::vector<Point>& points, double p,
                                    const DimReductionParams& params);

}  // namespace steinerlab
