#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "steinerlab/errors.hpp"

namespace steinerlab {

/// Dense real vector. Canonical representation is dense (instances here stay
/// well below a few thousand dimensions); sparse inputs are normalized on
/// construction via sparse_point().
using Point = std::vector<double>;

inline constexpr std::size_t kMaxDenseDimension = 4096;

/// Builds a dense point from (index, value) pairs over [0, dim).
Point sparse_point(std::size_t dim, const std::vector<std::pair<std::size_t, double>>& entries);

/// Nonzero entries of a dense point as sorted (index, value) pairs.
std::vector<std::pair<std::size_t, double>> support(const Point& p);

}  // namespace steinerlab
