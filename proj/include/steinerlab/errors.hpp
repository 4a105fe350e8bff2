#pragma once

#include <stdexcept>
#include <string>

namespace steinerlab {

/// Bad input: malformed instance, out-of-range parameter, broken invariant.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance exceeds a documented desk-scale cap of an exact solver/oracle.
struct CapError : std::runtime_error {
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical solver failed to converge or produced an inconsistent result.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace steinerlab
