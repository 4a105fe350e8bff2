#pragma once

#include <string>
#include <vector>

namespace steinerlab {

/// The eight distance parameters of a set-system space: root-facility,
/// root-terminal, member/non-member terminal-facility, facility-facility by
/// overlap size, and terminal-terminal.
struct EmbeddabilityTuple {
    double alpha_x = 0.0;
    double alpha_p = 0.0;
    double beta_in = 0.0;
    double beta_out = 0.0;
    double gamma0 = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double tau = 0.0;
};

struct TupleCheck {
    bool ok = false;
    /// Steiner-utility margin fell inside the 1e-12 numerical band; neither a
    /// clean pass nor a clean fail.
    bool boundary = false;
    std::vector<std::string> violations;
};

/// Triangle-inequality constraints over realizable point triples of a
/// set-system space. Overlap patterns impossible for distinct 3-sets (two
/// disjoint sets both sharing two elements with a third) are not required.
TupleCheck is_metric_compatible(const EmbeddabilityTuple& t);

/// Metric compatibility plus Steiner proximity, root proximity, Steiner
/// utility (strict) and Steiner diameter.
TupleCheck is_steiner_embeddable(const EmbeddabilityTuple& t);

}  // namespace steinerlab
