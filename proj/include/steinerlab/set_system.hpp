#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace steinerlab {

/// Universe [1..n] with a collection of 3-element subsets (an SP3 instance).
/// Sets are stored sorted ascending, 1-based, without duplicates.
struct SetSystem {
    int n = 0;
    std::vector<std::array<int, 3>> sets;
};

/// Normalizes (sorts members) and returns the system; throws on violations.
SetSystem make_set_system(int n, std::vector<std::array<int, 3>> sets);

/// Report-style validation: empty result means ok.
std::vector<std::string> validate(const SetSystem& sys);

/// Packing coverage deficiency and cover surplus of an instance.
struct SoundnessParams {
    double eps = 0.0;
    double delta = 0.0;
    /// Remark-range check delta in [eps/2, 2 eps]; informational only.
    bool in_remark_band = true;
};

/// Maximum number of universe elements covered by pairwise-disjoint sets,
/// by exhaustive search. Cap: at most 24 sets.
int max_packing_coverage(const SetSystem& sys);

/// Exact minimum cardinality of a subcollection covering [n], or nullopt if
/// no cover exists. Cap: n <= 24, at most 24 sets.
std::optional<int> min_set_cover_size(const SetSystem& sys);

/// eps = 1 - max_packing_coverage/n, delta = 3 min_set_cover_size/n - 1.
/// Throws ValidationError when no cover exists (delta undefined).
SoundnessParams measure_eps_delta(const SetSystem& sys);

}  // namespace steinerlab
