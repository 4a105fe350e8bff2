#include "steinerlab/set_system.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>

#include "steinerlab/errors.hpp"

namespace steinerlab {

namespace {

constexpr int kMaxSets = 24;
constexpr int kMaxUniverse = 24;

void require_valid(const SetSystem& sys) {
    auto issues = validate(sys);
    if (!issues.empty()) throw ValidationError("invalid set system: " + issues.front());
}

void require_caps(const SetSystem& sys) {
    if (static_cast<int>(sys.sets.size()) > kMaxSets)
        throw CapError("set-system oracle cap exceeded: more than 24 sets");
    if (sys.n > kMaxUniverse)
        throw CapError("set-system oracle cap exceeded: universe larger than 24");
}

std::uint32_t set_mask(const std::array<int, 3>& s) {
    return (1u << (s[0] - 1)) | (1u << (s[1] - 1)) | (1u << (s[2] - 1));
}

}  // namespace

SetSystem make_set_system(int n, std::vector<std::array<int, 3>> sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    SetSystem sys{n, std::move(sets)};
    require_valid(sys);
    return sys;
}

std::vector<std::string> validate(const SetSystem& sys) {
    std::vector<std::string> issues;
    if (sys.n < 1) issues.push_back("universe size must be positive");
    std::set<std::array<int, 3>> seen;
    for (std::size_t k = 0; k < sys.sets.size(); ++k) {
        auto s = sys.sets[k];
        std::sort(s.begin(), s.end());
        std::ostringstream tag;
        tag << "set #" << (k + 1);
        if (s[0] == s[1] || s[1] == s[2]) {
            issues.push_back(tag.str() + ": cardinality violation (repeated element)");
            continue;
        }
        if (s[0] < 1 || s[2] > sys.n) {
            issues.push_back(tag.str() + ": range violation");
            continue;
        }
        if (!seen.insert(s).second) issues.push_back(tag.str() + ": duplicate set");
    }
    return issues;
}

int max_packing_coverage(const SetSystem& sys) {
    require_valid(sys);
    require_caps(sys);
    const int m = static_cast<int>(sys.sets.size());
    std::vector<std::uint32_t> masks(m);
    for (int k = 0; k < m; ++k) masks[k] = set_mask(sys.sets[k]);

    int best = 0;
    // DFS over sets in order; covered counts 3 per chosen set.
    std::function<void(int, std::uint32_t, int)> rec = [&](int idx, std::uint32_t used, int covered) {
        best = std::max(best, covered);
        if (idx == m) return;
        // bound: even taking every remaining set cannot beat best
        if (covered + 3 * (m - idx) <= best) return;
        if ((masks[idx] & used) == 0) rec(idx + 1, used | masks[idx], covered + 3);
        rec(idx + 1, used, covered);
    };
    rec(0, 0u, 0);
    return best;
}

std::optional<int> min_set_cover_size(const SetSystem& sys) {
    require_valid(sys);
    require_caps(sys);
    const int m = static_cast<int>(sys.sets.size());
    const std::uint32_t full = (sys.n == 32) ? 0xffffffffu : ((1u << sys.n) - 1);
    std::uint32_t reachable = 0;
    std::vector<std::uint32_t> masks(m);
    for (int k = 0; k < m; ++k) {
        masks[k] = set_mask(sys.sets[k]);
        reachable |= masks[k];
    }
    if (reachable != full) return std::nullopt;

    int best = m + 1;
    // Branch on the lowest uncovered element; only sets containing it help.
    std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t covered, int used) {
        if (covered == full) {
            best = std::min(best, used);
            return;
        }
        const int uncovered = __builtin_popcount(full & ~covered);
        if (used + (uncovered + 2) / 3 >= best) return;
        std::uint32_t missing = full & ~covered;
        const int elem = __builtin_ctz(missing);
        for (int k = 0; k < m; ++k)
            if (masks[k] & (1u << elem)) rec(covered | masks[k], used + 1);
    };
    rec(0, 0);
    return best;
}

SoundnessParams measure_eps_delta(const SetSystem& sys) {
    const int coverage = max_packing_coverage(sys);
    const auto cover = min_set_cover_size(sys);
    if (!cover)
        throw ValidationError("measure_eps_delta: no cover exists, delta undefined");
    SoundnessParams sp;
    sp.eps = 1.0 - static_cast<double>(coverage) / sys.n;
    sp.delta = 3.0 * static_cast<double>(*cover) / sys.n - 1.0;
    sp.in_remark_band =
        sp.delta >= sp.eps / 2.0 - 1e-12 && sp.delta <= 2.0 * sp.eps + 1e-12;
    return sp;
}

}  // namespace steinerlab
