#pragma once

#include <functional>

namespace steinerlab {

/// Worker count: STEINER_LAB_THREADS when set (clamped to >= 1), otherwise
/// hardware concurrency.
int thread_budget();

/// Runs body(i) for i in [0, count) across the thread budget. Callers must
/// write results into per-index slots; merge order is up to them, so results
/// stay deterministic regardless of schedule.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace steinerlab
