#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace polyalg {

/// Thread cap: POLYALG_THREADS if set, else hardware concurrency (max 8).
/// Results never depend on this value; it only bounds internal parallelism.
int max_threads();

/// Overrides the environment-derived cap (0 restores it). Used by the
/// determinism suites to compare runs at different thread counts.
void set_thread_override(int n);

struct ArgmaxResult {
    long index = -1;
    double value = 0.0;
};

/// Deterministic parallel argmax of score(i) over [0, n): each index is
/// evaluated independently and the reduction breaks ties by smaller index,
/// so the result is identical for any thread count.
ArgmaxResult parallel_argmax(long n, const std::function<double(long)>& score);

/// Deterministic parallel for: body(i) must only write state owned by index i.
void parallel_for(long n, const std::function<void(long)>& body);

}  // namespace polyalg
