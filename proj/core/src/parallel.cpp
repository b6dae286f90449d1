#include "polyalg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <thread>

namespace polyalg {

namespace {
std::atomic<int> g_thread_override{0};
}

int max_threads() {
    const int over = g_thread_override.load();
    if (over > 0) return over;
    if (const char* env = std::getenv("POLYALG_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

void set_thread_override(int n) { g_thread_override.store(n); }

ArgmaxResult parallel_argmax(long n, const std::function<double(long)>& score) {
    ArgmaxResult best;
    if (n <= 0) return best;
    const int threads = std::min<long>(max_threads(), n);
    if (threads <= 1) {
        for (long i = 0; i < n; ++i) {
            const double v = score(i);
            if (best.index < 0 || v > best.value) best = {i, v};
        }
        return best;
    }
    const long chunk = (n + threads - 1) / threads;
    std::vector<std::future<ArgmaxResult>> futures;
    for (int t = 0; t < threads; ++t) {
        const long lo = t * chunk;
        const long hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [lo, hi, &score] {
            ArgmaxResult local;
            for (long i = lo; i < hi; ++i) {
                const double v = score(i);
                if (local.index < 0 || v > local.value) local = {i, v};
            }
            return local;
        }));
    }
    for (auto& f : futures) {
        const ArgmaxResult local = f.get();
        if (local.index < 0) continue;
        // Strictly-greater merge keeps the smallest index on exact ties.
        if (best.index < 0 || local.value > best.value ||
            (local.value == best.value && local.index < best.index)) {
            best = local;
        }
    }
    return best;
}

void parallel_for(long n, const std::function<void(long)>& body) {
    if (n <= 0) return;
    const int threads = std::min<long>(max_threads(), n);
    if (threads <= 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    const long chunk = (n + threads - 1) / threads;
    std::vector<std::future<void>> futures;
    for (int t = 0; t < threads; ++t) {
        const long lo = t * chunk;
        const long hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [lo, hi, &body] {
            for (long i = lo; i < hi; ++i) body(i);
        }));
    }
    for (auto& f : futures) f.get();
}

}  // namespace polyalg
