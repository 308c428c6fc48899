#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace qrec {

// Run fn(i) for i in [0, n) on up to `jobs` threads with static striding.
// Callers keep determinism by writing results into per-index slots and
// aggregating sequentially afterwards. The lowest-numbered worker's first
// exception is rethrown after all workers join.
inline void parallel_for(std::int64_t n, int jobs, const std::function<void(std::int64_t)>& fn) {
    if (n <= 0) return;
    if (jobs > n) jobs = static_cast<int>(n);
    if (jobs <= 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            try {
                for (std::int64_t i = w; i < n; i += jobs) fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace qrec
