#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace nearfield {

/// Calls body(i) for i in [0, n) on up to hardware_concurrency threads. Each index
/// is visited exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling.
template <typename Body>
void parallel_for(long n, const Body& body) {
    const long hw = std::max(1L, static_cast<long>(std::thread::hardware_concurrency()));
    const long workers = std::min(hw, n);
    if (workers <= 1) {
        for (long i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (long w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (long i = w; i < n; i += workers) {
                body(i);
            }
        });
    }
}

}  // namespace nearfield
