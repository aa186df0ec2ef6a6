#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace runlat::detail {

// Runs fn(worker, begin, end) over [0, n) split into contiguous chunks, one
// thread per chunk. Workers report into per-worker slots; callers reduce
// deterministically afterwards (typically by taking the minimum witness).
inline void for_chunks(int n, int workers, const std::function<void(int, int, int)>& fn) {
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> threads;
    const int chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * chunk;
        const int end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back(fn, w, begin, end);
    }
    for (auto& t : threads) t.join();
}

}  // namespace runlat::detail
