#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace cyclichall {

// Run fn(i) for i in [0, count) on up to jobs threads. Callers index into
// pre-sized result buffers so the merged output is independent of the
// worker count.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> threads;
    int nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

}  // namespace cyclichall
