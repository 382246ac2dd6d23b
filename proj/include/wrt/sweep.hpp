#ifndef WRT_SWEEP_HPP
#define WRT_SWEEP_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace wrt {

// WRTWIST_THREADS caps sweep parallelism; defaults to the hardware count.
inline unsigned sweep_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("WRTWIST_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < 1024) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

// Applies `work` to items in parallel and hands results to `sink` in input
// order.  `work` must be pure; `sink` runs on the calling thread.
template <typename Item, typename Result>
void ordered_parallel_map(const std::vector<Item>& items,
                          const std::function<Result(const Item&)>& work,
                          const std::function<void(const Item&, Result&)>& sink) {
    unsigned nthreads = sweep_threads();
    if (nthreads <= 1 || items.size() < 2) {
        for (const Item& it : items) {
            Result r = work(it);
            sink(it, r);
        }
        return;
    }
    std::vector<Result> results(items.size());
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size()) return;
                results[i] = work(items[i]);
            }
        });
    }
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < items.size(); ++i) sink(items[i], results[i]);
}

} // namespace wrt

#endif
