#include "steinerlab/threading.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace steinerlab {

int thread_budget() {
    if (const char* env = std::getenv("STEINER_LAB_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(int count, const std::function<void(int)>& body) {
    const int workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace steinerlab
