#include "abc/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace abc {

int default_thread_count() {
    if (const char* env = std::getenv("ABC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_chunks(int num_chunks, int threads, const std::function<void(int)>& fn) {
    if (threads < 1) threads = 1;
    if (threads == 1 || num_chunks <= 1) {
        for (int c = 0; c < num_chunks; ++c) fn(c);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int c = next.fetch_add(1);
            if (c >= num_chunks) return;
            fn(c);
        }
    };
    std::vector<std::thread> pool;
    int nw = threads < num_chunks ? threads : num_chunks;
    pool.reserve(nw);
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace abc
