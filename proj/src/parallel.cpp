#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qft::detail {

int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* cap = std::getenv("QFT_THREADS")) {
        try {
            n = std::min(n, std::max(1, std::stoi(cap)));
        } catch (const std::exception&) {
            // unparsable cap: ignore
        }
    }
    return n;
}

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
    const int count = end - begin;
    if (count <= 0) return;
    const int workers = std::min(worker_count(), count);
    if (workers == 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = begin + w; i < end; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace qft::detail
