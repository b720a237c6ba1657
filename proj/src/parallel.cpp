#include "dilatelab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace dilatelab {

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DILATE_LAB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(std::min<long>(v, 1024));
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for_blocks(std::size_t count,
                         const std::function<void(std::size_t, std::size_t)>& body,
                         int threads) {
    if (count == 0) return;
    auto workers = static_cast<std::size_t>(resolve_thread_count(threads));
    workers = std::min(workers, count);
    if (workers <= 1) {
        body(0, count);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t base = count / workers;
    const std::size_t extra = count % workers;
    std::size_t begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t end = begin + base + (w < extra ? 1 : 0);
        pool.emplace_back([&body, &errors, w, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : pool) t.join();
    // Rethrow the failure from the lowest block so the surfaced error does
    // not depend on thread timing.
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace dilatelab
