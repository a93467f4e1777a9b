#include "shadowgauge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace shadowgauge {

unsigned worker_count()
{
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SHADOWGAUGE_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0)
            n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

void parallel_chunks(std::int64_t count, int chunks,
                     const std::function<void(std::int64_t, std::int64_t, int)>& body)
{
    if (count <= 0 || chunks <= 0)
        return;
    auto bounds = [&](int c) { return count * c / chunks; };
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(chunks));
    if (workers <= 1) {
        for (int c = 0; c < chunks; ++c)
            body(bounds(c), bounds(c + 1), c);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int c = next++; c < chunks; c = next++) {
                try {
                    body(bounds(c), bounds(c + 1), c);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace shadowgauge
