#pragma once

#include <cstdint>
#include <functional>

namespace shadowgauge {

/// Worker count: hardware concurrency, capped by SHADOWGAUGE_THREADS when
/// that variable holds a positive integer.
unsigned worker_count();

/// Splits [0, count) into contiguous chunks and runs body(begin, end, chunk)
/// on up to worker_count() threads. Chunk boundaries depend only on `count`
/// and `chunks`, never on the thread count.
void parallel_chunks(std::int64_t count, int chunks,
                     const std::function<void(std::int64_t, std::int64_t, int)>& body);

} // namespace shadowgauge
