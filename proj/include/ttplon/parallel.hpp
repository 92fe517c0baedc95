#pragma once

/// @file parallel.hpp
/// @brief Static range partitioning over a fixed number of threads.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace ttplon {

/// Splits [0, count) into `workers` contiguous chunks and calls
/// fn(begin, end, chunk) for each, one thread per chunk. Chunk boundaries depend
/// only on count and workers.
template <class Fn>
void parallel_chunks(std::uint64_t count, int workers, Fn&& fn) {
    const std::uint64_t w = static_cast<std::uint64_t>(std::max(1, workers));
    if (w == 1 || count < 2) {
        fn(std::uint64_t{0}, count, 0);
        return;
    }
    std::vector<std::jthread> threads;
    threads.reserve(w);
    for (std::uint64_t c = 0; c < w; ++c) {
        const std::uint64_t begin = count * c / w;
        const std::uint64_t end = count * (c + 1) / w;
        threads.emplace_back([&fn, begin, end, c] { fn(begin, end, static_cast<int>(c)); });
    }
}

} // namespace ttplon
