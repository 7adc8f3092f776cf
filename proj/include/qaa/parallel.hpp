// Copyright 2026 The qaa-maxcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace qaa {

/// Worker count: QAA_NUM_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("QAA_NUM_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into at most thread_count() contiguous chunks and calls
/// body(chunk_index, begin, end) for each, one thread per chunk. Chunk
/// boundaries depend only on n and the chunk count, and callers merge
/// per-chunk results in chunk order, so output never depends on scheduling.
/// The first exception thrown by any chunk is rethrown.
inline void parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                            std::size_t min_chunk = 1) {
    if (n == 0) return;
    std::size_t chunks = std::min<std::size_t>(thread_count(), (n + min_chunk - 1) / min_chunk);
    chunks = std::max<std::size_t>(chunks, 1);
    if (chunks == 1) {
        body(0, 0, n);
        return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    {
        std::vector<std::jthread> workers;
        workers.reserve(chunks);
        for (std::size_t c = 0; c < chunks; ++c) {
            const std::size_t begin = n * c / chunks;
            const std::size_t end = n * (c + 1) / chunks;
            workers.emplace_back([&, c, begin, end] {
                try {
                    body(c, begin, end);
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

/// Number of chunks parallel_chunks will use for n items.
inline std::size_t chunk_count(std::size_t n, std::size_t min_chunk = 1) {
    if (n == 0) return 0;
    return std::max<std::size_t>(1, std::min<std::size_t>(thread_count(), (n + min_chunk - 1) / min_chunk));
}

}  // namespace qaa
