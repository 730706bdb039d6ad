// Copyright 2026 The amecodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace ame {

// Deterministic chunked map/reduce: the index range [0, count) is split into
// contiguous chunks, each chunk is mapped by one worker, and the per-chunk
// results are combined in chunk order. The result is bit-identical to the
// serial execution for any thread count.
//
// `map` has signature R(std::size_t begin, std::size_t end);
// `combine` has signature void(R& acc, R&& chunk_result).
template <typename R, typename Map, typename Combine>
R chunked_reduce(std::size_t count, unsigned threads, R init, Map map, Combine combine) {
    if (count == 0) return init;
    if (threads <= 1) {
        R only = map(0, count);
        combine(init, std::move(only));
        return init;
    }
    std::size_t n_chunks = std::min<std::size_t>(count, std::size_t(threads) * 8);
    std::size_t chunk = (count + n_chunks - 1) / n_chunks;
    n_chunks = (count + chunk - 1) / chunk;

    std::vector<R> partial(n_chunks, init);
    std::vector<std::thread> workers;
    std::size_t per_worker = (n_chunks + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t c0 = std::size_t(t) * per_worker;
        std::size_t c1 = std::min(n_chunks, c0 + per_worker);
        if (c0 >= c1) break;
        workers.emplace_back([&, c0, c1]() {
            for (std::size_t c = c0; c < c1; ++c) {
                std::size_t b = c * chunk;
                std::size_t e = std::min(count, b + chunk);
                partial[c] = map(b, e);
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& p : partial) combine(init, std::move(p));
    return init;
}

}  // namespace ame
