/*
   Copyright 2026 The fourcirc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FOURCIRC_PARALLEL_HPP
#define FOURCIRC_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace fourcirc {

inline unsigned default_workers() noexcept {
    const unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

/// Splits [0, count) into `workers` contiguous chunks and runs
/// fn(begin, end, chunk) on each. Chunk c always covers the same range for a
/// given (count, workers), so callers can merge per-chunk results in order.
template <class Fn>
void parallel_chunks(std::uint64_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1u, workers);
    if (count < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(1, count));
    auto bounds = [&](unsigned c) { return count * c / workers; };
    if (workers == 1) {
        fn(std::uint64_t{0}, count, 0u);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned c = 0; c < workers; ++c) {
            pool.emplace_back([&, c] {
                try {
                    fn(bounds(c), bounds(c + 1), c);
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace fourcirc

#endif
