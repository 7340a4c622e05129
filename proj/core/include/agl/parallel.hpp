#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace agl {

/**
 * Runs fn(chunk_index, begin, end) over a partition of [0, n) on `threads`
 * workers.  With threads <= 1 (or tiny n) everything runs inline.  Exceptions
 * from workers are rethrown on the caller thread.
 */
template <class F>
void parallel_chunks(std::size_t n, unsigned threads, F&& fn) {
    if (threads <= 1 || n < 2 * threads) {
        if (n > 0) fn(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    const std::size_t nchunks = threads;
    const std::size_t per = (n + nchunks - 1) / nchunks;
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(nchunks);
    for (std::size_t k = 0; k < nchunks; ++k) {
        const std::size_t begin = k * per;
        const std::size_t end = std::min(n, begin + per);
        if (begin >= end) break;
        workers.emplace_back([&, k, begin, end] {
            try {
                fn(k, begin, end);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace agl
