#ifndef FRECHET_JL_PARALLEL_HPP
#define FRECHET_JL_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace frechet_jl {

/// FRECHET_THREADS if set and positive, else the number of hardware threads.
inline std::size_t default_thread_count() {
    if (const char* env = std::getenv("FRECHET_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/*
 * Runs fn(i) for i in [0, count) on up to `threads` workers, each taking one
 * contiguous block. Exceptions are rethrown after all workers join; the one
 * from the lowest block wins so failures are reported deterministically.
 */
template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
    const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    auto run_block = [&](std::size_t w) {
        const std::size_t begin = count * w / workers;
        const std::size_t end = count * (w + 1) / workers;
        try {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run_block, w);
        run_block(0);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace frechet_jl

#endif
