#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace qv {

// Worker count: min(hardware, QUATVAR_THREADS). Never zero.
inline unsigned thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("QUATVAR_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Runs body(chunk) for chunk = 0..nchunks-1 on a small pool.
// The chunk grid is fixed by the caller, so per-chunk results are
// independent of the worker count; reduce them in chunk order to keep
// output byte-stable.
inline void parallel_chunks(std::size_t nchunks, const std::function<void(std::size_t)>& body) {
    unsigned nthreads = thread_cap();
    if (nthreads <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) body(c);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= nchunks) return;
                body(c);
            }
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace qv
