#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace confract {

/// Worker count: CONFRACT_THREADS when set to a positive integer, else the hardware concurrency.
inline unsigned thread_count()
{
    if (const char* env = std::getenv("CONFRACT_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0)
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Calls f(i) for i in [0, n). On failure the exception of the lowest failing index is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& f)
{
    const std::size_t workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    // worker w visits w, w + workers, ... in order and stops at its first failure
    std::vector<std::size_t> failed_at(workers, n);
    std::vector<std::exception_ptr> failure(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                try {
                    f(i);
                } catch (...) {
                    failed_at[w] = i;
                    failure[w] = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    auto first = std::min_element(failed_at.begin(), failed_at.end());
    if (*first < n)
        std::rethrow_exception(failure[first - failed_at.begin()]);
}

}  // namespace confract
