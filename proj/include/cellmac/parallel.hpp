#ifndef CELLMAC_PARALLEL_HPP
#define CELLMAC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cellmac {

/**
 * Runs body(i) for i in [0, count) on up to `jobs` threads. Each index is
 * visited exactly once; callers write results into per-index slots so the
 * merge order never depends on scheduling. The first exception is rethrown.
 */
template <typename Body>
void parallel_for(std::size_t count, int jobs, Body&& body)
{
    const std::size_t workers = std::min<std::size_t>(std::size_t(std::max(jobs, 1)), count);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count && !failed; i = next++)
            {
                try
                {
                    body(i);
                }
                catch (...)
                {
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace cellmac

#endif
