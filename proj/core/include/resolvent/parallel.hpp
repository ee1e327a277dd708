#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace resolvent {

/// Worker count from an explicit request, falling back to the hardware.
inline unsigned resolve_jobs(unsigned requested) noexcept {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// out[i] = fn(in[i]) with up to `jobs` threads pulling indices from a shared
/// counter. Output order always matches input order. The first exception
/// thrown by any worker is rethrown after all workers join.
template <class In, class Out, class Fn>
void parallel_map(const std::vector<In>& in, std::vector<Out>& out, unsigned jobs, Fn&& fn) {
    out.resize(in.size());
    const std::size_t workers = std::min<std::size_t>(std::max(1U, jobs), in.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = next++; i < in.size(); i = next++) out[i] = fn(in[i]);
            } catch (...) {
                errors[w] = std::current_exception();
                next = in.size();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace resolvent
