#ifndef EXCALG_PARALLEL_HPP
#define EXCALG_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace excalg {

/*
 * Deterministic data-parallel helper. The work is split into contiguous
 * index ranges, so the set of computations is identical no matter how many
 * threads run them; callers that aggregate results must do so by index
 * (see parallel_all_of) to keep reports byte-stable.
 *
 * Thread count comes from EXCALG_THREADS (default 1 = fully serial).
 */
inline std::size_t thread_budget() {
    if (const char* env = std::getenv("EXCALG_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    return 1;
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers = std::min(thread_budget(), n == 0 ? std::size_t{1} : n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

// Runs pred on every index; returns the smallest failing index or n if all
// pass. The winner is deterministic regardless of thread count.
template <typename Pred>
std::size_t parallel_first_failure(std::size_t n, Pred&& pred) {
    std::vector<char> ok(n, 1);
    parallel_for(n, [&](std::size_t i) { ok[i] = pred(i) ? 1 : 0; });
    for (std::size_t i = 0; i < n; ++i)
        if (!ok[i]) return i;
    return n;
}

} // namespace excalg

#endif // EXCALG_PARALLEL_HPP
