#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#ifdef ORELAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace orelab::scan {

inline constexpr std::uint64_t npos = ~0ull;

// Process-wide switch; checks flip to the serial reference paths when
// this is off. Parallel and serial paths must agree bit for bit, which
// the scan tests and the benchmark both assert.
bool parallel_enabled();
void set_parallel(bool on);

// How many indices a scan must cover before the parallel path is worth
// the fork/join overhead.
inline constexpr std::uint64_t parallel_threshold = 1 << 12;

// ---- serial reference kernels ----

template <typename Pred>
std::uint64_t find_first_serial(std::uint64_t n, Pred&& pred) {
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) return i;
    return npos;
}

template <typename Pred>
std::vector<std::uint64_t> collect_serial(std::uint64_t n, Pred&& pred) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

template <typename Pred>
std::uint64_t count_serial(std::uint64_t n, Pred&& pred) {
    std::uint64_t c = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (pred(i)) ++c;
    return c;
}

// ---- parallel kernels ----
// Predicates must be safe to evaluate concurrently and must not throw;
// every caller in this library passes pure table/arithmetic lookups.

// Smallest index satisfying pred, independent of schedule: threads walk
// interleaved blocks in ascending order and race the shared minimum down,
// so a block is skipped only once nothing below the current minimum can
// remain in it.
template <typename Pred>
std::uint64_t find_first_parallel(std::uint64_t n, Pred&& pred) {
#ifdef ORELAB_HAVE_OPENMP
    std::atomic<std::uint64_t> best{npos};
    constexpr std::uint64_t block = 1024;
#pragma omp parallel
    {
        const std::uint64_t tid = static_cast<std::uint64_t>(omp_get_thread_num());
        const std::uint64_t nth = static_cast<std::uint64_t>(omp_get_num_threads());
        for (std::uint64_t base = block * tid; base < n; base += block * nth) {
            if (best.load(std::memory_order_relaxed) <= base) break;
            const std::uint64_t hi = base + block < n ? base + block : n;
            for (std::uint64_t i = base; i < hi; ++i) {
                if (best.load(std::memory_order_relaxed) <= i) break;
                if (pred(i)) {
                    std::uint64_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                    break;
                }
            }
        }
    }
    return best.load();
#else
    return find_first_serial(n, pred);
#endif
}

// All satisfying indices in ascending order: contiguous ranges per thread,
// results concatenated in thread order.
template <typename Pred>
std::vector<std::uint64_t> collect_parallel(std::uint64_t n, Pred&& pred) {
#ifdef ORELAB_HAVE_OPENMP
    const std::uint64_t nth =
        static_cast<std::uint64_t>(omp_get_max_threads());
    std::vector<std::vector<std::uint64_t>> parts(nth);
#pragma omp parallel num_threads(static_cast<int>(nth))
    {
        const std::uint64_t tid = static_cast<std::uint64_t>(omp_get_thread_num());
        const std::uint64_t lo = n * tid / nth;
        const std::uint64_t hi = n * (tid + 1) / nth;
        auto& mine = parts[tid];
        for (std::uint64_t i = lo; i < hi; ++i)
            if (pred(i)) mine.push_back(i);
    }
    std::vector<std::uint64_t> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
#else
    return collect_serial(n, pred);
#endif
}

template <typename Pred>
std::uint64_t count_parallel(std::uint64_t n, Pred&& pred) {
#ifdef ORELAB_HAVE_OPENMP
    std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        if (pred(static_cast<std::uint64_t>(i))) ++total;
    return total;
#else
    return count_serial(n, pred);
#endif
}

// ---- dispatching fronts; all scans in the library go through these ----

template <typename Pred>
std::uint64_t find_first(std::uint64_t n, Pred&& pred) {
    if (parallel_enabled() && n >= parallel_threshold)
        return find_first_parallel(n, pred);
    return find_first_serial(n, pred);
}

template <typename Pred>
std::vector<std::uint64_t> collect(std::uint64_t n, Pred&& pred) {
    if (parallel_enabled() && n >= parallel_threshold)
        return collect_parallel(n, pred);
    return collect_serial(n, pred);
}

template <typename Pred>
std::uint64_t count(std::uint64_t n, Pred&& pred) {
    if (parallel_enabled() && n >= parallel_threshold)
        return count_parallel(n, pred);
    return count_serial(n, pred);
}

template <typename Pred>
bool all_of(std::uint64_t n, Pred&& pred) {
    return find_first(n, [&](std::uint64_t i) { return !pred(i); }) == npos;
}

} // namespace orelab::scan
