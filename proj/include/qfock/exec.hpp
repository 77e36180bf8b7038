#pragma once

#include <atomic>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qfock {

// Process-wide execution policy for the parallel kernels. Every parallel
// site has a serial path that performs the identical merges; with exact
// arithmetic in ordered containers the two paths are bit-identical.
enum class Exec { serial, openmp };

namespace detail {
inline std::atomic<Exec>& exec_flag() {
    static std::atomic<Exec> e{Exec::openmp};
    return e;
}
}  // namespace detail

inline void set_exec(Exec e) { detail::exec_flag().store(e); }
inline Exec current_exec() {
#ifdef _OPENMP
    return detail::exec_flag().load();
#else
    return Exec::serial;
#endif
}

// Evaluates fn(0..jobs-1), merging the per-job values into an accumulator.
// merge must be associative and commutative; fn must be pure.
template <class Acc, class Fn, class Merge>
Acc map_reduce(std::size_t jobs, const Acc& zero, Fn&& fn, Merge&& merge) {
#ifdef _OPENMP
    if (current_exec() == Exec::openmp && jobs > 1) {
        Acc total = zero;
#pragma omp parallel
        {
            Acc local = zero;
#pragma omp for schedule(dynamic) nowait
            for (long i = 0; i < static_cast<long>(jobs); ++i)
                merge(local, fn(static_cast<std::size_t>(i)));
#pragma omp critical(qfock_map_reduce)
            merge(total, std::move(local));
        }
        return total;
    }
#endif
    Acc total = zero;
    for (std::size_t i = 0; i < jobs; ++i) merge(total, fn(i));
    return total;
}

}  // namespace qfock
