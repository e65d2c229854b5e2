#pragma once

#include <cstddef>

#include "polyratio/config.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polyratio {

/// Runs f(i) for i in [0, n). Under Exec::Parallel the iterations run on
/// OpenMP threads; callers must write results into per-index slots (or use
/// an order-independent reduction) so both policies produce identical output.
template <class F>
void par_for(Exec exec, std::size_t n, F&& f)
{
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
        #pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            f(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i)
        f(i);
}

} // namespace polyratio
