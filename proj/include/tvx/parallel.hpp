/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstddef>

namespace tvx {

/// Execution policy for kernels that have both a serial reference path and an
/// OpenMP path. Both paths must produce identical results.
enum class Exec { Serial, Parallel };

/// Number of OpenMP threads that a Parallel kernel would use (1 without OpenMP).
int parallel_threads();

/// Calls body(i) for i in [0, n). Iterations must be independent.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
#ifdef TVX_HAVE_OPENMP
    if (exec == Exec::Parallel) {
        const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)exec;
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace tvx
