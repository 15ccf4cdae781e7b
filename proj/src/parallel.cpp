/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/parallel.hpp"

#ifdef TVX_HAVE_OPENMP
#include <omp.h>
#endif

namespace tvx {

int parallel_threads() {
#ifdef TVX_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace tvx
