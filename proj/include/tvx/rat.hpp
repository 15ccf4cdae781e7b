/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tvx {

// Exact rationals. mpq_class keeps values canonical (gcd 1, den > 0) as long
// as every constructor path goes through canonicalize(), which the helpers
// below do.
using Rat = mpq_class;

std::string to_string(const Rat& r);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Rat parse_rat(std::string_view s);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

Rat factorial(int n);

// Generalized binomial coefficient C(top, n) for rational top.
Rat binomial(const Rat& top, int n);

}  // namespace tvx
