/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <compare>
#include <numeric>
#include <string>

namespace tvx {

struct LatticeVec {
    int a = 0;
    int b = 0;

    auto operator<=>(const LatticeVec&) const = default;
    bool operator==(const LatticeVec&) const = default;

    LatticeVec operator+(LatticeVec o) const { return {a + o.a, b + o.b}; }
    LatticeVec operator-(LatticeVec o) const { return {a - o.a, b - o.b}; }
    LatticeVec operator-() const { return {-a, -b}; }
    LatticeVec operator*(int m) const { return {a * m, b * m}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_positive() const { return a >= 0 && b >= 0 && !is_zero(); }
    int gcd() const { return std::gcd(a, b); }
    bool is_primitive() const { return gcd() == 1; }
    LatticeVec primitive() const {
        int g = gcd();
        return g == 0 ? *this : LatticeVec{a / g, b / g};
    }
    std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// <(a,b),(a',b')> = ab' - a'b.
inline int pairing(LatticeVec x, LatticeVec y) { return x.a * y.b - y.a * x.b; }

}  // namespace tvx
