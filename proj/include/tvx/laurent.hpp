/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tvx/rat.hpp"

namespace tvx {

/// Laurent polynomial in v = q^{1/2} with exact rational coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two equal
/// polynomials always have identical term vectors.
class QLaurent {
public:
    using Term = std::pair<int, Rat>;

    QLaurent() = default;
    QLaurent(const Rat& c);  // NOLINT: constants convert implicitly
    QLaurent(long c);        // NOLINT

    static QLaurent monomial(int e, const Rat& c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    int min_exponent() const;
    int max_exponent() const;
    Rat coefficient(int e) const;
    const std::vector<Term>& terms() const { return terms_; }

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent& operator*=(const QLaurent& o);
    QLaurent& operator*=(const Rat& c);
    QLaurent& operator/=(const Rat& c);
    QLaurent operator-() const;

    /// Multiply by v^e.
    QLaurent shifted(int e) const;
    /// v -> v^{-1}.
    QLaurent bar() const;
    /// v -> v^j (j may be negative).
    QLaurent substitute_power(int j) const;
    /// v -> -v.
    QLaurent negate_variable() const;
    Rat eval_at_one() const;

    bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const QLaurent& o) const { return !(*this == o); }

    /// Canonical text form, e.g. "v^2 + 1 + v^-2", "-1/2*v".
    std::string to_string() const;
    static QLaurent parse(std::string_view s);

    // Builds from unsorted terms; merges duplicates and drops zeros.
    static QLaurent from_terms(std::vector<Term> terms);

private:
    std::vector<Term> terms_;
};

inline QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
inline QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
QLaurent operator*(const QLaurent& a, const QLaurent& b);
inline QLaurent operator*(QLaurent a, const Rat& c) { return a *= c; }
inline QLaurent operator*(const Rat& c, QLaurent a) { return a *= c; }

inline bool is_zero(const QLaurent& p) { return p.is_zero(); }

/// [m]_v = (v^m - v^{-m}) / (v - v^{-1}).
QLaurent q_number(int m);
/// [m] evaluated at v^j, i.e. (v^{jm} - v^{-jm}) / (v^j - v^{-j}).
QLaurent q_number_at(int m, int j);

inline QLaurent bar_involution(const QLaurent& p) { return p.bar(); }
inline Rat eval_at_one(const QLaurent& p) { return p.eval_at_one(); }

/// Exact quotient num/den if den divides num in Q[v, v^{-1}].
std::optional<QLaurent> divide_exact(const QLaurent& num, const QLaurent& den);

/// Monic gcd in Q[v] of the polynomial parts (exponents shifted to start at 0).
QLaurent poly_gcd(const QLaurent& a, const QLaurent& b);

bool is_bar_symmetric(const QLaurent& p);

}  // namespace tvx
