/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <optional>
#include <string>

#include "tvx/laurent.hpp"

namespace tvx {

/// Rational function num/den in v.
///
/// Canonical form: gcd removed, den is a polynomial in v with nonzero
/// constant term and leading coefficient 1. Any monomial factor of the
/// denominator is absorbed into the numerator's exponents.
class QRational {
public:
    QRational() : den_(1) {}
    QRational(const QLaurent& p) : num_(p), den_(1) {}  // NOLINT
    QRational(const Rat& c) : num_(c), den_(1) {}       // NOLINT
    QRational(long c) : num_(c), den_(1) {}             // NOLINT
    QRational(const QLaurent& num, const QLaurent& den);

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == QLaurent(1); }
    std::optional<QLaurent> to_laurent() const;
    /// Like to_laurent but throws std::domain_error when the denominator
    /// does not clear.
    QLaurent laurent_or_throw(const char* what) const;

    QRational& operator+=(const QRational& o);
    QRational& operator-=(const QRational& o);
    QRational& operator*=(const QRational& o);
    QRational& operator/=(const QRational& o);
    QRational operator-() const;

    QRational shifted(int e) const;
    QRational bar() const;

    bool operator==(const QRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRational& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void normalize();
    QLaurent num_;
    QLaurent den_;
};

inline QRational operator+(QRational a, const QRational& b) { return a += b; }
inline QRational operator-(QRational a, const QRational& b) { return a -= b; }
inline QRational operator*(QRational a, const QRational& b) { return a *= b; }
inline QRational operator/(QRational a, const QRational& b) { return a /= b; }

inline bool is_zero(const QRational& r) { return r.is_zero(); }

}  // namespace tvx
