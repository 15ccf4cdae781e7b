/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/qrational.hpp"

#include <stdexcept>

namespace tvx {

QRational::QRational(const QLaurent& num, const QLaurent& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("QRational with zero denominator");
    normalize();
}

void QRational::normalize() {
    if (num_.is_zero()) {
        den_ = QLaurent(1);
        return;
    }
    int ds = den_.min_exponent();
    if (ds != 0) {
        den_ = den_.shifted(-ds);
        num_ = num_.shifted(-ds);
    }
    if (den_.terms().size() > 1) {
        QLaurent g = poly_gcd(num_.shifted(-num_.min_exponent()), den_);
        if (g.max_exponent() > 0) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    Rat lead = den_.terms().back().second;
    if (lead != 1) {
        num_ /= lead;
        den_ /= lead;
    }
}

std::optional<QLaurent> QRational::to_laurent() const {
    if (is_laurent()) return num_;
    return std::nullopt;
}

QLaurent QRational::laurent_or_throw(const char* what) const {
    if (!is_laurent())
        throw std::domain_error(std::string(what) + ": denominator does not clear (" + to_string() + ")");
    return num_;
}

QRational& QRational::operator+=(const QRational& o) {
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!is_laurent()) normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QRational& QRational::operator-=(const QRational& o) { return *this += -o; }

QRational& QRational::operator*=(const QRational& o) {
    if (is_laurent() && o.is_laurent()) {
        num_ *= o.num_;
        if (num_.is_zero()) den_ = QLaurent(1);
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QRational& QRational::operator/=(const QRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

QRational QRational::operator-() const {
    QRational r = *this;
    r.num_ = -r.num_;
    return r;
}

QRational QRational::shifted(int e) const {
    QRational r = *this;
    r.num_ = r.num_.shifted(e);
    return r;
}

QRational QRational::bar() const { return QRational(num_.bar(), den_.bar()); }

std::string QRational::to_string() const {
    if (is_laurent()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace tvx
