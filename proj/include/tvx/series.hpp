/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvx/lattice.hpp"
#include "tvx/qrational.hpp"

namespace tvx {

inline constexpr int kMaxCentral = 8;
inline constexpr int kMaxNilpotent = 64;

/// Monomial t^d * u_I: central exponents plus a square-free set of nilpotent
/// variables.
struct Multidegree {
    std::array<std::uint8_t, kMaxCentral> exps{};
    std::uint64_t nil = 0;

    auto operator<=>(const Multidegree&) const = default;
    bool operator==(const Multidegree&) const = default;

    bool is_zero() const;
    int central_total() const;
    int total() const;  // central degree plus number of nilpotent factors
    /// Every central exponent divisible by j and no nilpotent part.
    bool divisible_by(int j) const;
    Multidegree divided_by(int j) const;
};

struct NilpotentLabel {
    int line = 0;   // central variable the u-variable refines
    int level = 0;  // 1-based index j of u_{line, j}
    bool operator==(const NilpotentLabel&) const = default;
};

class SeriesContext;
using ContextPtr = std::shared_ptr<const SeriesContext>;

/// Variables and truncation orders of a coefficient ring R_k (central
/// variables t_i with t_i^{k_i+1} = 0) optionally tensored with square-zero
/// variables u_{ij}. An optional cap on total degree is used by the
/// order-by-order engines.
class SeriesContext {
public:
    SeriesContext(std::vector<std::string> central_names, std::vector<int> orders,
                  std::vector<NilpotentLabel> nilpotent = {}, int total_order = -1);

    static ContextPtr make(std::vector<std::string> central_names, std::vector<int> orders,
                           std::vector<NilpotentLabel> nilpotent = {}, int total_order = -1);
    /// n central variables t1..tn all truncated at order k.
    static ContextPtr uniform(int n, int k);

    int central_count() const { return static_cast<int>(names_.size()); }
    int order(int i) const { return orders_[static_cast<size_t>(i)]; }
    const std::vector<int>& orders() const { return orders_; }
    const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
    int nilpotent_count() const { return static_cast<int>(nil_.size()); }
    const NilpotentLabel& nilpotent(int b) const { return nil_[static_cast<size_t>(b)]; }
    int nilpotent_index(int line, int level) const;
    int total_order() const { return total_order_; }

    bool admits(const Multidegree& d) const;
    /// Product monomial, or nullopt if it is truncated away.
    std::optional<Multidegree> multiply(const Multidegree& x, const Multidegree& y) const;

    Multidegree central(std::vector<int> exps) const;
    Multidegree nilpotent_monomial(std::uint64_t mask) const;

    std::string format(const Multidegree& d) const;

    bool same_variables(const SeriesContext& o) const {
        return names_ == o.names_ && orders_ == o.orders_ && nil_ == o.nil_;
    }
    ContextPtr with_total_order(int total) const;

private:
    std::vector<std::string> names_;
    std::vector<int> orders_;
    std::vector<NilpotentLabel> nil_;
    int total_order_;
};

/// C(exponent, n) for n = 0..order.
std::vector<Rat> binomial_series(const Rat& exponent, int order);

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rat> {
    static constexpr bool twisted = false;
};
template <>
struct CoeffTraits<QLaurent> {
    static constexpr bool twisted = true;
    static QLaurent shift(const QLaurent& c, int e) { return c.shifted(e); }
};
template <>
struct CoeffTraits<QRational> {
    static constexpr bool twisted = true;
    static QRational shift(const QRational& c, int e) { return c.shifted(e); }
};

/// Truncated sum of terms c * t^d * e_lat. Used for central series (lattice
/// part zero), classical Poisson-algebra elements (C = Rat) and quantum torus
/// elements (C = QLaurent or QRational).
template <class C>
class Series {
public:
    struct Key {
        Multidegree deg;
        LatticeVec lat;
        auto operator<=>(const Key&) const = default;
        bool operator==(const Key&) const = default;
    };
    using Map = std::map<Key, C>;

    Series() = default;
    explicit Series(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Series one(ContextPtr ctx) {
        Series s(std::move(ctx));
        s.add_term({}, {0, 0}, C(1));
        return s;
    }
    static Series monomial(ContextPtr ctx, const Multidegree& d, LatticeVec lat, const C& c) {
        Series s(std::move(ctx));
        s.add_term(d, lat, c);
        return s;
    }

    const ContextPtr& context() const { return ctx_; }
    const SeriesContext& ctx() const { return *ctx_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    /// Adds c * t^d e_lat, dropping it if truncated.
    void add_term(const Multidegree& d, LatticeVec lat, const C& c) {
        if (is_zero_coeff(c) || !ctx_->admits(d)) return;
        auto [it, inserted] = terms_.try_emplace(Key{d, lat}, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    C coefficient(const Multidegree& d, LatticeVec lat) const {
        auto it = terms_.find(Key{d, lat});
        return it == terms_.end() ? C() : it->second;
    }

    Series& operator+=(const Series& o) {
        check_context(o);
        for (const auto& [k, c] : o.terms_) add_term(k.deg, k.lat, c);
        return *this;
    }
    Series& operator-=(const Series& o) {
        check_context(o);
        for (const auto& [k, c] : o.terms_) add_term(k.deg, k.lat, -c);
        return *this;
    }
    Series operator-() const {
        Series r(ctx_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    Series scaled(const C& f) const {
        Series r(ctx_);
        for (const auto& [k, c] : terms_) r.add_term(k.deg, k.lat, c * f);
        return r;
    }
    bool operator==(const Series& o) const { return terms_ == o.terms_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    /// Terms whose multidegree is zero.
    bool has_constant_part() const {
        for (const auto& [k, c] : terms_)
            if (k.deg.is_zero()) return true;
        return false;
    }

    /// Same terms, re-truncated under another context with the same
    /// variables (e.g. a total-degree cap).
    Series recontext(ContextPtr other) const {
        if (!ctx_->same_variables(*other)) throw std::invalid_argument("context mismatch");
        Series r(std::move(other));
        for (const auto& [k, c] : terms_) r.add_term(k.deg, k.lat, c);
        return r;
    }

    void check_context(const Series& o) const {
        if (ctx_ != o.ctx_ && !ctx_->same_variables(*o.ctx_))
            throw std::invalid_argument("context mismatch");
    }

private:
    static bool is_zero_coeff(const C& c) { return tvx::is_zero(c); }
    ContextPtr ctx_;
    Map terms_;
};

template <class C>
Series<C> operator+(Series<C> a, const Series<C>& b) { return a += b; }
template <class C>
Series<C> operator-(Series<C> a, const Series<C>& b) { return a -= b; }

/// Product ignoring the twist (q = 1 / classical product, or products inside
/// a single direction where the twist vanishes anyway).
template <class C>
Series<C> commutative_product(const Series<C>& x, const Series<C>& y) {
    x.check_context(y);
    const SeriesContext& ctx = x.ctx();
    Series<C> r(x.context());
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            auto d = ctx.multiply(kx.deg, ky.deg);
            if (!d) continue;
            r.add_term(*d, kx.lat + ky.lat, cx * cy);
        }
    return r;
}

/// exp(g) for g with no constant part; the series terminates by truncation.
template <class C, class Mul>
Series<C> series_exp(const Series<C>& g, Mul mul) {
    if (g.has_constant_part()) throw std::invalid_argument("series_exp: nonzero constant term");
    Series<C> result = Series<C>::one(g.context());
    Series<C> power = result;
    for (int n = 1; !power.is_zero(); ++n) {
        power = mul(power, g).scaled(C(Rat(1, n)));
        result += power;
    }
    return result;
}

template <class C>
Series<C> series_exp(const Series<C>& g) {
    return series_exp(g, [](const Series<C>& a, const Series<C>& b) { return commutative_product(a, b); });
}

/// log(f) for f = 1 + (terms of positive degree).
template <class C, class Mul>
Series<C> series_log(const Series<C>& f, Mul mul) {
    Series<C> g = f - Series<C>::one(f.context());
    if (g.has_constant_part()) throw std::invalid_argument("series_log: constant term is not 1");
    Series<C> result(f.context());
    Series<C> power = Series<C>::one(f.context());
    for (int n = 1;; ++n) {
        power = mul(power, g);
        if (power.is_zero()) break;
        result += power.scaled(C(Rat(n % 2 == 1 ? 1 : -1, n)));
    }
    return result;
}

template <class C>
Series<C> series_log(const Series<C>& f) {
    return series_log(f, [](const Series<C>& a, const Series<C>& b) { return commutative_product(a, b); });
}

}  // namespace tvx
