/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/wall.hpp"

#include <stdexcept>

namespace tvx {

WallOperator WallOperator::inverse() const {
    WallOperator r = *this;
    for (auto& e : r.spectrum) e.omega = -e.omega;
    return r;
}

WallLog::WallLog(ContextPtr ctx, LatticeVec gamma) : ctx_(std::move(ctx)), gamma_(gamma) {
    if (!gamma.is_primitive()) throw std::invalid_argument("wall direction must be primitive");
}

void WallLog::add(int m, const Multidegree& d, const QLaurent& reduced) {
    if (reduced.is_zero() || !ctx_->admits(d)) return;
    if (m == 0) throw std::invalid_argument("wall log term with m = 0");
    auto [it, inserted] = terms_.try_emplace(Key{m, d}, reduced);
    if (!inserted) {
        it->second += reduced;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QLaurent WallLog::reduced(int m, const Multidegree& d) const {
    auto it = terms_.find(Key{m, d});
    return it == terms_.end() ? QLaurent() : it->second;
}

QRational WallLog::coefficient(int m, const Multidegree& d) const {
    return QRational(reduced(m, d), QLaurent::monomial(m) - QLaurent::monomial(-m));
}

WallLog& WallLog::operator+=(const WallLog& o) {
    if (o.terms_.empty()) return *this;
    if (!ctx_) *this = WallLog(o.ctx_, o.gamma_);
    if (o.gamma_ != gamma_) throw std::invalid_argument("adding wall logs of different directions");
    for (const auto& [k, L] : o.terms_) add(k.first, k.second, L);
    return *this;
}

WallLog WallLog::operator-() const {
    WallLog r = *this;
    for (auto& [k, L] : r.terms_) L = -L;
    return r;
}

TorusElementR WallLog::hamiltonian() const {
    TorusElementR r(ctx_);
    for (const auto& [k, L] : terms_)
        r.add_term(k.second, gamma_ * k.first, QRational(L, QLaurent::monomial(k.first) - QLaurent::monomial(-k.first)));
    return r;
}

WallLog WallLog::truncated(ContextPtr ctx) const {
    WallLog r(ctx, gamma_);
    for (const auto& [k, L] : terms_) r.add(k.first, k.second, L);
    return r;
}

WallLog qdilog_log(ContextPtr ctx, const Multidegree& sigma, LatticeVec alpha, int n, const Rat& omega) {
    if (sigma.is_zero()) throw std::invalid_argument("qdilog_log: sigma must lie in the maximal ideal");
    if (alpha.is_zero()) throw std::invalid_argument("qdilog_log: zero lattice vector");
    LatticeVec gamma = alpha.primitive();
    int m = alpha.gcd();
    WallLog h(ctx, gamma);
    if (is_zero(omega)) return h;
    std::optional<Multidegree> power = sigma;
    for (int k = 1; power && ctx->admits(*power); ++k) {
        // (-1)^{k(n+1)+1} (Ω/k) v^{nk} [m]_{v^k}
        int sign = ((k * (n + 1) + 1) % 2 == 0) ? 1 : -1;
        Rat c = omega / k * sign;
        h.add(k * m, *power, q_number_at(m, k).shifted(n * k) * c);
        power = ctx->multiply(*power, sigma);
    }
    return h;
}

WallLog wall_operator_log(ContextPtr ctx, const WallOperator& op) {
    WallLog h(ctx, op.gamma);
    for (const auto& e : op.spectrum) {
        Rat exponent = (e.n % 2 == 0) ? e.omega : Rat(-e.omega);
        h += qdilog_log(ctx, e.sigma, op.gamma * e.k, e.n, exponent);
    }
    return h;
}

namespace {
// ê_β^{-1} θ̂(ê_β): depends on β only through ⟨γ,β⟩.
TorusElement action_factor(const ContextPtr& ctx, const WallOperator& op, int pairing_with_gamma) {
    TorusElement product = TorusElement::one(ctx);
    for (const auto& e : op.spectrum) {
        LatticeVec alpha = op.gamma * e.k;
        int kappa = e.k * pairing_with_gamma;
        if (kappa == 0 || is_zero(e.omega)) continue;
        Rat exponent = (e.n % 2 == 0) ? e.omega : Rat(-e.omega);
        if (kappa < 0) exponent = -exponent;
        // powers X^r = σ^r ê_{rα} admitted by the truncation
        std::vector<Multidegree> powers{Multidegree{}};
        for (auto p = std::optional<Multidegree>(e.sigma); p && ctx->admits(*p); p = ctx->multiply(*p, e.sigma))
            powers.push_back(*p);
        int rmax = static_cast<int>(powers.size()) - 1;
        std::vector<Rat> binom = binomial_series(exponent, rmax);
        int lo = kappa > 0 ? 0 : kappa;
        int hi = kappa > 0 ? kappa - 1 : -1;
        // ∏_j (1 + c_j X)^exponent with c_j = (-1)^n v^{2j+n+1}, as a polynomial in X
        std::vector<QLaurent> poly(static_cast<size_t>(rmax) + 1);
        poly[0] = QLaurent(1);
        for (int j = lo; j <= hi; ++j) {
            std::vector<QLaurent> factor(poly.size());
            for (int r = 0; r <= rmax; ++r) {
                Rat coef = binom[static_cast<size_t>(r)];
                if (e.n % 2 != 0 && r % 2 != 0) coef = -coef;
                factor[static_cast<size_t>(r)] = QLaurent::monomial(r * (2 * j + e.n + 1), coef);
            }
            std::vector<QLaurent> next(poly.size());
            for (size_t a = 0; a < poly.size(); ++a)
                for (size_t b = 0; a + b < poly.size(); ++b) next[a + b] += poly[a] * factor[b];
            poly = std::move(next);
        }
        TorusElement f(ctx);
        for (int r = 0; r <= rmax; ++r)
            f.add_term(powers[static_cast<size_t>(r)], alpha * r, poly[static_cast<size_t>(r)]);
        product = commutative_product(product, f);
    }
    return product;
}
}  // namespace

TorusElement adjoint_action(ContextPtr ctx, const WallOperator& op, LatticeVec beta) {
    return twisted_product(generator(ctx, beta), action_factor(ctx, op, pairing(op.gamma, beta)));
}

namespace {
template <class C>
C lift(const QLaurent& f);
template <>
QLaurent lift<QLaurent>(const QLaurent& f) { return f; }
template <>
QRational lift<QRational>(const QLaurent& f) { return QRational(f); }
}  // namespace

template <class C>
Series<C> apply_log(const WallLog& h, const Series<C>& x, int sign) {
    if (h.is_zero()) return x;
    const SeriesContext& ctx = x.ctx();
    const LatticeVec gamma = h.gamma();
    std::map<int, TorusElement> cache;
    auto factor = [&](int kappa) -> const TorusElement& {
        auto it = cache.find(kappa);
        if (it != cache.end()) return it->second;
        TorusElement g(x.context());
        for (const auto& [key, L] : h.terms()) {
            int m = key.first;
            QLaurent c = L * q_number_at(kappa, m).shifted(m * kappa);
            if (sign < 0) c = -c;
            g.add_term(key.second, gamma * m, c);
        }
        return cache.emplace(kappa, series_exp(g)).first->second;
    };
    Series<C> r(x.context());
    for (const auto& [k, c] : x.terms()) {
        int kappa = pairing(gamma, k.lat);
        if (kappa == 0) {
            r.add_term(k.deg, k.lat, c);
            continue;
        }
        for (const auto& [kf, f] : factor(kappa).terms()) {
            auto d = ctx.multiply(k.deg, kf.deg);
            if (!d) continue;
            r.add_term(*d, k.lat + kf.lat, c * lift<C>(f.shifted(pairing(k.lat, kf.lat))));
        }
    }
    return r;
}

template Series<QLaurent> apply_log(const WallLog&, const Series<QLaurent>&, int);
template Series<QRational> apply_log(const WallLog&, const Series<QRational>&, int);

TorusElement apply_operator(const WallOperator& op, const TorusElement& x) {
    std::map<int, TorusElement> factors;
    std::map<LatticeVec, TorusElement> cache;
    TorusElement r(x.context());
    for (const auto& [k, c] : x.terms()) {
        auto it = cache.find(k.lat);
        if (it == cache.end()) {
            int p = pairing(op.gamma, k.lat);
            auto f = factors.find(p);
            if (f == factors.end()) f = factors.emplace(p, action_factor(x.context(), op, p)).first;
            it = cache.emplace(k.lat, twisted_product(generator(x.context(), k.lat), f->second)).first;
        }
        for (const auto& [ki, ci] : it->second.terms()) {
            auto d = x.ctx().multiply(k.deg, ki.deg);
            if (!d) continue;
            r.add_term(*d, ki.lat, c * ci);
        }
    }
    return r;
}

}  // namespace tvx
