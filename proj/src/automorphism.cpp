/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/automorphism.hpp"

#include <map>
#include <stdexcept>

namespace tvx {

template <class C>
bool GeneratorImagesT<C>::is_identity() const {
    return x == Series<C>::monomial(x.context(), {}, {1, 0}, C(1)) &&
           y == Series<C>::monomial(y.context(), {}, {0, 1}, C(1));
}

template <class C>
GeneratorImagesT<C> identity_images(ContextPtr ctx) {
    return {Series<C>::monomial(ctx, {}, {1, 0}, C(1)), Series<C>::monomial(ctx, {}, {0, 1}, C(1))};
}

GeneratorImages images_of(ContextPtr ctx, const WallOperator& op) {
    return {adjoint_action(ctx, op, {1, 0}), adjoint_action(ctx, op, {0, 1})};
}

template <class C>
GeneratorImagesT<C> images_of(ContextPtr ctx, const WallLog& h, int sign) {
    auto id = identity_images<C>(ctx);
    return {apply_log(h, id.x, sign), apply_log(h, id.y, sign)};
}

template <class C>
Series<C> invert_monomial_unit(const Series<C>& s) {
    // s = ê_β U with U = 1 + (positive degree); the degree-zero part must be a
    // single monomial ê_β.
    LatticeVec beta;
    int found = 0;
    for (const auto& [k, c] : s.terms())
        if (k.deg.is_zero()) {
            if (!(c == C(1))) throw std::invalid_argument("invert: leading coefficient is not 1");
            beta = k.lat;
            ++found;
        }
    if (found != 1) throw std::invalid_argument("invert: not a monomial unit");
    auto ctx = s.context();
    Series<C> lead_inv = Series<C>::monomial(ctx, {}, -beta, C(1));
    Series<C> u = twisted_product(lead_inv, s);
    Series<C> one = Series<C>::one(ctx);
    Series<C> w = one - u;  // nilpotent by truncation
    Series<C> inv = one;
    Series<C> power = one;
    while (true) {
        power = twisted_product(power, w);
        if (power.is_zero()) break;
        inv += power;
    }
    return twisted_product(inv, lead_inv);
}

namespace {
template <class C>
class PowerCache {
public:
    explicit PowerCache(const Series<C>& base) : ctx_(base.context()) { pos_.push_back(Series<C>::one(ctx_)); pos_.push_back(base); }
    const Series<C>& get(int n) {
        if (n >= 0) {
            while (static_cast<int>(pos_.size()) <= n) pos_.push_back(twisted_product(pos_.back(), pos_[1]));
            return pos_[static_cast<size_t>(n)];
        }
        if (neg_.empty()) {
            neg_.push_back(Series<C>::one(ctx_));
            neg_.push_back(invert_monomial_unit(pos_[1]));
        }
        while (static_cast<int>(neg_.size()) <= -n) neg_.push_back(twisted_product(neg_.back(), neg_[1]));
        return neg_[static_cast<size_t>(-n)];
    }

private:
    ContextPtr ctx_;
    std::vector<Series<C>> pos_, neg_;
};
}  // namespace

template <class C>
Series<C> apply_images(const GeneratorImagesT<C>& f, const Series<C>& z) {
    f.x.check_context(z);
    PowerCache<C> px(f.x), py(f.y);
    std::map<LatticeVec, Series<C>> image;
    const SeriesContext& ctx = z.ctx();
    Series<C> r(z.context());
    for (const auto& [k, c] : z.terms()) {
        auto it = image.find(k.lat);
        if (it == image.end()) {
            Series<C> m = twisted_product(px.get(k.lat.a), py.get(k.lat.b));
            m = m.scaled(CoeffTraits<C>::shift(C(1), -k.lat.a * k.lat.b));
            it = image.emplace(k.lat, std::move(m)).first;
        }
        for (const auto& [ki, ci] : it->second.terms()) {
            auto d = ctx.multiply(k.deg, ki.deg);
            if (!d) continue;
            r.add_term(*d, ki.lat, c * ci);
        }
    }
    return r;
}

template <class C>
GeneratorImagesT<C> compose(const GeneratorImagesT<C>& f, const GeneratorImagesT<C>& g) {
    return {apply_images(f, g.x), apply_images(f, g.y)};
}

template struct GeneratorImagesT<QLaurent>;
template struct GeneratorImagesT<QRational>;
template GeneratorImagesT<QLaurent> identity_images(ContextPtr);
template GeneratorImagesT<QRational> identity_images(ContextPtr);
template GeneratorImagesT<QLaurent> images_of(ContextPtr, const WallLog&, int);
template GeneratorImagesT<QRational> images_of(ContextPtr, const WallLog&, int);
template Series<QLaurent> apply_images(const GeneratorImagesT<QLaurent>&, const Series<QLaurent>&);
template Series<QRational> apply_images(const GeneratorImagesT<QRational>&, const Series<QRational>&);
template GeneratorImagesT<QLaurent> compose(const GeneratorImagesT<QLaurent>&, const GeneratorImagesT<QLaurent>&);
template GeneratorImagesT<QRational> compose(const GeneratorImagesT<QRational>&, const GeneratorImagesT<QRational>&);
template Series<QLaurent> invert_monomial_unit(const Series<QLaurent>&);
template Series<QRational> invert_monomial_unit(const Series<QRational>&);

}  // namespace tvx
