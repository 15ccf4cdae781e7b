/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <vector>

#include "tvx/parallel.hpp"
#include "tvx/series.hpp"

namespace tvx {

/// Element of the truncated quantum torus: sum of c * t^d * ê_lat.
using TorusElement = Series<QLaurent>;
/// Same, with rational-function coefficients (elementary walls whose factors
/// have denominators [j]_q).
using TorusElementR = Series<QRational>;

inline TorusElement generator(ContextPtr ctx, LatticeVec lat) {
    return TorusElement::monomial(std::move(ctx), {}, lat, QLaurent(1));
}

/// ê_α ê_β = v^{<α,β>} ê_{α+β}, extended bilinearly, truncated per context.
template <class C>
Series<C> twisted_product(const Series<C>& x, const Series<C>& y, Exec exec = Exec::Serial) {
    static_assert(CoeffTraits<C>::twisted, "twisted product needs a q-coefficient ring");
    x.check_context(y);
    const SeriesContext& ctx = x.ctx();
    auto one_row = [&](const typename Series<C>::Key& kx, const C& cx, Series<C>& out) {
        for (const auto& [ky, cy] : y.terms()) {
            auto d = ctx.multiply(kx.deg, ky.deg);
            if (!d) continue;
            out.add_term(*d, kx.lat + ky.lat, CoeffTraits<C>::shift(cx * cy, pairing(kx.lat, ky.lat)));
        }
    };
    Series<C> r(x.context());
    if (exec == Exec::Serial || x.size() < 2) {
        for (const auto& [kx, cx] : x.terms()) one_row(kx, cx, r);
        return r;
    }
    // Each row lands in its own partial sum; partials are added in row order
    // so the result does not depend on scheduling.
    std::vector<const typename Series<C>::Map::value_type*> rows;
    rows.reserve(x.size());
    for (const auto& kv : x.terms()) rows.push_back(&kv);
    std::vector<Series<C>> partial(rows.size(), Series<C>(x.context()));
    for_each_index(rows.size(), exec, [&](std::size_t i) { one_row(rows[i]->first, rows[i]->second, partial[i]); });
    for (const auto& p : partial) r += p;
    return r;
}

template <class C>
Series<C> commutator(const Series<C>& x, const Series<C>& y) {
    return twisted_product(x, y) - twisted_product(y, x);
}

/// Substitutes v = 1 termwise (only meaningful for Laurent coefficients).
Series<Rat> classical_limit(const TorusElement& x);

TorusElementR to_rational(const TorusElement& x);
/// Throws std::domain_error if some coefficient does not clear.
TorusElement to_laurent(const TorusElementR& x);

}  // namespace tvx
