/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/omega.hpp"

#include <stdexcept>

namespace tvx {

namespace {

// v^n -> (-1)^{n(j+1)} v^{jn}: P evaluated with -v replaced by (-v)^j.
QLaurent shifted_substitution(const QLaurent& p, int j) {
    std::vector<QLaurent::Term> out;
    for (const auto& [n, c] : p.terms()) {
        bool flip = ((static_cast<long>(n) * (j + 1)) % 2) != 0;
        out.emplace_back(n * j, flip ? Rat(-c) : c);
    }
    return QLaurent::from_terms(std::move(out));
}

std::optional<Multidegree> scaled(const Multidegree& d, int j) {
    if (d.nil != 0) return std::nullopt;
    Multidegree r = d;
    for (auto& e : r.exps) {
        int x = e * j;
        if (x > 255) return std::nullopt;
        e = static_cast<std::uint8_t>(x);
    }
    return r;
}

}  // namespace

Rat OmegaSpectrum::omega(int k, int n, const Multidegree& sigma) const {
    auto it = poincare.find({k, sigma});
    return it == poincare.end() ? Rat(0) : it->second.coefficient(n);
}

WallOperator OmegaSpectrum::to_operator() const {
    WallOperator op{gamma, {}};
    for (const auto& [key, p] : poincare)
        for (const auto& [n, c] : p.terms()) op.spectrum.push_back({key.first, n, c, key.second});
    return op;
}

OmegaSpectrum extract_omegas(const WallLog& h) {
    OmegaSpectrum out{h.gamma(), {}};
    if (h.is_zero()) return out;
    const SeriesContext& ctx = *h.context();
    std::map<WallLog::Key, QLaurent> resid = h.terms();
    while (!resid.empty()) {
        auto it = resid.begin();
        auto [m, deg] = it->first;
        QLaurent r = it->second;
        resid.erase(it);
        if (m <= 0) throw std::invalid_argument("extract_omegas: nonpositive multiple");
        auto p = divide_exact(r, q_number(m));
        if (!p) throw std::domain_error("extract_omegas: P(" + std::to_string(m) + "γ) is not a Laurent polynomial");
        if (p->is_zero()) continue;
        out.poincare.emplace(WallLog::Key{m, deg}, *p);
        for (int j = 2;; ++j) {
            auto dj = scaled(deg, j);
            if (!dj || !ctx.admits(*dj)) break;
            QLaurent contrib = q_number_at(m, j) * shifted_substitution(*p, j) * Rat(j % 2 ? 1 : -1, j);
            auto [slot, inserted] = resid.try_emplace(WallLog::Key{j * m, *dj}, QLaurent());
            slot->second -= contrib;
            if (slot->second.is_zero()) resid.erase(slot);
        }
    }
    return out;
}

OmegaSpectrum spectrum_of(const WallOperator& op) {
    OmegaSpectrum s{op.gamma, {}};
    for (const auto& e : op.spectrum) {
        auto& p = s.poincare[{e.k, e.sigma}];
        p += QLaurent::monomial(e.n, e.omega);
    }
    for (auto it = s.poincare.begin(); it != s.poincare.end();)
        it = it->second.is_zero() ? s.poincare.erase(it) : std::next(it);
    return s;
}

}  // namespace tvx
