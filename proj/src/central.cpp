/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/central.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tvx {

namespace {
long long cross(LatticeVec s, LatticeVec u) {
    return static_cast<long long>(s.a) * u.b - static_cast<long long>(s.b) * u.a;
}
long long dot(LatticeVec s, LatticeVec u) {
    return static_cast<long long>(s.a) * u.a + static_cast<long long>(s.b) * u.b;
}
// 0: clockwise within (0, pi) of s, 1: exactly opposite, 2: (pi, 2pi), -1: along s
int half_of(LatticeVec s, LatticeVec u) {
    long long c = cross(s, u);
    if (c < 0) return 0;
    if (c > 0) return 2;
    return dot(s, u) > 0 ? -1 : 1;
}
}  // namespace

bool clockwise_before(LatticeVec start, LatticeVec u, LatticeVec w) {
    int hu = half_of(start, u), hw = half_of(start, w);
    if (hu != hw) return hu < hw;
    return cross(u, w) < 0;
}

LatticeVec generic_start(const std::vector<LatticeVec>& dirs) {
    for (int p = 1;; ++p) {
        LatticeVec s{-(2 * p + 1), -(2 * p + 3)};
        bool ok = std::none_of(dirs.begin(), dirs.end(), [&](LatticeVec d) { return cross(s, d) == 0; });
        if (ok) return s;
    }
}

std::vector<const CentralWall*> CentralDiagram::rays() const {
    std::vector<const CentralWall*> out;
    for (const auto& w : walls)
        if (!w.line) out.push_back(&w);
    return out;
}

std::vector<CentralCrossing> loop_crossings(const CentralDiagram& d) {
    std::vector<CentralCrossing> cs;
    std::vector<LatticeVec> dirs;
    for (size_t i = 0; i < d.walls.size(); ++i) {
        LatticeVec g = d.walls[i].gamma();
        dirs.push_back(g);
        // Crossing R_{>=0} g clockwise: {π', g} is a positive basis.
        cs.push_back({static_cast<int>(i), +1, g});
        if (d.walls[i].line) cs.push_back({static_cast<int>(i), -1, -g});
    }
    LatticeVec start = generic_start(dirs);
    std::stable_sort(cs.begin(), cs.end(), [&](const CentralCrossing& a, const CentralCrossing& b) {
        return clockwise_before(start, a.half, b.half);
    });
    return cs;
}

template <class C>
Series<C> loop_apply(const CentralDiagram& d, const Series<C>& z) {
    auto cs = loop_crossings(d);
    Series<C> r = z;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = apply_log(d.walls[static_cast<size_t>(it->wall)].log, r, it->sign);
    return r;
}

template Series<QLaurent> loop_apply(const CentralDiagram&, const Series<QLaurent>&);
template Series<QRational> loop_apply(const CentralDiagram&, const Series<QRational>&);

GeneratorImages loop_product(const CentralDiagram& d) {
    auto id = identity_images<QLaurent>(d.ctx);
    return {loop_apply(d, id.x), loop_apply(d, id.y)};
}

GeneratorImages loop_product(ContextPtr ctx, const std::vector<std::pair<WallOperator, bool>>& walls) {
    CentralDiagram shape{ctx, {}};
    for (const auto& [op, line] : walls) shape.walls.push_back({WallLog(ctx, op.gamma), line});
    // θ_1 ∘ ... ∘ θ_s applied to each generator: θ_s acts first.
    GeneratorImages acc = identity_images<QLaurent>(ctx);
    auto crossings = loop_crossings(shape);
    for (auto it = crossings.rbegin(); it != crossings.rend(); ++it) {
        const WallOperator& op = walls[static_cast<size_t>(it->wall)].first;
        WallOperator applied = it->sign > 0 ? op : op.inverse();
        acc.x = apply_operator(applied, acc.x);
        acc.y = apply_operator(applied, acc.y);
    }
    return acc;
}

CentralWall standard_line(ContextPtr ctx, LatticeVec alpha, int var, const Rat& ell) {
    std::vector<int> e(static_cast<size_t>(ctx->central_count()), 0);
    e.at(static_cast<size_t>(var)) = 1;
    return {qdilog_log(ctx, ctx->central(e), alpha, 0, ell), true};
}

CentralDiagram saturate_central(const CentralDiagram& lines) {
    const ContextPtr& ctx = lines.ctx;
    for (const auto& w : lines.walls)
        if (!w.gamma().is_positive()) throw std::invalid_argument("saturate_central: directions must be positive");
    int dmax = 0;
    for (int i = 0; i < ctx->central_count(); ++i) dmax += ctx->order(i);
    dmax += ctx->nilpotent_count();
    if (ctx->total_order() >= 0) dmax = std::min(dmax, ctx->total_order());

    std::map<LatticeVec, WallLog, std::less<>> rays;
    auto current = [&]() {
        CentralDiagram d = lines;
        for (const auto& [g, h] : rays) d.walls.push_back({h, false});
        return d;
    };
    const LatticeVec ex{1, 0}, ey{0, 1};
    for (int D = 1; D <= dmax; ++D) {
        ContextPtr cd = ctx->with_total_order(D);
        CentralDiagram d = current();
        TorusElement gx = generator(cd, ex), gy = generator(cd, ey);
        TorusElement dx = loop_apply(d, gx) - gx;
        TorusElement dy = loop_apply(d, gy) - gy;
        std::map<LatticeVec, WallLog, std::less<>> added;
        auto add = [&](LatticeVec gamma, const Multidegree& deg, const QLaurent& L) {
            LatticeVec g0 = gamma.primitive();
            auto it = added.find(g0);
            if (it == added.end()) it = added.emplace(g0, WallLog(ctx, g0)).first;
            it->second.add(gamma.gcd(), deg, L);
        };
        for (const auto* defect : {&dy, &dx})
            for (const auto& [k, delta] : defect->terms())
                if (k.deg.total() != D) throw std::logic_error("saturate_central: defect below current degree");
        for (const auto& [k, delta] : dy.terms()) {
            LatticeVec gamma = k.lat - ey;
            if (!gamma.is_positive()) throw std::logic_error("saturate_central: defect outside the positive quadrant");
            LatticeVec g0 = gamma.primitive();
            if (g0.a == 0) continue;
            auto L = divide_exact(-delta, q_number_at(g0.a, gamma.gcd()));
            if (!L) throw std::logic_error("saturate_central: defect not divisible by [a]_{v^m}");
            add(gamma, k.deg, *L);
        }
        for (const auto& [k, delta] : dx.terms()) {
            LatticeVec gamma = k.lat - ex;
            if (!gamma.is_positive()) throw std::logic_error("saturate_central: defect outside the positive quadrant");
            if (gamma.primitive().a == 0) add(gamma, k.deg, delta);
        }
        for (auto& [g, h] : added) {
            auto it = rays.find(g);
            if (it == rays.end())
                rays.emplace(g, h);
            else
                it->second += h;
        }
    }
    return current();
}

}  // namespace tvx
