/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/classical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tvx/central.hpp"

namespace tvx {

ClassicalWall classical_line(ContextPtr ctx, LatticeVec alpha, int var, const Rat& ell) {
    if (!alpha.is_primitive()) throw std::invalid_argument("classical_line: direction must be primitive");
    ClassicalWall w{alpha, ClassicalElement(ctx), true};
    std::vector<int> e(static_cast<size_t>(ctx->central_count()), 0);
    for (int k = 1; k <= ctx->order(var); ++k) {
        e.at(static_cast<size_t>(var)) = k;
        w.log_f.add_term(ctx->central(e), alpha * k, ell * Rat(k % 2 ? 1 : -1, k));
    }
    return w;
}

ClassicalElement classical_apply(const ClassicalWall& w, const ClassicalElement& z, int sign) {
    std::map<int, ClassicalElement> cache;
    ClassicalElement r(z.context());
    for (const auto& [k, c] : z.terms()) {
        int kappa = pairing(w.gamma, k.lat) * sign;
        if (kappa == 0) {
            r.add_term(k.deg, k.lat, c);
            continue;
        }
        auto it = cache.find(kappa);
        if (it == cache.end()) {
            ClassicalElement g(z.context());
            for (const auto& [kf, cf] : w.log_f.terms()) g.add_term(kf.deg, kf.lat, cf * kappa);
            it = cache.emplace(kappa, series_exp(g)).first;
        }
        for (const auto& [kf, cf] : it->second.terms()) {
            auto d = z.ctx().multiply(k.deg, kf.deg);
            if (d) r.add_term(*d, k.lat + kf.lat, c * cf);
        }
    }
    return r;
}

ClassicalElement classical_loop_apply(const ClassicalDiagram& d, const ClassicalElement& z) {
    struct Crossing {
        int wall;
        int sign;
        LatticeVec half;
    };
    std::vector<Crossing> cs;
    std::vector<LatticeVec> dirs;
    for (size_t i = 0; i < d.walls.size(); ++i) {
        dirs.push_back(d.walls[i].gamma);
        cs.push_back({static_cast<int>(i), 1, d.walls[i].gamma});
        if (d.walls[i].line) cs.push_back({static_cast<int>(i), -1, -d.walls[i].gamma});
    }
    LatticeVec start = generic_start(dirs);
    std::stable_sort(cs.begin(), cs.end(),
                     [&](const Crossing& a, const Crossing& b) { return clockwise_before(start, a.half, b.half); });
    ClassicalElement r = z;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        r = classical_apply(d.walls[static_cast<size_t>(it->wall)], r, it->sign);
    return r;
}

ClassicalDiagram classical_saturate(const ClassicalDiagram& lines) {
    const ContextPtr& ctx = lines.ctx;
    int dmax = ctx->nilpotent_count();
    for (int i = 0; i < ctx->central_count(); ++i) dmax += ctx->order(i);
    std::map<LatticeVec, ClassicalWall> rays;
    auto current = [&]() {
        ClassicalDiagram d = lines;
        for (const auto& [g, w] : rays) d.walls.push_back(w);
        return d;
    };
    const LatticeVec ex{1, 0}, ey{0, 1};
    for (int D = 1; D <= dmax; ++D) {
        ContextPtr cd = ctx->with_total_order(D);
        ClassicalDiagram d = current();
        ClassicalElement gx = ClassicalElement::monomial(cd, {}, ex, 1);
        ClassicalElement gy = ClassicalElement::monomial(cd, {}, ey, 1);
        ClassicalElement dx = classical_loop_apply(d, gx) - gx;
        ClassicalElement dy = classical_loop_apply(d, gy) - gy;
        std::vector<std::tuple<LatticeVec, Multidegree, LatticeVec, Rat>> add;
        for (const auto& [k, delta] : dy.terms()) {
            if (k.deg.total() != D) throw std::logic_error("classical_saturate: defect below current degree");
            LatticeVec gamma = k.lat - ey;
            if (!gamma.is_positive()) throw std::logic_error("classical_saturate: defect outside positive quadrant");
            LatticeVec g0 = gamma.primitive();
            if (g0.a != 0) add.emplace_back(g0, k.deg, gamma, -delta / g0.a);
        }
        for (const auto& [k, delta] : dx.terms()) {
            LatticeVec gamma = k.lat - ex;
            if (!gamma.is_positive()) throw std::logic_error("classical_saturate: defect outside positive quadrant");
            LatticeVec g0 = gamma.primitive();
            if (g0.a == 0) add.emplace_back(g0, k.deg, gamma, Rat(delta / g0.b));
        }
        for (const auto& [g0, deg, gamma, c] : add) {
            auto it = rays.find(g0);
            if (it == rays.end()) it = rays.emplace(g0, ClassicalWall{g0, ClassicalElement(ctx), false}).first;
            it->second.log_f.add_term(deg, gamma, c);
        }
    }
    return current();
}

ClassicalElement wall_function(const ClassicalWall& w) { return series_exp(w.log_f); }

std::string format_classical(const ClassicalElement& f) {
    // Order: by total central degree, then lattice.
    std::vector<std::pair<const ClassicalElement::Key*, const Rat*>> terms;
    for (const auto& [k, c] : f.terms()) terms.emplace_back(&k, &c);
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return a.first->deg.total() < b.first->deg.total();
    });
    std::string out;
    for (const auto& [k, c] : terms) {
        std::string mono = k->deg.is_zero() ? "" : f.ctx().format(k->deg);
        auto append = [&](const char* var, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += var;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        append("x", k->lat.a);
        append("y", k->lat.b);
        if (mono.empty()) mono = "1";
        Rat mag = abs(*c);
        bool neg = sgn(*c) < 0;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mono == "1")
            out += to_string(mag);
        else
            out += (mag == 1 ? "" : to_string(mag) + "*") + mono;
    }
    return out.empty() ? "0" : out;
}

}  // namespace tvx
