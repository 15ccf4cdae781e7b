/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/invariants.hpp"

#include <functional>
#include <numeric>

namespace tvx {

int partition_size(const OrderedPartition& p) { return std::accumulate(p.begin(), p.end(), 0); }

long aut_order(const WeightList& w) {
    std::map<int, int> mult;
    for (int x : w) ++mult[x];
    long r = 1;
    for (const auto& [x, m] : mult)
        for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

long compatible_set_partitions(const OrderedPartition& p, const WeightList& w) {
    std::vector<int> left(p.begin(), p.end());
    long count = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == w.size()) {
            for (int x : left)
                if (x != 0) return;
            ++count;
            return;
        }
        for (auto& slot : left)
            if (slot >= w[idx]) {
                slot -= w[idx];
                rec(idx + 1);
                slot += w[idx];
            }
    };
    rec(0);
    return count;
}

QRational q_ramification(const OrderedPartition& p, const WeightList& w) {
    if (partition_size(p) != std::accumulate(w.begin(), w.end(), 0))
        throw std::invalid_argument("q_ramification: |P| != |w|");
    long count = compatible_set_partitions(p, w);
    if (count == 0) return QRational();
    Rat num(count);
    QLaurent den(1);
    for (int x : w) {
        num /= (x % 2 == 1 ? x : -x);
        den *= q_number(x);
    }
    return QRational(QLaurent(num), den);
}

Rat classical_ramification(const OrderedPartition& p, const WeightList& w) {
    if (partition_size(p) != std::accumulate(w.begin(), w.end(), 0))
        throw std::invalid_argument("classical_ramification: |P| != |w|");
    Rat r(compatible_set_partitions(p, w));
    for (int x : w) r /= Rat((x % 2 == 1 ? 1 : -1) * x * x);
    return r;
}

std::vector<OrderedPartition> ordered_partitions(int n, int length, bool allow_zero) {
    std::vector<OrderedPartition> out;
    OrderedPartition cur;
    int lo = allow_zero ? 0 : 1;
    std::function<void(int, int)> rec = [&](int left, int slots) {
        if (slots == 0) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int x = lo; x <= left - lo * (slots - 1); ++x) {
            cur.push_back(x);
            rec(left - x, slots - 1);
            cur.pop_back();
        }
    };
    if (length > 0) rec(n, length);
    return out;
}

const QLaurent& TropicalCountCache::refined(const WeightVector& w) {
    auto it = cache_.find(w.w);
    if (it != cache_.end()) return it->second;
    // each weight vector gets its own stream so results do not depend on
    // the order of queries
    std::uint64_t s = seed_;
    for (const auto& list : w.w) {
        s = s * 1000003u + 7;
        for (int x : list) s = s * 31u + static_cast<std::uint64_t>(x);
    }
    QLaurent value = refined_tropical_count({1, 0}, {0, 1}, w, s, configs_);
    return cache_.emplace(w.w, std::move(value)).first->second;
}

QRational refined_gw(const OrderedPartition& p1, const OrderedPartition& p2, TropicalCountCache& counts) {
    QRational total;
    for (const auto& w1 : weight_lists(partition_size(p1))) {
        QRational r1 = q_ramification(p1, w1);
        if (r1.is_zero()) continue;
        for (const auto& w2 : weight_lists(partition_size(p2))) {
            QRational r2 = q_ramification(p2, w2);
            if (r2.is_zero()) continue;
            QRational term = r1;
            term *= r2;
            term *= QRational(Rat(1, aut_order(w1) * aut_order(w2)));
            term *= QRational(counts.refined(WeightVector{{w1, w2}}));
            total += term;
        }
    }
    return total;
}

Rat classical_gw(const OrderedPartition& p1, const OrderedPartition& p2, TropicalCountCache& counts) {
    Rat total = 0;
    for (const auto& w1 : weight_lists(partition_size(p1))) {
        Rat r1 = classical_ramification(p1, w1);
        if (r1 == 0) continue;
        for (const auto& w2 : weight_lists(partition_size(p2))) {
            Rat r2 = classical_ramification(p2, w2);
            if (r2 == 0) continue;
            total += r1 * r2 / Rat(aut_order(w1) * aut_order(w2)) *
                     eval_at_one(counts.refined(WeightVector{{w1, w2}}));
        }
    }
    return total;
}

Rat gps_classical_coeff(LatticeVec ab, int k, int l1, int l2, TropicalCountCache& counts) {
    if (ab.a <= 0 || ab.b <= 0 || !ab.is_primitive() || k < 1)
        throw std::invalid_argument("gps_classical_coeff: (a,b) primitive with a, b >= 1");
    Rat total = 0;
    for (const auto& pa : ordered_partitions(k * ab.a, l1, true))
        for (const auto& pb : ordered_partitions(k * ab.b, l2, true)) total += classical_gw(pa, pb, counts);
    return total * k;
}

Rat classical_commutator_coeff(LatticeVec ab, int k, int l1, int l2) {
    auto ctx = SeriesContext::make({"t"}, {(ab.a + ab.b) * k});
    ClassicalDiagram lines{ctx, {classical_line(ctx, {1, 0}, 0, l1), classical_line(ctx, {0, 1}, 0, l2)}};
    ClassicalDiagram sat = classical_saturate(lines);
    for (const auto& w : sat.walls)
        if (!w.line && w.gamma == ab) return w.log_f.coefficient(ctx->central({(ab.a + ab.b) * k}), ab * k);
    return 0;
}

CentralDiagram multiparameter_lines(int l1, int l2, int order) {
    std::vector<std::string> names;
    for (int i = 1; i <= l1; ++i) names.push_back("s" + std::to_string(i));
    for (int j = 1; j <= l2; ++j) names.push_back("t" + std::to_string(j));
    auto ctx = SeriesContext::make(names, std::vector<int>(names.size(), order));
    CentralDiagram d{ctx, {}};
    for (int i = 0; i < l1; ++i) d.walls.push_back(standard_line(ctx, {1, 0}, i, 1));
    for (int j = 0; j < l2; ++j) d.walls.push_back(standard_line(ctx, {0, 1}, l1 + j, 1));
    return d;
}

CentralDiagram power_lines(int l1, int l2, int order) {
    auto ctx = SeriesContext::make({"t"}, {order});
    return {ctx, {standard_line(ctx, {1, 0}, 0, l1), standard_line(ctx, {0, 1}, 0, l2)}};
}

CentralDiagram specialize_multiparameter(const CentralDiagram& d, ContextPtr target) {
    if (target->central_count() != 1 || target->nilpotent_count() != 0)
        throw std::invalid_argument("specialize_multiparameter: target must have one central variable");
    std::map<std::pair<bool, LatticeVec>, WallLog> merged;
    for (const auto& w : d.walls) {
        auto [it, inserted] = merged.try_emplace({w.line, w.gamma()}, target, w.gamma());
        for (const auto& [key, L] : w.log.terms()) {
            const auto& [m, deg] = key;
            if (deg.nil != 0) throw std::invalid_argument("specialize_multiparameter: nilpotent terms");
            Multidegree t = target->central({deg.central_total()});
            if (target->admits(t)) it->second.add(m, t, L);
        }
    }
    CentralDiagram out{target, {}};
    for (auto& [key, log] : merged)
        if (!log.is_zero()) out.walls.push_back({std::move(log), key.first});
    return out;
}

QLaurent c_hat_term(const QLaurent& poincare, int j) {
    QLaurent sub;
    for (const auto& [n, c] : poincare.terms()) {
        bool flip = (static_cast<long>(n) * (j + 1)) % 2 != 0;
        sub += QLaurent::monomial(j * n, flip ? Rat(-c) : c);
    }
    // -(-v)^j / j
    return sub.shifted(j) * Rat(j % 2 == 0 ? -1 : 1, j);
}

bool fg_series_check(const OmegaSpectrum& spectrum, ContextPtr ctx) {
    const LatticeVec g = spectrum.gamma;
    const LatticeVec ex{1, 0}, ey{0, 1};
    WallOperator op = spectrum.to_operator();
    TorusElement via_action_x = apply_operator(op, generator(ctx, ex));
    TorusElement via_action_y = apply_operator(op, generator(ctx, ey));

    TorusElement log_f(ctx), log_g(ctx);
    for (const auto& [key, P] : spectrum.poincare) {
        const auto& [k, sigma] = key;
        std::optional<Multidegree> pow = sigma;
        for (int j = 1; pow; ++j) {
            QLaurent c = c_hat_term(P, j);
            QLaurent sx, sy;  // -Σ_{r=1}^{kγ²} q^{-jr} and Σ_{s=0}^{kγ¹-1} q^{js}
            for (int r = 1; r <= k * g.b; ++r) sx -= QLaurent::monomial(-2 * j * r, 1);
            for (int s = 0; s < k * g.a; ++s) sy += QLaurent::monomial(2 * j * s, 1);
            log_f.add_term(*pow, g * (j * k), sx * c);
            log_g.add_term(*pow, g * (j * k), sy * c);
            pow = ctx->multiply(*pow, sigma);
        }
    }
    TorusElement f = series_exp(log_f), gg = series_exp(log_g);
    return twisted_product(generator(ctx, ex), f) == via_action_x &&
           twisted_product(generator(ctx, ey), gg) == via_action_y;
}

}  // namespace tvx
