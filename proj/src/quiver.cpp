/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tvx {

namespace {

QLaurent q_power(long n) { return QLaurent::monomial(static_cast<int>(2 * n)); }

int total(const DimVector& d) { return std::accumulate(d.begin(), d.end(), 0); }

// Every e with 0 <= e <= d componentwise, in lexicographic order.
void for_each_sub(const DimVector& d, const std::function<void(const DimVector&)>& fn) {
    DimVector e(d.size(), 0);
    while (true) {
        fn(e);
        size_t i = 0;
        while (i < d.size() && e[i] == d[i]) e[i++] = 0;
        if (i == d.size()) return;
        ++e[i];
    }
}

DimVector minus(const DimVector& a, const DimVector& b) {
    DimVector r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// Partitions of n as multiplicity maps, largest parts first.
void partitions(int n, int max_part, std::map<int, int>& cur, std::vector<std::map<int, int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int w = std::min(n, max_part); w >= 1; --w) {
        ++cur[w];
        partitions(n - w, w, cur, out);
        if (--cur[w] == 0) cur.erase(w);
    }
}

}  // namespace

int QuiverSpec::arrow_count() const {
    int n = 0;
    for (const auto& row : arrows)
        for (int a : row) n += a;
    return n;
}

long QuiverSpec::euler(const DimVector& d, const DimVector& e) const {
    long r = 0;
    for (int v = 0; v < vertices(); ++v) r += static_cast<long>(d[static_cast<size_t>(v)]) * e[static_cast<size_t>(v)];
    for (int i = 0; i < sources; ++i)
        for (int j = 0; j < sinks; ++j)
            r -= static_cast<long>(arrows[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
                 d[static_cast<size_t>(i)] * e[static_cast<size_t>(sources + j)];
    return r;
}

Rat Stability::slope(const DimVector& d) const {
    Rat num = 0, den = 0;
    for (size_t v = 0; v < d.size(); ++v) {
        num += theta[v] * d[v];
        den += kappa[v] * d[v];
    }
    if (den == 0) throw std::invalid_argument("slope of the zero dimension vector");
    return num / den;
}

Stability Stability::level(const QuiverSpec& q) {
    Stability s;
    for (int v = 0; v < q.vertices(); ++v) {
        s.theta.emplace_back(v < q.sources ? 1 : 0);
        s.kappa.emplace_back(1);
    }
    return s;
}

Stability Stability::weighted(const QuiverSpec& q, const std::vector<int>& weights) {
    Stability s;
    for (int v = 0; v < q.vertices(); ++v) {
        int w = weights[static_cast<size_t>(v)];
        s.theta.emplace_back(v < q.sources ? w : 0);
        s.kappa.emplace_back(w);
    }
    return s;
}

QuiverSpec build_bipartite(int l1, int l2) {
    if (l1 < 1 || l2 < 1) throw std::invalid_argument("build_bipartite: need l1, l2 >= 1");
    QuiverSpec q;
    q.sources = l1;
    q.sinks = l2;
    q.arrows.assign(static_cast<size_t>(l1), std::vector<int>(static_cast<size_t>(l2), 1));
    return q;
}

WeightList Refinement::weights(int side) const {
    WeightList out;
    for (const auto& part : side == 0 ? sources : sinks)
        for (const auto& [w, k] : part) out.insert(out.end(), static_cast<size_t>(k), w);
    std::sort(out.begin(), out.end());
    return out;
}

QRational Refinement::coefficient() const {
    QRational c(1);
    for (const auto* side : {&sources, &sinks})
        for (const auto& part : *side)
            for (const auto& [w, k] : part) {
                Rat scalar = ((k * (w - 1)) % 2 == 0 ? Rat(1) : Rat(-1)) / factorial(k);
                QLaurent den(1);
                for (int i = 0; i < k; ++i) {
                    scalar /= w;
                    den *= q_number(w);
                }
                c *= QRational(QLaurent(scalar), den);
            }
    return c;
}

std::string Refinement::to_string() const {
    std::ostringstream os;
    auto side = [&](const std::vector<std::map<int, int>>& parts) {
        os << '(';
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ", ";
            os << '{';
            bool first = true;
            for (const auto& [w, k] : parts[i]) {
                os << (first ? "" : ",") << w << ':' << k;
                first = false;
            }
            os << '}';
        }
        os << ')';
    };
    side(sources);
    os << " | ";
    side(sinks);
    return os.str();
}

AbelianQuiver build_abelianized(const Refinement& r) {
    std::vector<int> src, snk;
    for (const auto& part : r.sources)
        for (const auto& [w, k] : part) src.insert(src.end(), static_cast<size_t>(k), w);
    for (const auto& part : r.sinks)
        for (const auto& [w, k] : part) snk.insert(snk.end(), static_cast<size_t>(k), w);
    if (src.empty() && snk.empty()) throw std::invalid_argument("build_abelianized: empty refinement");
    AbelianQuiver a;
    a.quiver.sources = static_cast<int>(src.size());
    a.quiver.sinks = static_cast<int>(snk.size());
    a.quiver.arrows.assign(src.size(), std::vector<int>(snk.size(), 0));
    for (size_t i = 0; i < src.size(); ++i)
        for (size_t j = 0; j < snk.size(); ++j) a.quiver.arrows[i][j] = src[i] * snk[j];
    a.dim.assign(src.size() + snk.size(), 1);
    a.weights = src;
    a.weights.insert(a.weights.end(), snk.begin(), snk.end());
    return a;
}

std::vector<Refinement> enumerate_refinements(const OrderedPartition& p1, const OrderedPartition& p2) {
    std::vector<std::vector<std::map<int, int>>> choices;
    for (const auto* p : {&p1, &p2})
        for (int part : *p) {
            if (part < 0) throw std::invalid_argument("enumerate_refinements: negative part");
            std::vector<std::map<int, int>> out;
            std::map<int, int> cur;
            partitions(part, part, cur, out);
            choices.push_back(std::move(out));
        }
    std::vector<Refinement> result;
    std::vector<size_t> idx(choices.size(), 0);
    while (true) {
        Refinement r;
        for (size_t c = 0; c < choices.size(); ++c)
            (c < p1.size() ? r.sources : r.sinks).push_back(choices[c][idx[c]]);
        result.push_back(std::move(r));
        size_t c = 0;
        while (c < choices.size() && ++idx[c] == choices[c].size()) idx[c++] = 0;
        if (c == choices.size()) break;
    }
    return result;
}

QRational HarderNarasimhan::all(const DimVector& d) const {
    QLaurent den(1);
    for (int n : d)
        for (int j = 1; j <= n; ++j) den *= QLaurent(1) - q_power(-j);
    return QRational(q_power(-q_.euler(d, d)), den);
}

const QRational& HarderNarasimhan::semistable(const DimVector& d) {
    auto it = sst_.find(d);
    if (it != sst_.end()) return it->second;
    if (total(d) == 0) throw std::invalid_argument("semistable: zero dimension vector");
    QRational r = all(d);
    for_each_sub(d, [&](const DimVector& d1) {
        if (total(d1) == 0 || d1 == d) return;
        DimVector rest = minus(d, d1);
        Rat mu = s_.slope(d1);
        // first HN piece d1, remaining pieces of strictly smaller slope
        r -= semistable(d1) * QRational(q_power(-q_.euler(rest, d1))) * tail(rest, mu, true);
    });
    return sst_.emplace(d, std::move(r)).first->second;
}

// Σ over sequences summing to e with strictly decreasing slopes, all below
// `bound` when bounded.
const QRational& HarderNarasimhan::tail(const DimVector& e, const Rat& bound, bool bounded) {
    auto key = std::make_tuple(e, bound, bounded);
    auto it = tail_.find(key);
    if (it != tail_.end()) return it->second;
    QRational r;
    if (total(e) == 0) {
        r = QRational(1);
    } else {
        for_each_sub(e, [&](const DimVector& d1) {
            if (total(d1) == 0) return;
            Rat mu = s_.slope(d1);
            if (bounded && !(mu < bound)) return;
            DimVector rest = minus(e, d1);
            r += semistable(d1) * QRational(q_power(-q_.euler(rest, d1))) * tail(rest, mu, true);
        });
    }
    return tail_.emplace(std::move(key), std::move(r)).first->second;
}

QRational HarderNarasimhan::type_factor(const std::vector<DimVector>& type) {
    long e = 0;
    for (size_t k = 0; k < type.size(); ++k)
        for (size_t l = k + 1; l < type.size(); ++l) e += q_.euler(type[l], type[k]);
    QRational r(q_power(-e));
    for (const auto& d : type) r *= semistable(d);
    return r;
}

std::map<std::vector<DimVector>, QRational> HarderNarasimhan::strata(const DimVector& d) {
    std::map<std::vector<DimVector>, QRational> out;
    std::vector<DimVector> cur;
    std::function<void(const DimVector&)> rec = [&](const DimVector& e) {
        if (total(e) == 0) {
            out.emplace(cur, type_factor(cur));
            return;
        }
        for_each_sub(e, [&](const DimVector& d1) {
            if (total(d1) == 0) return;
            if (!cur.empty() && !(s_.slope(d1) < s_.slope(cur.back()))) return;
            cur.push_back(d1);
            rec(minus(e, d1));
            cur.pop_back();
        });
    };
    rec(d);
    return out;
}

QRational hn_stack_series(const QuiverSpec& q, const DimVector& d, const Stability& s) {
    HarderNarasimhan hn(q, s);
    return hn.semistable(d);
}

bool generic_for(const DimVector& d, const Stability& s) {
    Rat mu = s.slope(d);
    bool ok = true;
    for_each_sub(d, [&](const DimVector& e) {
        if (total(e) == 0 || e == d) return;
        if (s.slope(e) == mu) ok = false;
    });
    return ok;
}

QLaurent stable_poincare(HarderNarasimhan& hn, const DimVector& d) {
    if (!generic_for(d, hn.stability()))
        throw std::domain_error("stable_poincare: dimension vector is not coprime for this stability");
    QRational count = hn.semistable(d) * QRational(q_power(1) - QLaurent(1));
    auto poly = count.to_laurent();
    if (!poly) throw std::domain_error("stable_poincare: point count is not a polynomial");
    long dim = 1 - hn.quiver().euler(d, d);
    QLaurent p = poly->shifted(static_cast<int>(-dim));
    if (!is_bar_symmetric(p)) throw std::domain_error("stable_poincare: result is not bar-symmetric");
    for (int e = p.is_zero() ? 1 : p.min_exponent(); !p.is_zero() && e <= p.max_exponent(); ++e) {
        Rat c = p.coefficient(e);
        if (c < 0 || c.get_den() != 1) throw std::domain_error("stable_poincare: coefficient " + c.get_str());
    }
    return p;
}

QLaurent stable_poincare(const QuiverSpec& q, const DimVector& d, const Stability& s) {
    HarderNarasimhan hn(q, s);
    return stable_poincare(hn, d);
}

DimVector induced_dimension(const OrderedPartition& p1, const OrderedPartition& p2) {
    DimVector d(p1);
    d.insert(d.end(), p2.begin(), p2.end());
    return d;
}

bool coprime(const OrderedPartition& p1, const OrderedPartition& p2) {
    return std::gcd(partition_size(p1), partition_size(p2)) == 1;
}

MpsReport mps_report(const OrderedPartition& p1, const OrderedPartition& p2) {
    QuiverSpec k = build_bipartite(static_cast<int>(p1.size()), static_cast<int>(p2.size()));
    MpsReport rep;
    rep.lhs = stable_poincare(k, induced_dimension(p1, p2), Stability::level(k));
    for (auto& r : enumerate_refinements(p1, p2)) {
        AbelianQuiver a = build_abelianized(r);
        MpsTerm t{r, r.coefficient(), stable_poincare(a.quiver, a.dim, Stability::weighted(a.quiver, a.weights))};
        rep.rhs += t.coefficient * QRational(t.abelian);
        rep.terms.push_back(std::move(t));
    }
    rep.ok = rep.rhs == QRational(rep.lhs);
    return rep;
}

bool mps_check(const OrderedPartition& p1, const OrderedPartition& p2) { return mps_report(p1, p2).ok; }

ComparisonReport comparison_report(const OrderedPartition& p1, const OrderedPartition& p2,
                                   TropicalCountCache& counts) {
    ComparisonReport rep;
    rep.tropical = refined_gw(p1, p2, counts);
    QuiverSpec k = build_bipartite(static_cast<int>(p1.size()), static_cast<int>(p2.size()));
    rep.quiver = stable_poincare(k, induced_dimension(p1, p2), Stability::level(k));
    rep.refinements_ok = true;
    for (const auto& r : enumerate_refinements(p1, p2)) {
        AbelianQuiver a = build_abelianized(r);
        QLaurent ab = stable_poincare(a.quiver, a.dim, Stability::weighted(a.quiver, a.weights));
        if (ab != counts.refined(WeightVector{{r.weights(0), r.weights(1)}})) rep.refinements_ok = false;
    }
    rep.ok = rep.refinements_ok && rep.tropical == QRational(rep.quiver);
    return rep;
}

bool comparison_check(const OrderedPartition& p1, const OrderedPartition& p2, TropicalCountCache& counts) {
    return comparison_report(p1, p2, counts).ok;
}

}  // namespace tvx
