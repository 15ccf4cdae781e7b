/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/scattering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "tvx/omega.hpp"

namespace tvx {

namespace {

constexpr long kOffsetRange = 1000000;
constexpr long kOffsetDen = 10007;

long long det(LatticeVec x, LatticeVec y) {
    return static_cast<long long>(x.a) * y.b - static_cast<long long>(x.b) * y.a;
}

void set_base(ElementaryWall& w, Point p) {
    w.bx = p.x.get_d();
    w.by = p.y.get_d();
    w.base = std::move(p);
}

/// Central exponent vector of a nilpotent mask.
std::vector<int> degree_of_mask(const SeriesContext& ctx, std::uint64_t mask) {
    std::vector<int> e(static_cast<size_t>(ctx.central_count()), 0);
    for (int b = 0; b < ctx.nilpotent_count(); ++b)
        if (mask >> b & 1) ++e[static_cast<size_t>(ctx.nilpotent(b).line)];
    return e;
}

struct Event {
    int a, b;
    Point p;
};

/// Cheap rejection of pairs whose supports clearly miss each other.
bool may_meet(const ElementaryWall& wa, const ElementaryWall& wb, long long dt) {
    double dx = wb.bx - wa.bx, dy = wb.by - wa.by;
    double inv = 1.0 / static_cast<double>(dt);
    double tol = 1e-7;
    if (!wa.line) {
        double s = (dx * wb.dir.b - dy * wb.dir.a) * inv;
        if (s < -tol * (1 + std::fabs(s))) return false;
    }
    if (!wb.line) {
        double t = (dx * wa.dir.b - dy * wa.dir.a) * inv;
        if (t < -tol * (1 + std::fabs(t))) return false;
    }
    return true;
}

}  // namespace

ContextPtr nilpotent_refinement(const ContextPtr& central) {
    if (central->nilpotent_count() != 0) throw std::invalid_argument("nilpotent_refinement: context already refined");
    std::vector<NilpotentLabel> nil;
    std::vector<std::string> names;
    for (int i = 0; i < central->central_count(); ++i) {
        names.push_back(central->name(i));
        for (int j = 1; j <= central->order(i); ++j) nil.push_back({i, j});
    }
    if (nil.size() > static_cast<size_t>(kMaxNilpotent))
        throw std::invalid_argument("nilpotent_refinement: more than 64 nilpotent variables");
    return SeriesContext::make(names, central->orders(), nil, central->total_order());
}

QRational PerturbedDiagram::coefficient(int i) const {
    const ElementaryWall& w = walls.at(static_cast<size_t>(i));
    QRational c(w.mu);
    for (int leaf : leaves(i)) c *= walls[static_cast<size_t>(leaf)].line_coeff;
    return c;
}

std::vector<int> PerturbedDiagram::leaves(int i) const {
    const ElementaryWall& w = walls.at(static_cast<size_t>(i));
    if (w.line) return {i};
    std::vector<int> out = leaves(w.parent1);
    std::vector<int> r = leaves(w.parent2);
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

size_t PerturbedDiagram::ray_count() const {
    return static_cast<size_t>(std::count_if(walls.begin(), walls.end(), [](const auto& w) { return !w.line; }));
}

PerturbedDiagram perturb_standard(const CentralDiagram& lines, std::mt19937_64& rng) {
    PerturbedDiagram d;
    d.input = lines;
    d.ctx = nilpotent_refinement(lines.ctx);
    const SeriesContext& u = *d.ctx;
    std::uniform_int_distribution<long> offset(-kOffsetRange, kOffsetRange);
    for (size_t li = 0; li < lines.walls.size(); ++li) {
        const CentralWall& cw = lines.walls[li];
        if (!cw.line) throw std::invalid_argument("perturb_standard: input walls must be lines");
        if (!cw.log.context()->same_variables(*lines.ctx))
            throw std::invalid_argument("perturb_standard: context mismatch");
        for (const auto& [key, L] : cw.log.terms()) {
            const auto& [m, deg] = key;
            if (deg.nil != 0) throw std::invalid_argument("perturb_standard: line log has nilpotent terms");
            QRational a(L, q_number(m));
            Rat factor = 1;
            for (int i = 0; i < u.central_count(); ++i) factor *= factorial(deg.exps[static_cast<size_t>(i)]);
            QRational c = a;
            c *= QRational(factor);
            // Every choice of |J_i| = d_i levels for each variable.
            std::function<void(int, std::uint64_t)> rec = [&](int var, std::uint64_t mask) {
                if (var == u.central_count()) {
                    ElementaryWall w;
                    set_base(w, Point{Rat(offset(rng), kOffsetDen), Rat(offset(rng), kOffsetDen)});
                    w.dir = cw.gamma() * m;
                    w.line = true;
                    w.mask = mask;
                    w.mu = QLaurent(1);
                    w.source = static_cast<int>(li);
                    w.multiple = m;
                    w.line_coeff = c;
                    d.walls.push_back(std::move(w));
                    return;
                }
                int need = deg.exps[static_cast<size_t>(var)];
                int k = u.order(var);
                // subsets of {1..k} of size need, lexicographic
                std::function<void(int, int, std::uint64_t)> choose = [&](int from, int left, std::uint64_t acc) {
                    if (left == 0) {
                        rec(var + 1, acc);
                        return;
                    }
                    for (int j = from; j <= k - left + 1; ++j)
                        choose(j + 1, left - 1, acc | (std::uint64_t{1} << u.nilpotent_index(var, j)));
                };
                choose(1, need, mask);
            };
            rec(0, 0);
        }
    }
    return d;
}

void saturate(PerturbedDiagram& d, Exec exec) {
    auto& walls = d.walls;
    // Parallel lines must not share a support.
    for (size_t i = 0; i < walls.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            if (!walls[i].line || !walls[j].line || det(walls[i].dir, walls[j].dir) != 0) continue;
            if (sgn(cross(walls[i].base.x - walls[j].base.x, walls[i].base.y - walls[j].base.y, walls[i].dir)) == 0)
                throw DegenerateConfiguration("coincident parallel lines");
        }

    std::vector<std::uint64_t> bucket_mask;
    std::vector<std::vector<int>> bucket_items;
    std::unordered_map<std::uint64_t, size_t> bucket_index;
    auto file = [&](int idx) {
        std::uint64_t m = walls[static_cast<size_t>(idx)].mask;
        auto [it, inserted] = bucket_index.try_emplace(m, bucket_mask.size());
        if (inserted) {
            bucket_mask.push_back(m);
            bucket_items.emplace_back();
        }
        bucket_items[it->second].push_back(idx);
    };
    for (size_t i = 0; i < walls.size(); ++i) file(static_cast<int>(i));

    // Several scattering pairs may share a point. Pairwise scattering is
    // still exact there unless three of the walls meeting at the point have
    // pairwise disjoint masks (only then do triple products survive). This
    // happens without any tuning: rays of tropical curves with the same
    // leaves are collinear, since balancing fixes the line of the outgoing
    // end.
    std::map<Point, std::vector<std::uint64_t>> seen;
    auto record = [&](const Point& p, std::uint64_t ma, std::uint64_t mb) {
        auto [it, fresh] = seen.try_emplace(p);
        auto& masks = it->second;
        for (std::uint64_t m : {ma, mb}) {
            if (std::find(masks.begin(), masks.end(), m) != masks.end()) continue;
            for (size_t i = 0; i < masks.size(); ++i)
                for (size_t j = 0; j < i; ++j)
                    if (!(masks[i] & masks[j]) && !(masks[i] & m) && !(masks[j] & m))
                        throw DegenerateConfiguration("three independent walls meet at " + p.to_string());
            masks.push_back(m);
        }
        return fresh;
    };
    for (size_t i = 0; i < walls.size(); ++i)
        if (!walls[i].line)
            record(walls[i].base, walls[static_cast<size_t>(walls[i].parent1)].mask,
                   walls[static_cast<size_t>(walls[i].parent2)].mask);
    size_t lo = 0;
    int max_rounds = d.ctx->nilpotent_count();
    for (int round = 1;; ++round) {
        size_t hi = walls.size();
        if (lo == hi) break;
        if (round > max_rounds + 1) throw std::logic_error("saturate: did not stabilize");
        std::vector<std::vector<Event>> events(hi - lo);
        for_each_index(hi - lo, exec, [&](size_t i) {
            int a = static_cast<int>(lo + i);
            const ElementaryWall& wa = walls[static_cast<size_t>(a)];
            Support sa = wa.support();
            for (size_t bk = 0; bk < bucket_mask.size(); ++bk) {
                if (bucket_mask[bk] & wa.mask) continue;
                for (int b : bucket_items[bk]) {
                    if (b >= a) break;
                    const ElementaryWall& wb = walls[static_cast<size_t>(b)];
                    long long dt = det(wa.dir, wb.dir);
                    if (dt == 0 || !may_meet(wa, wb, dt)) continue;
                    auto p = intersect(sa, wb.support());
                    if (p) events[i].push_back({a, b, std::move(*p)});
                }
            }
            std::sort(events[i].begin(), events[i].end(), [](const Event& x, const Event& y) { return x.b < y.b; });
        });
        for (auto& list : events)
            for (auto& e : list) {
                if (record(e.p, walls[static_cast<size_t>(e.a)].mask, walls[static_cast<size_t>(e.b)].mask))
                    d.vertices.push_back(e.p);
                const ElementaryWall& wa = walls[static_cast<size_t>(e.a)];
                const ElementaryWall& wb = walls[static_cast<size_t>(e.b)];
                ElementaryWall r;
                r.dir = wa.dir + wb.dir;
                r.line = false;
                r.mask = wa.mask | wb.mask;
                long long mult = det(wa.dir, wb.dir);
                r.mu = q_number(static_cast<int>(mult < 0 ? -mult : mult)) * wa.mu * wb.mu;
                r.parent1 = e.b;
                r.parent2 = e.a;
                r.round = round;
                set_base(r, std::move(e.p));
                walls.push_back(std::move(r));
                file(static_cast<int>(walls.size() - 1));
            }
        lo = hi;
        d.rounds = round;
    }
}

PerturbedDiagram perturb_and_saturate(const CentralDiagram& lines, std::uint64_t seed, Exec exec, int max_attempts) {
    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        PerturbedDiagram d = perturb_standard(lines, rng);
        d.seed = seed;
        d.attempts = attempt;
        try {
            saturate(d, exec);
            return d;
        } catch (const DegenerateConfiguration&) {
        }
    }
    throw DegenerateConfiguration("no generic perturbation after " + std::to_string(max_attempts) + " attempts");
}

namespace {

/// Log in central variables of the walls `members` (all with the given
/// primitive direction).
WallLog collapse_group(const PerturbedDiagram& d, const std::vector<QRational>& coeff, LatticeVec gamma,
                       const std::vector<int>& members) {
    const SeriesContext& u = *d.ctx;
    std::map<std::pair<int, std::uint64_t>, QRational> acc;
    for (int idx : members) {
        const ElementaryWall& w = d.walls[static_cast<size_t>(idx)];
        int m = w.dir.gcd();
        QRational c = coeff[static_cast<size_t>(idx)];
        c *= QRational(q_number(m));
        acc[{m, w.mask}] += c;
    }
    // (m, degree) -> (value, number of masks carrying it)
    std::map<std::pair<int, std::vector<int>>, std::pair<QRational, long>> classes;
    for (const auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        auto deg = degree_of_mask(u, key.second);
        auto [it, inserted] = classes.try_emplace({key.first, deg}, c, 0);
        if (!inserted && it->second.first != c)
            throw std::domain_error("asymptotic_collapse: coefficients not symmetric in direction " + gamma.to_string());
        ++it->second.second;
    }
    WallLog log(d.input.ctx, gamma);
    for (const auto& [key, val] : classes) {
        const auto& [m, deg] = key;
        Rat expected = 1, factor = 1;
        for (size_t i = 0; i < deg.size(); ++i) {
            expected *= binomial(Rat(u.order(static_cast<int>(i))), deg[i]);
            factor *= factorial(deg[i]);
        }
        if (Rat(val.second) != expected)
            throw std::domain_error("asymptotic_collapse: missing u-monomials in direction " + gamma.to_string());
        QRational t = val.first;
        t /= QRational(factor);
        log.add(m, d.input.ctx->central(deg), t.laurent_or_throw("asymptotic_collapse"));
    }
    return log;
}

}  // namespace

CentralDiagram asymptotic_collapse(const PerturbedDiagram& d) {
    std::vector<QRational> leaf_product(d.walls.size()), coeff(d.walls.size());
    for (size_t i = 0; i < d.walls.size(); ++i) {
        const ElementaryWall& w = d.walls[i];
        if (w.line) {
            leaf_product[i] = w.line_coeff;
        } else {
            leaf_product[i] = leaf_product[static_cast<size_t>(w.parent1)];
            leaf_product[i] *= leaf_product[static_cast<size_t>(w.parent2)];
        }
        coeff[i] = QRational(w.mu);
        coeff[i] *= leaf_product[i];
    }
    std::map<std::pair<bool, LatticeVec>, std::vector<int>> groups;  // (ray?, direction)
    for (size_t i = 0; i < d.walls.size(); ++i)
        groups[{!d.walls[i].line, d.walls[i].dir.primitive()}].push_back(static_cast<int>(i));
    CentralDiagram out{d.input.ctx, {}};
    for (const auto& [key, members] : groups) {
        WallLog log = collapse_group(d, coeff, key.second, members);
        if (!log.is_zero()) out.walls.push_back({std::move(log), !key.first});
    }
    return out;
}

std::vector<std::pair<LatticeVec, WallOperator>> merge_by_direction(const PerturbedDiagram& d) {
    std::vector<std::pair<LatticeVec, WallOperator>> out;
    for (const auto& w : asymptotic_collapse(d).walls)
        if (!w.line) out.emplace_back(w.gamma(), extract_omegas(w.log).to_operator());
    return out;
}

TorusElementR elementary_apply(const QRational& c, std::uint64_t mask, LatticeVec alpha, const TorusElementR& z,
                               int sign) {
    TorusElementR r = z;
    const SeriesContext& ctx = z.ctx();
    Multidegree um = ctx.nilpotent_monomial(mask);
    for (const auto& [k, coeff] : z.terms()) {
        int kappa = pairing(alpha, k.lat);
        if (kappa == 0 || (k.deg.nil & mask)) continue;
        auto deg = ctx.multiply(k.deg, um);
        if (!deg) continue;
        QRational t = c;
        t *= QRational(q_number(kappa));
        t *= coeff;
        r.add_term(*deg, k.lat + alpha, sign > 0 ? t : -t);
    }
    return r;
}

namespace {

struct PathCrossing {
    size_t edge;
    Rat s;
    int wall;
    int sign;
};

std::vector<PathCrossing> path_crossings(const PerturbedDiagram& d, const Polygon& path) {
    std::vector<PathCrossing> out;
    const auto& vs = path.vertices;
    for (size_t e = 0; e < vs.size(); ++e) {
        const Point& p = vs[e];
        const Point& q = vs[(e + 1) % vs.size()];
        Rat ex = q.x - p.x, ey = q.y - p.y;
        std::vector<std::pair<Rat, int>> hits;
        for (size_t i = 0; i < d.walls.size(); ++i) {
            const ElementaryWall& w = d.walls[i];
            Support sp = w.support();
            if (collinear(p, q, sp)) {
                if (w.line) throw std::invalid_argument("path runs along a wall");
                Rat tp = (p.x - w.base.x) * w.dir.a + (p.y - w.base.y) * w.dir.b;
                Rat tq = (q.x - w.base.x) * w.dir.a + (q.y - w.base.y) * w.dir.b;
                if (sgn(tp) >= 0 || sgn(tq) >= 0) throw std::invalid_argument("path runs along a wall");
                continue;
            }
            auto hit = segment_hit(p, q, sp);
            if (!hit) continue;
            if (sgn(hit->s) == 0) throw std::invalid_argument("path vertex lies on a wall");
            if (!w.line && sgn(hit->t) == 0) throw std::invalid_argument("path meets a ray base");
            int sign = sgn(ex * w.dir.b - ey * w.dir.a) > 0 ? 1 : -1;
            out.push_back({e, hit->s, static_cast<int>(i), sign});
        }
    }
    std::sort(out.begin(), out.end(), [](const PathCrossing& x, const PathCrossing& y) {
        if (x.edge != y.edge) return x.edge < y.edge;
        if (x.s != y.s) return x.s < y.s;
        return x.wall < y.wall;
    });
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i].edge == out[i - 1].edge && out[i].s == out[i - 1].s &&
            det(d.walls[static_cast<size_t>(out[i].wall)].dir, d.walls[static_cast<size_t>(out[i - 1].wall)].dir) != 0)
            throw std::invalid_argument("path meets a singular point");
    return out;
}

}  // namespace

TorusElementR path_apply(const PerturbedDiagram& d, const Polygon& path, const TorusElementR& z) {
    auto crossings = path_crossings(d, path);
    std::map<int, QRational> coeff;
    TorusElementR r = z;
    for (auto it = crossings.rbegin(); it != crossings.rend(); ++it) {
        auto [c, inserted] = coeff.try_emplace(it->wall);
        if (inserted) c->second = d.coefficient(it->wall);
        const ElementaryWall& w = d.walls[static_cast<size_t>(it->wall)];
        r = elementary_apply(c->second, w.mask, w.dir, r, it->sign);
    }
    return r;
}

GeneratorImagesR path_ordered_product(const PerturbedDiagram& d, const Polygon& path) {
    return {path_apply(d, path, to_rational(generator(d.ctx, {1, 0}))),
            path_apply(d, path, to_rational(generator(d.ctx, {0, 1})))};
}

namespace {

bool corner_on_wall(const PerturbedDiagram& d, const Polygon& poly) {
    for (const auto& c : poly.vertices)
        for (const auto& w : d.walls)
            if (contains(w.support(), c)) return true;
    return false;
}

}  // namespace

Polygon enclosing_loop(const PerturbedDiagram& d) {
    std::vector<Point> pts = d.vertices;
    for (const auto& w : d.walls)
        if (!w.line) pts.push_back(w.base);
    for (size_t i = 0; i < d.walls.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (auto p = intersect(d.walls[i].support(), d.walls[j].support())) pts.push_back(*p);
    Rat xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    // unequal margins: a wall through an extreme point would otherwise pass
    // through a corner for every margin
    Rat margin(1);
    for (int iter = 0; iter < 1000; ++iter, margin += Rat(1, 7)) {
        Rat mx = margin, my = margin * Rat(1013, 1009);
        Polygon poly{{{xmin - mx, ymin - my}, {xmin - mx, ymax + my}, {xmax + mx, ymax + my}, {xmax + mx, ymin - my}}};
        if (!corner_on_wall(d, poly)) return poly;
    }
    throw std::runtime_error("enclosing_loop: no admissible rectangle");
}

Polygon local_loop(const PerturbedDiagram& d, const Point& p) {
    Rat h(1);
    for (int iter = 0; iter < 200; ++iter, h /= 2) {
        // skewed so that no small-slope wall through p hits a corner
        Polygon poly{{{p.x - h, p.y - h * Rat(997, 1009)},
                      {p.x - h * Rat(991, 1013), p.y + h},
                      {p.x + h, p.y + h * Rat(983, 1019)},
                      {p.x + h * Rat(977, 1021), p.y - h}}};
        if (corner_on_wall(d, poly)) continue;
        bool ok = true;
        for (const auto& w : d.walls) {
            Support sp = w.support();
            if (!w.line && !(w.base == p) && abs(w.base.x - p.x) <= h && abs(w.base.y - p.y) <= h) {
                ok = false;
                break;
            }
            bool crosses = false;
            for (size_t e = 0; e < 4 && !crosses; ++e)
                crosses = segment_hit(poly.vertices[e], poly.vertices[(e + 1) % 4], sp).has_value();
            if (crosses && !contains(sp, p)) {
                ok = false;
                break;
            }
        }
        if (ok) return poly;
    }
    throw std::runtime_error("local_loop: no admissible square");
}

}  // namespace tvx
