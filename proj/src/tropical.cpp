/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/tropical.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace tvx {

int WeightVector::total(size_t i) const {
    int s = 0;
    for (int x : w.at(i)) s += x;
    return s;
}

std::string WeightVector::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += "(";
        for (size_t j = 0; j < w[i].size(); ++j) out += (j ? "," : "") + std::to_string(w[i][j]);
        out += ")";
    }
    return out + ")";
}

EndConfiguration sample_ends(const std::vector<LatticeVec>& alphas, const WeightVector& w, std::mt19937_64& rng) {
    if (alphas.size() != w.w.size()) throw std::invalid_argument("sample_ends: one weight list per direction");
    std::uniform_int_distribution<long> offset(-1000000, 1000000);
    EndConfiguration cfg{alphas, {}};
    for (size_t i = 0; i < w.w.size(); ++i)
        for (int weight : w.w[i]) {
            if (weight <= 0) throw std::invalid_argument("sample_ends: weights must be positive");
            Rat x(offset(rng), 10007), y(offset(rng), 10007);
            cfg.ends.push_back({static_cast<int>(i), weight, Point{x, y}});
        }
    return cfg;
}

long TropicalCurve::mikhalkin() const {
    long m = 1;
    for (size_t v = 0; v < vertices.size(); ++v) m *= vertex_multiplicity(*this, v);
    return m;
}

int vertex_multiplicity(const TropicalCurve& c, size_t vertex) {
    const CurveVertex& v = c.vertices.at(vertex);
    return std::abs(pairing(v.in1, v.in2));
}

QLaurent bg_multiplicity(const TropicalCurve& c) {
    QLaurent r(1);
    for (size_t v = 0; v < c.vertices.size(); ++v) r *= q_number(vertex_multiplicity(c, v));
    return r;
}

std::vector<TropicalCurve> enumerate_curves(const EndConfiguration& cfg, Exec exec) {
    const size_t n = cfg.ends.size();
    if (n == 0 || n > static_cast<size_t>(kMaxNilpotent)) throw std::invalid_argument("enumerate_curves: 1..64 ends");
    std::vector<NilpotentLabel> nil;
    for (size_t e = 0; e < n; ++e) nil.push_back({0, static_cast<int>(e) + 1});
    PerturbedDiagram d;
    d.ctx = SeriesContext::make({"t"}, {static_cast<int>(n)}, nil);
    for (size_t e = 0; e < n; ++e) {
        const EndLine& end = cfg.ends[e];
        ElementaryWall w;
        w.base = end.base;
        w.bx = end.base.x.get_d();
        w.by = end.base.y.get_d();
        w.dir = cfg.alphas.at(static_cast<size_t>(end.direction)) * end.weight;
        w.line = true;
        w.mask = std::uint64_t{1} << e;
        w.mu = QLaurent(1);
        w.source = end.direction;
        w.multiple = end.weight;
        w.line_coeff = QRational(1);
        d.walls.push_back(std::move(w));
    }
    saturate(d, exec);

    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<TropicalCurve> out;
    for (size_t i = 0; i < d.walls.size(); ++i) {
        const ElementaryWall& root = d.walls[i];
        if (root.line || root.mask != full) continue;
        TropicalCurve c;
        c.outgoing = root.dir;
        std::function<int(int)> walk = [&](int idx) -> int {
            const ElementaryWall& w = d.walls[static_cast<size_t>(idx)];
            if (w.line) {
                c.ends.push_back(idx);
                return -1 - idx;
            }
            int a = walk(w.parent1);
            int b = walk(w.parent2);
            c.vertices.push_back({w.base, d.walls[static_cast<size_t>(w.parent1)].dir,
                                  d.walls[static_cast<size_t>(w.parent2)].dir, a, b});
            return static_cast<int>(c.vertices.size()) - 1;
        };
        walk(static_cast<int>(i));
        if (!(bg_multiplicity(c) == root.mu)) throw std::logic_error("enumerate_curves: multiplicity mismatch");
        out.push_back(std::move(c));
    }
    return out;
}

QLaurent refined_tropical_count(const std::vector<LatticeVec>& alphas, const WeightVector& w, std::uint64_t seed,
                                int configs) {
    std::mt19937_64 rng(seed);
    std::optional<QLaurent> first;
    for (int c = 0; c < configs; ++c) {
        QLaurent total;
        bool done = false;
        for (int attempt = 0; attempt < 32 && !done; ++attempt) {
            EndConfiguration cfg = sample_ends(alphas, w, rng);
            try {
                total = QLaurent();
                for (const auto& curve : enumerate_curves(cfg)) total += bg_multiplicity(curve);
                done = true;
            } catch (const DegenerateConfiguration&) {
            }
        }
        if (!done) throw DegenerateConfiguration("refined_tropical_count: no generic configuration");
        if (!first)
            first = total;
        else if (!(*first == total))
            throw std::runtime_error("refined_tropical_count: configurations disagree for " + w.to_string());
    }
    return first.value_or(QLaurent());
}

QLaurent refined_tropical_count(LatticeVec alpha1, LatticeVec alpha2, const WeightVector& w, std::uint64_t seed,
                                int configs) {
    return refined_tropical_count(std::vector<LatticeVec>{alpha1, alpha2}, w, seed, configs);
}

Rat classical_tropical_count(LatticeVec alpha1, LatticeVec alpha2, const WeightVector& w, std::uint64_t seed,
                             int configs) {
    return eval_at_one(refined_tropical_count(alpha1, alpha2, w, seed, configs));
}

std::vector<WeightList> weight_lists(int n) {
    std::vector<WeightList> out;
    WeightList cur;
    std::function<void(int, int)> rec = [&](int left, int min_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = min_part; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, 1);
    return out;
}

}  // namespace tvx
