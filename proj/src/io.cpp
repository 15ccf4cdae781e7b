/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tvx {

Json to_json(const QLaurent& p) {
    Json terms = Json::array();
    auto t = p.terms();
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [e, c] : t) terms.push_back({{"v", e}, {"c", to_string(c)}});
    return {{"terms", terms}};
}

QLaurent laurent_from_json(const Json& j) {
    std::vector<QLaurent::Term> terms;
    for (const auto& t : j.at("terms")) terms.emplace_back(t.at("v").get<int>(), parse_rat(t.at("c").get<std::string>()));
    return QLaurent::from_terms(std::move(terms));
}

Json to_json(const QRational& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

QRational rational_from_json(const Json& j) {
    return QRational(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

namespace {

Json degree_json(const Multidegree& d, const SeriesContext& ctx) {
    Json e = Json::array();
    for (int i = 0; i < ctx.central_count(); ++i) e.push_back(static_cast<int>(d.exps[static_cast<size_t>(i)]));
    return e;
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

struct Box {
    double x0, y0, x1, y1;
};

Box bounding_box(const std::vector<std::pair<double, double>>& pts) {
    if (pts.empty()) return {-1, -1, 1, 1};
    Box b{pts[0].first, pts[0].second, pts[0].first, pts[0].second};
    for (const auto& [x, y] : pts) {
        b.x0 = std::min(b.x0, x);
        b.x1 = std::max(b.x1, x);
        b.y0 = std::min(b.y0, y);
        b.y1 = std::max(b.y1, y);
    }
    double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1e-9});
    if (b.x1 - b.x0 < 1e-9 && b.y1 - b.y0 < 1e-9) span = 2;
    double m = 0.1 * span;
    double cx = (b.x0 + b.x1) / 2, cy = (b.y0 + b.y1) / 2;
    double half = span / 2 + m;
    return {cx - half, cy - half, cx + half, cy + half};
}

// Parameter range of base + t dir inside the box (slab clipping).
bool clip(const Box& b, double px, double py, double dx, double dy, double tmin, double& t0, double& t1) {
    t0 = tmin;
    t1 = 1e300;
    auto slab = [&](double p, double d, double lo, double hi) {
        if (std::abs(d) < 1e-300) return p >= lo && p <= hi;
        double a = (lo - p) / d, c = (hi - p) / d;
        if (a > c) std::swap(a, c);
        t0 = std::max(t0, a);
        t1 = std::min(t1, c);
        return true;
    };
    if (tmin == -1e300) t0 = -1e300;
    return slab(px, dx, b.x0, b.x1) && slab(py, dy, b.y0, b.y1) && t0 < t1;
}

class Svg {
public:
    explicit Svg(const Box& b) : b_(b) {
        double w = b.x1 - b.x0;
        os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(b.x0) << ' ' << num(-b.y1) << ' '
            << num(w) << ' ' << num(b.y1 - b.y0) << "\" width=\"600\" height=\"600\">\n";
        os_ << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
               "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
        stroke_ = num(w / 400);
        font_ = num(w / 40);
        os_ << "<g stroke=\"#bbb\" stroke-width=\"" << stroke_ << "\">";
        if (b.x0 < 0 && b.x1 > 0) os_ << "<line x1=\"0\" y1=\"" << num(-b.y0) << "\" x2=\"0\" y2=\"" << num(-b.y1) << "\"/>";
        if (b.y0 < 0 && b.y1 > 0) os_ << "<line x1=\"" << num(b.x0) << "\" y1=\"0\" x2=\"" << num(b.x1) << "\" y2=\"0\"/>";
        os_ << "</g>\n";
    }
    void segment(double x0, double y0, double x1, double y1, bool arrow, const char* color) {
        os_ << "<line x1=\"" << num(x0) << "\" y1=\"" << num(-y0) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(-y1)
            << "\" stroke=\"" << color << "\" stroke-width=\"" << stroke_ << '"'
            << (arrow ? " marker-end=\"url(#arrow)\"" : "") << "/>\n";
    }
    // Half-line (or full line) clipped to the box.
    void half_line(double px, double py, double dx, double dy, bool ray, bool arrow, const char* color) {
        double t0, t1;
        if (!clip(b_, px, py, dx, dy, ray ? 0.0 : -1e300, t0, t1)) return;
        segment(px + t0 * dx, py + t0 * dy, px + t1 * dx, py + t1 * dy, arrow, color);
    }
    void label(double x, double y, const std::string& text) {
        os_ << "<circle cx=\"" << num(x) << "\" cy=\"" << num(-y) << "\" r=\"" << stroke_ << "\"/>"
            << "<text x=\"" << num(x) << "\" y=\"" << num(-y) << "\" font-size=\"" << font_ << "\">" << text
            << "</text>\n";
    }
    std::string finish() {
        os_ << "</svg>\n";
        return os_.str();
    }

private:
    static std::string num(double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", x);
        return std::string(buf) == "-0.0000" ? "0.0000" : buf;
    }
    Box b_;
    std::ostringstream os_;
    std::string stroke_, font_;
};

double dbl(const Rat& r) { return r.get_d(); }

}  // namespace

Json to_json(const WallOperator& op, const SeriesContext& ctx) {
    Json entries = Json::array();
    for (const auto& e : op.spectrum)
        entries.push_back({{"k", e.k}, {"n", e.n}, {"omega", to_string(e.omega)}, {"sigma", degree_json(e.sigma, ctx)}});
    return {{"gamma", {op.gamma.a, op.gamma.b}}, {"spectrum", entries}};
}

WallOperator operator_from_json(const Json& j, const SeriesContext& ctx) {
    WallOperator op;
    op.gamma = {j.at("gamma").at(0).get<int>(), j.at("gamma").at(1).get<int>()};
    for (const auto& e : j.at("spectrum")) {
        SpectrumEntry s;
        s.k = e.at("k").get<int>();
        s.n = e.at("n").get<int>();
        s.omega = parse_rat(e.at("omega").get<std::string>());
        if (e.contains("sigma")) {
            s.sigma = ctx.central(e.at("sigma").get<std::vector<int>>());
        } else {
            std::vector<int> d(static_cast<size_t>(ctx.central_count()), 0);
            s.sigma = ctx.central(d);
        }
        op.spectrum.push_back(std::move(s));
    }
    return op;
}

Json to_json(const CentralDiagram& d) {
    Json walls = Json::array();
    for (const auto& w : d.walls) {
        Json terms = Json::array();
        for (const auto& [key, L] : w.log.terms())
            terms.push_back({{"m", key.first}, {"degree", degree_json(key.second, *d.ctx)}, {"L", to_json(L)}});
        walls.push_back({{"gamma", {w.gamma().a, w.gamma().b}}, {"line", w.line}, {"log", terms}});
    }
    return {{"walls", walls}};
}

Json to_json(const PerturbedDiagram& d) {
    Json walls = Json::array();
    for (size_t i = 0; i < d.walls.size(); ++i) {
        const auto& w = d.walls[i];
        Json j = {{"base", point_json(w.base)},
                  {"direction", {w.dir.a, w.dir.b}},
                  {"line", w.line},
                  {"mask", w.mask},
                  {"mu", w.mu.to_string()},
                  {"coefficient", d.coefficient(static_cast<int>(i)).to_string()},
                  {"round", w.round}};
        if (w.line) j["source"] = w.source;
        else j["parents"] = {w.parent1, w.parent2};
        walls.push_back(std::move(j));
    }
    return {{"seed", d.seed}, {"attempts", d.attempts}, {"rounds", d.rounds}, {"walls", walls}};
}

Json to_json(const TropicalCurve& c, const EndConfiguration& cfg) {
    Json vs = Json::array();
    for (size_t v = 0; v < c.vertices.size(); ++v) {
        const auto& x = c.vertices[v];
        vs.push_back({{"position", point_json(x.position)},
                      {"in", {{x.in1.a, x.in1.b}, {x.in2.a, x.in2.b}}},
                      {"children", {x.child1, x.child2}},
                      {"multiplicity", vertex_multiplicity(c, v)},
                      {"mu_q", q_number(vertex_multiplicity(c, v)).to_string()}});
    }
    Json ends = Json::array();
    for (int e : c.ends) {
        const auto& end = cfg.ends[static_cast<size_t>(e)];
        ends.push_back({{"index", e}, {"direction", end.direction}, {"weight", end.weight}, {"base", point_json(end.base)}});
    }
    return {{"ends", ends},
            {"vertices", vs},
            {"outgoing", {c.outgoing.a, c.outgoing.b}},
            {"mikhalkin", c.mikhalkin()},
            {"bg", bg_multiplicity(c).to_string()}};
}

std::string diagram_svg(const PerturbedDiagram& d) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : d.vertices) pts.emplace_back(dbl(p.x), dbl(p.y));
    for (const auto& w : d.walls) pts.emplace_back(dbl(w.base.x), dbl(w.base.y));
    Svg svg(bounding_box(pts));
    for (const auto& w : d.walls)
        svg.half_line(dbl(w.base.x), dbl(w.base.y), w.dir.a, w.dir.b, !w.line, !w.line, w.line ? "#246" : "#a33");
    for (const auto& w : d.walls)
        if (!w.line) svg.label(dbl(w.base.x), dbl(w.base.y), w.mu.to_string());
    return svg.finish();
}

std::string curve_svg(const TropicalCurve& c) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : c.vertices) pts.emplace_back(dbl(v.position.x), dbl(v.position.y));
    Svg svg(bounding_box(pts));
    for (size_t i = 0; i < c.vertices.size(); ++i) {
        const auto& v = c.vertices[i];
        double x = dbl(v.position.x), y = dbl(v.position.y);
        for (auto [child, in] : {std::pair{v.child1, v.in1}, std::pair{v.child2, v.in2}}) {
            if (child >= 0) {
                const auto& u = c.vertices[static_cast<size_t>(child)];
                svg.segment(dbl(u.position.x), dbl(u.position.y), x, y, false, "#246");
            } else {
                svg.half_line(x, y, -in.a, -in.b, true, false, "#246");
            }
        }
    }
    if (!c.vertices.empty()) {
        const auto& root = c.vertices.back();
        svg.half_line(dbl(root.position.x), dbl(root.position.y), c.outgoing.a, c.outgoing.b, true, true, "#a33");
    }
    for (size_t i = 0; i < c.vertices.size(); ++i)
        svg.label(dbl(c.vertices[i].position.x), dbl(c.vertices[i].position.y),
                  "[" + std::to_string(vertex_multiplicity(c, i)) + "]_q");
    return svg.finish();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
    if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace tvx
