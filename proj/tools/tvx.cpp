/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tvx/classical.hpp"
#include "tvx/invariants.hpp"
#include "tvx/io.hpp"
#include "tvx/quiver.hpp"
#include "tvx/suites.hpp"

using namespace tvx;

namespace {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string render(const std::string& format) const {
        std::ostringstream os;
        if (format == "json") {
            Json out = Json::array();
            for (const auto& r : rows) {
                Json o = Json::object();
                for (size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
                out.push_back(std::move(o));
            }
            os << out.dump(2) << '\n';
        } else if (format == "csv") {
            auto cell = [](const std::string& s) {
                if (s.find_first_of(",\"") == std::string::npos) return s;
                std::string q = "\"";
                for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                return q + "\"";
            };
            for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << cell(header[i]);
            os << '\n';
            for (const auto& r : rows) {
                for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
                os << '\n';
            }
        } else {
            std::vector<size_t> width(header.size());
            for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
            for (const auto& r : rows)
                for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
            auto line = [&](const std::vector<std::string>& r) {
                for (size_t i = 0; i < r.size(); ++i) {
                    os << r[i];
                    if (i + 1 < r.size()) os << std::string(width[i] - r[i].size() + 2, ' ');
                }
                os << '\n';
            };
            line(header);
            for (const auto& r : rows) line(r);
        }
        return os.str();
    }
};

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("list", "empty entry in '" + s + "'");
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("list", "not an integer: '" + item + "'");
        }
    }
    return out;
}

// "1,1/2" -> ((1,1),(2))
WeightVector parse_weights(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw CLI::ValidationError("--w", "expected w1/w2, e.g. 1,1/2");
    WeightVector w{{parse_list(s.substr(0, slash)), parse_list(s.substr(slash + 1))}};
    for (auto& l : w.w) {
        for (int x : l)
            if (x < 1) throw CLI::ValidationError("--w", "weights must be positive");
        std::sort(l.begin(), l.end());
    }
    return w;
}

bool slope_greater(LatticeVec x, LatticeVec y) { return static_cast<long>(x.b) * y.a > static_cast<long>(y.b) * x.a; }

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) std::cout << text;
    else write_file(out, text);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("TVX_SEED")) {
        try {
            return std::stoull(env, nullptr, 0);
        } catch (const std::exception&) {
            throw CLI::ValidationError("TVX_SEED", std::string("not an integer: ") + env);
        }
    }
    return kDefaultSeed;
}

int run_commutator(int l1, int l2, int order, bool classical, const std::string& format, const std::string& out) {
    auto ctx = SeriesContext::make({"t"}, {order});
    Table t;
    if (classical) {
        ClassicalDiagram sat =
            classical_saturate({ctx, {classical_line(ctx, {1, 0}, 0, l1), classical_line(ctx, {0, 1}, 0, l2)}});
        std::vector<const ClassicalWall*> walls;
        for (const auto& w : sat.walls)
            if (!w.line && !w.log_f.is_zero()) walls.push_back(&w);
        std::stable_sort(walls.begin(), walls.end(), [](auto* x, auto* y) { return slope_greater(x->gamma, y->gamma); });
        t.header = {"gamma", "wall_function"};
        for (const auto* w : walls) t.rows.push_back({w->gamma.to_string(), format_classical(wall_function(*w))});
    } else {
        CentralDiagram sat = saturate_central(power_lines(l1, l2, order));
        auto rays = sat.rays();
        std::stable_sort(rays.begin(), rays.end(), [](auto* x, auto* y) { return slope_greater(x->gamma(), y->gamma()); });
        t.header = {"gamma", "k", "sigma", "n", "omega", "P"};
        for (const auto* r : rays) {
            OmegaSpectrum s = extract_omegas(r->log);
            for (const auto& [key, p] : s.poincare) {
                if (p.is_zero()) continue;
                for (int n = p.max_exponent(); n >= p.min_exponent(); --n) {
                    Rat om = s.omega(key.first, n, key.second);
                    if (om == 0) continue;
                    t.rows.push_back({r->gamma().to_string(), std::to_string(key.first), ctx->format(key.second),
                                      std::to_string(n), to_string(om), p.to_string()});
                }
            }
        }
    }
    emit(t.render(format), out);
    return 0;
}

int run_scatter(int l1, int l2, int order, std::uint64_t seed, const std::string& format, const std::string& out) {
    CentralDiagram lines = standard_diagram({{1, 0}, {0, 1}}, {l1, l2}, order);
    PerturbedDiagram d = perturb_and_saturate(lines, seed);
    if (format == "svg") {
        emit(diagram_svg(d), out);
        return 0;
    }
    if (format == "json") {
        emit(to_json(d).dump(2) + "\n", out);
        return 0;
    }
    Table t;
    t.header = {"gamma", "k", "sigma", "n", "omega"};
    auto merged = merge_by_direction(d);
    std::stable_sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return slope_greater(x.first, y.first); });
    for (const auto& [g, op] : merged)
        for (const auto& e : op.spectrum)
            t.rows.push_back({g.to_string(), std::to_string(e.k), lines.ctx->format(e.sigma), std::to_string(e.n),
                              to_string(e.omega)});
    std::ostringstream os;
    os << "seed " << d.seed << "  attempts " << d.attempts << "  rounds " << d.rounds << "  walls " << d.walls.size()
       << "  rays " << d.ray_count() << '\n';
    emit(os.str() + t.render(format), out);
    return 0;
}

int run_tropical(const WeightVector& w, std::uint64_t seed, const std::string& format, const std::string& out) {
    std::mt19937_64 rng(seed);
    EndConfiguration cfg = sample_ends({{1, 0}, {0, 1}}, w, rng);
    auto curves = enumerate_curves(cfg);
    if (format == "svg") {
        if (out.empty()) throw CLI::ValidationError("--out", "svg output needs --out PREFIX");
        for (size_t i = 0; i < curves.size(); ++i) write_file(out + "-" + std::to_string(i) + ".svg", curve_svg(curves[i]));
        std::cout << curves.size() << " curves written\n";
        return 0;
    }
    QLaurent total;
    for (const auto& c : curves) total += bg_multiplicity(c);
    if (format == "json") {
        Json cs = Json::array();
        for (const auto& c : curves) cs.push_back(to_json(c, cfg));
        Json j = {{"w", w.to_string()}, {"seed", seed}, {"refined_count", total.to_string()},
                  {"classical_count", to_string(total.eval_at_one())}, {"curves", cs}};
        emit(j.dump(2) + "\n", out);
        return 0;
    }
    Table t;
    t.header = {"curve", "vertices", "multiplicities", "mu_q"};
    for (size_t i = 0; i < curves.size(); ++i) {
        std::string mults;
        for (size_t v = 0; v < curves[i].vertices.size(); ++v)
            mults += (v ? " " : "") + std::to_string(vertex_multiplicity(curves[i], v));
        t.rows.push_back({std::to_string(i), std::to_string(curves[i].vertices.size()), mults,
                          bg_multiplicity(curves[i]).to_string()});
    }
    std::ostringstream os;
    os << "w " << w.to_string() << "  seed " << seed << "  N_trop " << total.to_string() << "  N " << to_string(total.eval_at_one())
       << '\n';
    emit(os.str() + t.render(format), out);
    return 0;
}

int run_refined_gw(const std::vector<int>& p1, const std::vector<int>& p2, int order, std::uint64_t seed,
                   const std::string& format, const std::string& out) {
    TropicalCountCache counts(seed);
    QRational refined = refined_gw(p1, p2, counts);
    Rat classical = classical_gw(p1, p2, counts);
    Table t;
    t.header = {"P1", "P2", "N", "N_hat"};
    std::string a, b;
    for (size_t i = 0; i < p1.size(); ++i) a += (i ? "," : "") + std::to_string(p1[i]);
    for (size_t i = 0; i < p2.size(); ++i) b += (i ? "," : "") + std::to_string(p2[i]);
    t.rows.push_back({a, b, to_string(classical), refined.to_string()});
    int status = 0;
    if (order > 0) {
        // read the same invariant off the multi-parameter saturation
        int sa = partition_size(p1), sb = partition_size(p2);
        int k = std::gcd(sa, sb);
        t.header.push_back("from_saturation");
        if (*std::max_element(p1.begin(), p1.end()) > order || *std::max_element(p2.begin(), p2.end()) > order) {
            t.rows.back().push_back("order too small");
        } else {
            CentralDiagram sat = saturate_central(multiparameter_lines(static_cast<int>(p1.size()), static_cast<int>(p2.size()), order));
            std::vector<int> exps(p1);
            exps.insert(exps.end(), p2.begin(), p2.end());
            QLaurent L;
            for (const auto* r : sat.rays())
                if (r->gamma() == LatticeVec{sa / k, sb / k}) L = r->log.reduced(k, sat.ctx->central(exps));
            QRational from_sat(L, q_number(k));
            t.rows.back().push_back(from_sat.to_string());
            if (from_sat != refined) status = 1;
        }
    }
    emit(t.render(format), out);
    return status;
}

int run_quiver(int l1, int l2, const std::vector<int>& dim, const std::string& format, const std::string& out) {
    QuiverSpec q = build_bipartite(l1, l2);
    if (static_cast<int>(dim.size()) != q.vertices())
        throw CLI::ValidationError("--dim", "expected " + std::to_string(q.vertices()) + " entries");
    Stability s = Stability::level(q);
    Table t;
    t.header = {"dim", "stack_series", "poincare", "euler"};
    std::string d;
    for (size_t i = 0; i < dim.size(); ++i) d += (i ? "," : "") + std::to_string(dim[i]);
    HarderNarasimhan hn(q, s);
    QLaurent p = stable_poincare(hn, dim);
    t.rows.push_back({d, hn.semistable(dim).to_string(), p.to_string(), to_string(p.eval_at_one())});
    emit(t.render(format), out);
    return 0;
}

int run_verify(const std::string& suite, const SuiteOptions& opt, const std::string& format, const std::string& out) {
    SuiteResult r = run_suite(suite, opt);
    if (format == "json") {
        Json j = r.to_json();
        j["seed"] = opt.seed;
        emit(j.dump(2) + "\n", out);
    } else {
        Table t;
        t.header = {"case", "pass", "detail"};
        for (const auto& c : r.cases) t.rows.push_back({c.label, c.pass ? "pass" : "FAIL", c.detail.dump()});
        emit("suite " + r.name + "  seed " + std::to_string(opt.seed) + "  " + (r.pass() ? "PASS" : "FAIL") + "\n" +
                 t.render(format),
             out);
    }
    return r.pass() ? 0 : 1;
}

int run_export(const std::string& kind, int l1, int l2, int order, const std::string& w, int curve, std::uint64_t seed,
               const std::string& format, const std::string& out) {
    if (out.empty()) throw CLI::ValidationError("--out", "export needs --out");
    bool svg = format != "json";
    if (kind == "diagram") {
        PerturbedDiagram d = perturb_and_saturate(standard_diagram({{1, 0}, {0, 1}}, {l1, l2}, order), seed);
        write_file(out, svg ? diagram_svg(d) : to_json(d).dump(2) + "\n");
        return 0;
    }
    if (kind == "empty") {
        PerturbedDiagram d;
        write_file(out, svg ? diagram_svg(d) : to_json(d).dump(2) + "\n");
        return 0;
    }
    std::mt19937_64 rng(seed);
    EndConfiguration cfg = sample_ends({{1, 0}, {0, 1}}, parse_weights(w), rng);
    auto curves = enumerate_curves(cfg);
    if (curve < 0 || curve >= static_cast<int>(curves.size()))
        throw CLI::ValidationError("--curve", "index out of range (" + std::to_string(curves.size()) + " curves)");
    const auto& c = curves[static_cast<size_t>(curve)];
    write_file(out, svg ? curve_svg(c) : to_json(c, cfg).dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tvx: scattering diagrams, refined tropical counts and quiver invariants"};
    app.require_subcommand(1);

    int l1 = 1, l2 = 1, order = 4, curve = 0;
    std::string format = "table", out, p1s, p2s, ws, dims, suite, kind = "diagram";
    bool classical = false, json_flag = false;
    std::uint64_t seed = kDefaultSeed;
    SuiteOptions opt;
    const std::vector<std::string> formats{"table", "json", "csv", "svg"};

    auto common = [&](CLI::App* s) {
        s->add_option("--format", format, "table | json | csv | svg")->check(CLI::IsMember(formats));
        s->add_flag("--json", json_flag, "same as --format json");
        s->add_option("--out", out, "output file (default stdout)");
        s->add_option("--seed", seed, "64-bit seed (default TVX_SEED or 0xC0FFEE)");
    };
    auto lines = [&](CLI::App* s) {
        s->add_option("--l1", l1, "exponent of the (1,0) line")->check(CLI::Range(1, 8));
        s->add_option("--l2", l2, "exponent of the (0,1) line")->check(CLI::Range(1, 8));
        s->add_option("--order", order, "truncation order k")->check(CLI::Range(1, 64));
    };

    auto* commutator = app.add_subcommand("commutator", "slope-ordered factorization of the commutator");
    lines(commutator);
    commutator->add_flag("--classical", classical, "commutative (q = 1) engine");
    common(commutator);

    auto* scatter = app.add_subcommand("scatter", "perturbed saturation of two lines");
    lines(scatter);
    common(scatter);

    auto* tropical = app.add_subcommand("tropical-count", "refined tropical curve count");
    tropical->add_option("--w", ws, "weight vector w1/w2, e.g. 1,1/2")->required();
    common(tropical);

    auto* gw = app.add_subcommand("refined-gw", "refined invariant of (P1, P2)");
    gw->add_option("--p1", p1s, "ordered partition, e.g. 2,1")->required();
    gw->add_option("--p2", p2s, "ordered partition, e.g. 1,1")->required();
    auto* gw_order = gw->add_option("--order", order, "also read the value off the multi-parameter saturation")
                         ->check(CLI::Range(1, 64));
    common(gw);

    auto* quiver = app.add_subcommand("quiver-poincare", "Poincare polynomial of stable representations of K(l1,l2)");
    quiver->add_option("--l1", l1, "sources")->check(CLI::Range(1, 8));
    quiver->add_option("--l2", l2, "sinks")->check(CLI::Range(1, 8));
    quiver->add_option("--dim", dims, "dimension vector, sources first")->required();
    common(quiver);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-lines", opt.max_lines, "consistency: lines")->check(CLI::Range(1, 3));
    verify->add_option("--max-ell", opt.max_ell, "largest line exponent")->check(CLI::Range(1, 4));
    verify->add_option("--order", opt.order, "truncation order")->check(CLI::Range(1, 16));
    verify->add_option("--max-size", opt.max_size, "largest |P1| + |P2| or |w1| + |w2|")->check(CLI::Range(2, 10));
    verify->add_option("--count", opt.count, "roundtrip: random spectra")->check(CLI::Range(1, 100000));
    verify->add_option("--seeds", opt.seeds, "invariance: configurations per weight vector")->check(CLI::Range(1, 1000));
    common(verify);

    auto* exporter = app.add_subcommand("export", "write a diagram or a curve as SVG or JSON");
    exporter->add_option("--kind", kind, "diagram | curve | empty")->check(CLI::IsMember({"diagram", "curve", "empty"}));
    lines(exporter);
    exporter->add_option("--w", ws, "weight vector for --kind curve");
    exporter->add_option("--curve", curve, "curve index");
    common(exporter);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (json_flag) format = "json";

    try {
        for (auto* sub : app.get_subcommands())
            if (sub->get_option("--seed")->count() == 0) seed = default_seed();
        if (commutator->parsed()) return run_commutator(l1, l2, order, classical, format, out);
        if (scatter->parsed()) return run_scatter(l1, l2, order, seed, format, out);
        if (tropical->parsed()) return run_tropical(parse_weights(ws), seed, format, out);
        if (gw->parsed()) return run_refined_gw(parse_list(p1s), parse_list(p2s), gw_order->count() ? order : 0, seed, format, out);
        if (quiver->parsed()) return run_quiver(l1, l2, parse_list(dims), format, out);
        if (verify->parsed()) {
            opt.seed = seed;
            return run_verify(suite, opt, format, out);
        }
        if (exporter->parsed()) return run_export(kind, l1, l2, order, ws, curve, seed, format, out);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
