/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/suites.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tvx/automorphism.hpp"
#include "tvx/classical.hpp"
#include "tvx/invariants.hpp"
#include "tvx/quiver.hpp"

namespace tvx {

bool SuiteResult::pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return !cases.empty();
}

int SuiteResult::bar_checked() const {
    int n = 0;
    for (const auto& c : cases) n += c.bar_checked;
    return n;
}

bool SuiteResult::bar_ok() const {
    for (const auto& c : cases)
        if (!c.bar_ok) return false;
    return true;
}

Json SuiteResult::to_json() const {
    Json cs = Json::array();
    for (const auto& c : cases) {
        Json j = {{"case", c.label}, {"pass", c.pass}};
        if (c.bar_checked) j["bar_symmetric"] = c.bar_ok;
        if (!c.detail.is_null()) j["detail"] = c.detail;
        cs.push_back(std::move(j));
    }
    return {{"suite", name}, {"pass", pass()}, {"cases", cs}};
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string dirs_label(const std::vector<LatticeVec>& dirs) {
    std::string s;
    for (const auto& d : dirs) s += d.to_string();
    return s;
}

void bar(CaseResult& c, const QLaurent& p) {
    ++c.bar_checked;
    if (!is_bar_symmetric(p)) c.bar_ok = false;
}

// Runs body; an exception fails the case and is recorded.
CaseResult run_case(const std::string& label, const std::function<void(CaseResult&)>& body) {
    CaseResult c;
    c.label = label;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail["error"] = e.what();
    }
    return c;
}

std::uint64_t derived_seed(std::uint64_t base, std::uint64_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                      static_cast<std::uint32_t>(i)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::map<LatticeVec, WallLog> rays_by_direction(const CentralDiagram& d) {
    std::map<LatticeVec, WallLog> out;
    for (const auto* r : d.rays()) out.emplace(r->gamma(), r->log);
    return out;
}

// Bar symmetry of every P(kγ) of every ray.
Json spectra_json(const CentralDiagram& sat, CaseResult& c) {
    Json rays = Json::array();
    for (const auto* r : sat.rays()) {
        OmegaSpectrum s = extract_omegas(r->log);
        for (const auto& [key, p] : s.poincare) bar(c, p);
        rays.push_back(to_json(s.to_operator(), *sat.ctx));
    }
    return rays;
}

bool operator_loop_identity(const CentralDiagram& sat) {
    std::vector<std::pair<WallOperator, bool>> ops;
    for (const auto& w : sat.walls) ops.emplace_back(extract_omegas(w.log).to_operator(), w.line);
    return loop_product(sat.ctx, ops).is_identity();
}

std::vector<std::pair<OrderedPartition, OrderedPartition>> coprime_sweep(int max_size) {
    std::vector<std::pair<OrderedPartition, OrderedPartition>> out;
    for (int l1 = 1; l1 <= 3; ++l1)
        for (int l2 = 1; l1 + l2 <= 4; ++l2)
            for (int n = l1 + l2; n <= max_size; ++n)
                for (int a = l1; n - a >= l2; ++a)
                    for (const auto& p1 : ordered_partitions(a, l1, false))
                        for (const auto& p2 : ordered_partitions(n - a, l2, false))
                            if (coprime(p1, p2)) out.emplace_back(p1, p2);
    return out;
}

std::string partitions_label(const OrderedPartition& p1, const OrderedPartition& p2) {
    return "P1=(" + join(p1) + ") P2=(" + join(p2) + ")";
}

}  // namespace

std::vector<std::vector<LatticeVec>> standard_direction_sets(int n) {
    switch (n) {
        case 1: return {{{1, 0}}};
        case 2: return {{{1, 0}, {0, 1}}, {{1, 0}, {1, 2}}};
        case 3: return {{{1, 0}, {0, 1}, {1, 1}}};
        default: return {};
    }
}

CentralDiagram standard_diagram(const std::vector<LatticeVec>& dirs, const std::vector<int>& ell, int order) {
    std::vector<std::string> names;
    for (size_t i = 0; i < dirs.size(); ++i) names.push_back("t" + std::to_string(i + 1));
    auto ctx = SeriesContext::make(names, std::vector<int>(dirs.size(), order));
    CentralDiagram d{ctx, {}};
    for (size_t i = 0; i < dirs.size(); ++i) d.walls.push_back(standard_line(ctx, dirs[i], static_cast<int>(i), ell[i]));
    return d;
}

SuiteResult pentagon_suite(const SuiteOptions& opt) {
    SuiteResult r{"pentagon", {}};
    r.cases.push_back(run_case("l1=1 l2=1 k=" + std::to_string(opt.order), [&](CaseResult& c) {
        auto ctx = SeriesContext::make({"s", "t"}, {opt.order, opt.order});
        CentralDiagram lines{ctx, {standard_line(ctx, {1, 0}, 0, 1), standard_line(ctx, {0, 1}, 1, 1)}};
        CentralDiagram sat = saturate_central(lines);
        auto rays = sat.rays();
        c.detail["rays"] = spectra_json(sat, c);
        bool one_ray = rays.size() == 1 && rays[0]->gamma() == LatticeVec{1, 1};
        bool omega = false;
        WallOperator ray_op;
        if (one_ray) {
            OmegaSpectrum s = extract_omegas(rays[0]->log);
            Multidegree st = ctx->central({1, 1});
            omega = s.poincare.size() == 1 && s.poincare.begin()->first == std::pair{1, st} &&
                    s.poincare.begin()->second == QLaurent(1) && s.omega(1, 0, st) == 1;
            ray_op = s.to_operator();
        }
        bool loop = loop_product(sat).is_identity();
        bool pentagon = false;
        if (one_ray) {
            auto tx = images_of(ctx, extract_omegas(sat.walls[0].log).to_operator());
            auto ty = images_of(ctx, extract_omegas(sat.walls[1].log).to_operator());
            auto tr = images_of(ctx, ray_op);
            pentagon = compose(tx, ty) == compose(compose(ty, tr), tx);
        }
        c.detail["single_ray_11"] = one_ray;
        c.detail["omega0_only"] = omega;
        c.detail["loop_identity"] = loop;
        c.detail["composition_identity"] = pentagon;
        c.pass = one_ray && omega && loop && pentagon;
    }));
    return r;
}

SuiteResult consistency_suite(const SuiteOptions& opt) {
    SuiteResult r{"consistency", {}};
    for (int n = 1; n <= opt.max_lines; ++n)
        for (const auto& dirs : standard_direction_sets(n)) {
            std::vector<int> ell(static_cast<size_t>(n), 1);
            while (true) {
                for (int k = 1; k <= opt.order; ++k) {
                    std::string label = "dirs=" + dirs_label(dirs) + " l=" + join(ell) + " k=" + std::to_string(k);
                    r.cases.push_back(run_case(label, [&](CaseResult& c) {
                        CentralDiagram lines = standard_diagram(dirs, ell, k);
                        CentralDiagram sat = saturate_central(lines);
                        c.detail["walls"] = sat.walls.size();
                        c.detail["rays"] = spectra_json(sat, c);
                        bool ham = loop_product(sat).is_identity();
                        bool ops = operator_loop_identity(sat);
                        c.detail["hamiltonian_loop"] = ham;
                        c.detail["operator_loop"] = ops;
                        c.pass = ham && ops;
                        bool tropical = (n <= 2 && k <= opt.tropical_order) || (n == 3 && k <= opt.tropical_order3);
                        if (tropical) {
                            PerturbedDiagram pd = perturb_and_saturate(lines, derived_seed(opt.seed, r.cases.size()));
                            bool loop = path_ordered_product(pd, enclosing_loop(pd)).is_identity();
                            bool collapse = rays_by_direction(asymptotic_collapse(pd)) == rays_by_direction(sat);
                            c.detail["perturbed"] = {{"walls", pd.walls.size()},
                                                     {"rounds", pd.rounds},
                                                     {"enclosing_loop", loop},
                                                     {"collapse_matches", collapse}};
                            c.pass = c.pass && loop && collapse;
                        }
                    }));
                }
                size_t i = 0;
                while (i < ell.size() && ell[i] == opt.max_ell) ell[i++] = 1;
                if (i == ell.size()) break;
                ++ell[i];
            }
        }
    return r;
}

SuiteResult roundtrip_suite(const SuiteOptions& opt) {
    SuiteResult r{"roundtrip", {}};
    std::mt19937_64 rng(opt.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto ctx = SeriesContext::make({"s", "t"}, {6, 6});
    const Rat omegas[] = {1, -1, Rat(1, 2), Rat(-1, 2), 2};
    const LatticeVec dirs[] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}};
    for (int i = 0; i < opt.count; ++i) {
        WallOperator op{dirs[uniform(0, 4)], {}};
        for (int e = uniform(1, 4); e > 0; --e) {
            int k = uniform(1, 3);
            op.spectrum.push_back({k, uniform(-2, 2), omegas[uniform(0, 4)], ctx->central({k * op.gamma.a, k * op.gamma.b})});
        }
        r.cases.push_back(run_case("spectrum " + std::to_string(i), [&](CaseResult& c) {
            OmegaSpectrum back = extract_omegas(wall_operator_log(ctx, op));
            c.pass = back == spectrum_of(op);
            c.detail["operator"] = to_json(op, *ctx);
        }));
    }
    return r;
}

SuiteResult classical_limit_suite(const SuiteOptions& opt) {
    SuiteResult r{"classical-limit", {}};
    for (int l1 = 1; l1 <= opt.max_ell; ++l1)
        for (int l2 = 1; l2 <= opt.max_ell; ++l2)
            for (int k = 1; k <= opt.order; ++k) {
                std::string label = "l1=" + std::to_string(l1) + " l2=" + std::to_string(l2) + " k=" + std::to_string(k);
                r.cases.push_back(run_case(label, [&](CaseResult& c) {
                    auto ctx = SeriesContext::make({"t"}, {k});
                    CentralDiagram q = saturate_central({ctx, {standard_line(ctx, {1, 0}, 0, l1), standard_line(ctx, {0, 1}, 0, l2)}});
                    ClassicalDiagram cl = classical_saturate({ctx, {classical_line(ctx, {1, 0}, 0, l1), classical_line(ctx, {0, 1}, 0, l2)}});
                    std::map<LatticeVec, ClassicalElement> quantum, classical;
                    for (const auto* w : q.rays()) {
                        ClassicalElement lim(ctx);
                        for (const auto& [key, L] : w->log.terms())
                            lim.add_term(key.second, w->gamma() * key.first, L.eval_at_one());
                        if (!lim.is_zero()) quantum.emplace(w->gamma(), lim);
                    }
                    Json walls = Json::object();
                    for (const auto& w : cl.walls)
                        if (!w.line && !w.log_f.is_zero()) {
                            classical.emplace(w.gamma, w.log_f);
                            walls[w.gamma.to_string()] = format_classical(wall_function(w));
                        }
                    c.detail["classical_walls"] = walls;
                    c.pass = quantum == classical;
                    if (l1 == 1 && l2 == 1 && k >= 2) {
                        bool single = walls.size() == 1 && walls.contains("(1,1)") && walls["(1,1)"] == "1 + t^2*x*y";
                        c.detail["single_wall_1_plus_t2xy"] = single;
                        c.pass = c.pass && single;
                    }
                }));
            }
    return r;
}

SuiteResult invariance_suite(const SuiteOptions& opt) {
    SuiteResult r{"invariance", {}};
    for (int n = 2; n <= opt.max_size; ++n)
        for (int a = 1; a < n; ++a)
            for (const auto& w1 : weight_lists(a))
                for (const auto& w2 : weight_lists(n - a)) {
                    WeightVector w{{w1, w2}};
                    r.cases.push_back(run_case("w=" + w.to_string(), [&](CaseResult& c) {
                        QLaurent first;
                        bool same = true;
                        Json counts = Json::array();
                        for (int s = 0; s < opt.seeds; ++s) {
                            QLaurent cnt = refined_tropical_count({1, 0}, {0, 1}, w,
                                                                  derived_seed(opt.seed, static_cast<std::uint64_t>(s)), 1);
                            if (s == 0) first = cnt;
                            else if (cnt != first) same = false;
                            counts.push_back(cnt.to_string());
                        }
                        bar(c, first);
                        c.detail["count"] = first.to_string();
                        if (!same) c.detail["counts"] = counts;
                        c.pass = same;
                    }));
                }
    return r;
}

SuiteResult comparison_suite(const SuiteOptions& opt) {
    SuiteResult r{"comparison", {}};
    TropicalCountCache counts(opt.seed);
    for (const auto& [p1, p2] : coprime_sweep(opt.max_size))
        r.cases.push_back(run_case(partitions_label(p1, p2), [&](CaseResult& c) {
            ComparisonReport rep = comparison_report(p1, p2, counts);
            auto trop = rep.tropical.to_laurent();
            if (trop) bar(c, *trop);
            bar(c, rep.quiver);
            Rat euler = rep.quiver.eval_at_one();
            Rat classical = classical_gw(p1, p2, counts);
            c.detail["refined_gw"] = rep.tropical.to_string();
            c.detail["stable_poincare"] = rep.quiver.to_string();
            c.detail["euler_characteristic"] = to_string(euler);
            c.detail["classical_gw"] = to_string(classical);
            c.pass = trop && rep.tropical == QRational(rep.quiver) && euler == classical;
        }));
    return r;
}

SuiteResult mps_suite(const SuiteOptions& opt) {
    SuiteResult r{"mps", {}};
    TropicalCountCache counts(opt.seed);
    for (const auto& [p1, p2] : coprime_sweep(opt.max_size))
        r.cases.push_back(run_case(partitions_label(p1, p2), [&](CaseResult& c) {
            MpsReport rep = mps_report(p1, p2);
            bar(c, rep.lhs);
            bool refinements = true;
            Json terms = Json::array();
            for (const auto& t : rep.terms) {
                bar(c, t.abelian);
                QLaurent trop = counts.refined(WeightVector{{t.refinement.weights(0), t.refinement.weights(1)}});
                bool eq = trop == t.abelian;
                refinements = refinements && eq;
                terms.push_back({{"refinement", t.refinement.to_string()},
                                 {"coefficient", t.coefficient.to_string()},
                                 {"abelian_poincare", t.abelian.to_string()},
                                 {"tropical_count", trop.to_string()}});
            }
            c.detail["lhs"] = rep.lhs.to_string();
            c.detail["rhs"] = rep.rhs.to_string();
            c.detail["terms"] = terms;
            c.pass = rep.ok && refinements;
        }));
    return r;
}

SuiteResult specialization_suite(const SuiteOptions& opt) {
    SuiteResult r{"specialization", {}};
    for (int l1 = 1; l1 <= opt.max_ell; ++l1)
        for (int l2 = 1; l2 <= opt.max_ell; ++l2)
            for (int k = 1; k <= std::min(opt.order, 3); ++k) {
                std::string label = "l1=" + std::to_string(l1) + " l2=" + std::to_string(l2) + " k=" + std::to_string(k);
                r.cases.push_back(run_case(label, [&](CaseResult& c) {
                    CentralDiagram direct = saturate_central(power_lines(l1, l2, k));
                    CentralDiagram multi = saturate_central(multiparameter_lines(l1, l2, k));
                    CentralDiagram specialized = specialize_multiparameter(multi, direct.ctx);
                    c.detail["rays"] = spectra_json(direct, c);
                    c.pass = rays_by_direction(specialized) == rays_by_direction(direct);
                }));
            }
    return r;
}

SuiteResult gps_suite(const SuiteOptions& opt) {
    SuiteResult r{"gps", {}};
    TropicalCountCache counts(opt.seed);
    int K = std::min(opt.order, 3);
    for (int l1 = 1; l1 <= opt.max_ell; ++l1)
        for (int l2 = 1; l2 <= opt.max_ell; ++l2)
            for (int a = 1; a <= K; ++a)
                for (int b = 1; b <= K; ++b) {
                    if (std::gcd(a, b) != 1) continue;
                    for (int k = 1; k * a <= K && k * b <= K; ++k) {
                        LatticeVec ab{a, b};
                        std::string label = "l1=" + std::to_string(l1) + " l2=" + std::to_string(l2) +
                                            " gamma=" + ab.to_string() + " k=" + std::to_string(k);
                        r.cases.push_back(run_case(label, [&](CaseResult& c) {
                            Rat tropical = gps_classical_coeff(ab, k, l1, l2, counts);
                            Rat commutator = classical_commutator_coeff(ab, k, l1, l2);
                            c.detail["gps"] = to_string(tropical);
                            c.detail["commutator"] = to_string(commutator);
                            c.pass = tropical == commutator;
                        }));
                    }
                }
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"consistency", "invariance", "classical-limit", "roundtrip", "mps",
                                                "comparison",  "specialization", "pentagon", "gps"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "consistency") return consistency_suite(opt);
    if (name == "invariance") return invariance_suite(opt);
    if (name == "classical-limit") return classical_limit_suite(opt);
    if (name == "roundtrip") return roundtrip_suite(opt);
    if (name == "mps") return mps_suite(opt);
    if (name == "comparison") return comparison_suite(opt);
    if (name == "specialization") return specialization_suite(opt);
    if (name == "pentagon") return pentagon_suite(opt);
    if (name == "gps") return gps_suite(opt);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace tvx
