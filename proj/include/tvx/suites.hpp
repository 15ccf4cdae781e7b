/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tvx/io.hpp"

namespace tvx {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct SuiteOptions {
    int max_lines = 3;
    int max_ell = 2;
    int order = 4;
    int max_size = 6;
    int count = 100;  // random spectra in the round-trip suite
    int seeds = 10;   // configurations per weight vector in the invariance suite
    std::uint64_t seed = kDefaultSeed;
    // the perturbed diagram is also saturated and looped when
    // (lines <= 2 and order <= tropical_order) or (lines == 3 and order <= tropical_order3)
    int tropical_order = 3;
    int tropical_order3 = 2;
};

struct CaseResult {
    std::string label;
    bool pass = false;
    int bar_checked = 0;  // Laurent polynomials tested for v -> 1/v symmetry
    bool bar_ok = true;
    Json detail;
};

struct SuiteResult {
    std::string name;
    std::vector<CaseResult> cases;

    bool pass() const;
    int bar_checked() const;
    bool bar_ok() const;
    Json to_json() const;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

/// ℓ1 = ℓ2 = 1 at the given order: one ray (1,1) with Ω_0 = 1 only, loop
/// identity, and the product identity θ_x θ_y = θ_y θ_ray θ_x by composition.
SuiteResult pentagon_suite(const SuiteOptions& opt);
/// Standard diagrams with up to max_lines lines, exponents <= max_ell, orders
/// <= order: loop identity via Hamiltonians and via Ω spectra, and on small
/// cases the perturbed diagram's enclosing loop and collapse.
SuiteResult consistency_suite(const SuiteOptions& opt);
SuiteResult roundtrip_suite(const SuiteOptions& opt);
SuiteResult classical_limit_suite(const SuiteOptions& opt);
SuiteResult invariance_suite(const SuiteOptions& opt);
SuiteResult comparison_suite(const SuiteOptions& opt);
SuiteResult mps_suite(const SuiteOptions& opt);
SuiteResult specialization_suite(const SuiteOptions& opt);
SuiteResult gps_suite(const SuiteOptions& opt);

/// Direction sets used by the consistency suite for n lines.
std::vector<std::vector<LatticeVec>> standard_direction_sets(int n);
/// Lines R α_i with θ̂^{ℓ_i}[t_i ê_{α_i}], t_i truncated at `order`.
CentralDiagram standard_diagram(const std::vector<LatticeVec>& dirs, const std::vector<int>& ell, int order);

}  // namespace tvx
