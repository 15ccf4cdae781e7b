/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <json.hpp>
#include <string>

#include "tvx/central.hpp"
#include "tvx/omega.hpp"
#include "tvx/scattering.hpp"
#include "tvx/tropical.hpp"

namespace tvx {

using Json = nlohmann::ordered_json;

/// {"terms": [{"v": e, "c": "p/q"}, ...]}, decreasing exponents.
Json to_json(const QLaurent& p);
QLaurent laurent_from_json(const Json& j);
/// {"num": ..., "den": ...}
Json to_json(const QRational& r);
QRational rational_from_json(const Json& j);
/// {"gamma": [a, b], "spectrum": [{"k", "n", "omega", "sigma"}, ...]}
Json to_json(const WallOperator& op, const SeriesContext& ctx);
WallOperator operator_from_json(const Json& j, const SeriesContext& ctx);
Json to_json(const CentralDiagram& d);
Json to_json(const PerturbedDiagram& d);
Json to_json(const TropicalCurve& c, const EndConfiguration& ends);

/// Lines clipped to the bounding box of all scattering points and ray bases
/// (10% margin), rays with arrowheads, ray bases labelled by μ_q.
std::string diagram_svg(const PerturbedDiagram& d);
/// Ends, bounded edges and the outgoing edge; vertices labelled by [μ]_q.
std::string curve_svg(const TropicalCurve& c);

/// Throws std::runtime_error when the file cannot be written.
void write_file(const std::string& path, const std::string& contents);

}  // namespace tvx
