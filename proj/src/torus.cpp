/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/torus.hpp"

namespace tvx {

Series<Rat> classical_limit(const TorusElement& x) {
    Series<Rat> r(x.context());
    for (const auto& [k, c] : x.terms()) r.add_term(k.deg, k.lat, c.eval_at_one());
    return r;
}

TorusElementR to_rational(const TorusElement& x) {
    TorusElementR r(x.context());
    for (const auto& [k, c] : x.terms()) r.add_term(k.deg, k.lat, QRational(c));
    return r;
}

TorusElement to_laurent(const TorusElementR& x) {
    TorusElement r(x.context());
    for (const auto& [k, c] : x.terms()) r.add_term(k.deg, k.lat, c.laurent_or_throw("torus element"));
    return r;
}

}  // namespace tvx
