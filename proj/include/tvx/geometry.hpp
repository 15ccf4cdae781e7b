/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <optional>
#include <string>

#include "tvx/lattice.hpp"
#include "tvx/rat.hpp"

namespace tvx {

struct Point {
    Rat x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
    std::string to_string() const { return "(" + tvx::to_string(x) + "," + tvx::to_string(y) + ")"; }
};

/// base + R dir (line) or base + R_{>=0} dir (ray).
struct Support {
    Point base;
    LatticeVec dir;
    bool ray = false;
};

/// Cross product of a rational vector with a lattice vector.
inline Rat cross(const Rat& x, const Rat& y, LatticeVec d) { return x * d.b - y * d.a; }

/// Unique intersection point of two non-parallel supports, if any.
std::optional<Point> intersect(const Support& s, const Support& t);

bool contains(const Support& s, const Point& p);

/// Parameter of the crossing of segment [p, q) with a support, and the
/// crossing point. Parallel segments never count as crossings; callers detect
/// collinear overlap separately.
struct SegmentHit {
    Rat s;  // in [0, 1)
    Rat t;  // parameter along the support
    Point point;
};
std::optional<SegmentHit> segment_hit(const Point& p, const Point& q, const Support& w);

/// Segment [p, q] lies on the support's line.
bool collinear(const Point& p, const Point& q, const Support& w);

}  // namespace tvx
