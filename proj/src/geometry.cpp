/*
 * Copyright 2026 The tvx Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#include "tvx/geometry.hpp"

namespace tvx {

std::optional<Point> intersect(const Support& s, const Support& t) {
    long det = static_cast<long>(s.dir.a) * t.dir.b - static_cast<long>(s.dir.b) * t.dir.a;
    if (det == 0) return std::nullopt;
    Rat dx = t.base.x - s.base.x, dy = t.base.y - s.base.y;
    Rat ps = cross(dx, dy, t.dir) / det;  // parameter along s
    if (s.ray && sgn(ps) < 0) return std::nullopt;
    Rat pt = cross(dx, dy, s.dir) / det;  // parameter along t
    if (t.ray && sgn(pt) < 0) return std::nullopt;
    return Point{s.base.x + ps * s.dir.a, s.base.y + ps * s.dir.b};
}

bool contains(const Support& s, const Point& p) {
    Rat dx = p.x - s.base.x, dy = p.y - s.base.y;
    if (sgn(cross(dx, dy, s.dir)) != 0) return false;
    if (!s.ray) return true;
    return sgn(dx * s.dir.a + dy * s.dir.b) >= 0;
}

std::optional<SegmentHit> segment_hit(const Point& p, const Point& q, const Support& w) {
    Rat ex = q.x - p.x, ey = q.y - p.y;
    // p + s e = base + t d
    Rat det = ex * w.dir.b - ey * w.dir.a;
    if (sgn(det) == 0) return std::nullopt;
    Rat dx = w.base.x - p.x, dy = w.base.y - p.y;
    Rat s = cross(dx, dy, w.dir) / det;
    if (sgn(s) < 0 || s >= 1) return std::nullopt;
    Rat t = (dx * ey - dy * ex) / det;
    if (w.ray && sgn(t) < 0) return std::nullopt;
    return SegmentHit{s, t, Point{p.x + s * ex, p.y + s * ey}};
}

bool collinear(const Point& p, const Point& q, const Support& w) {
    Rat ex = q.x - p.x, ey = q.y - p.y;
    if (sgn(ex * w.dir.b - ey * w.dir.a) != 0) return false;
    return sgn(cross(p.x - w.base.x, p.y - w.base.y, w.dir)) == 0;
}

}  // namespace tvx
