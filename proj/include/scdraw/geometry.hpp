#pragma once

#include <cstdint>

namespace scdraw {

// Grid coordinates are exact 64-bit integers. Heights reach ~5*n^3, so
// predicates cross-multiply in 128 bits; that is exact for n well beyond 1e5.
using Coord = long long;
using Wide = __int128;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Sign of the cross product (q - p) x (r - p): +1 left turn, -1 right turn,
// 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

// Strict below/above tests for a point p with p1.x < p.x < p2.x against the
// segment p1-p2. A collinear point is neither below nor above. Throws
// domain_error if p.x is outside the open interval.
bool point_below_segment(const Point& p1, const Point& p2, const Point& p);
bool point_above_segment(const Point& p1, const Point& p2, const Point& p);

// Strict interior of the triangle (a, b, c); degenerate triangles are empty.
bool point_in_open_triangle(const Point& a, const Point& b, const Point& c,
                            const Point& p);

// True if p lies on the closed segment a-b.
bool point_on_segment(const Point& a, const Point& b, const Point& p);

// True if segments a-b and c-d share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d);

}  // namespace scdraw
