#include "scdraw/geometry.hpp"

#include "scdraw/errors.hpp"

namespace scdraw {

namespace {

int sign(Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Wide cross(const Point& p, const Point& q, const Point& r) {
    return Wide(q.x - p.x) * Wide(r.y - p.y) - Wide(q.y - p.y) * Wide(r.x - p.x);
}

}  // namespace

int orientation(const Point& p, const Point& q, const Point& r) {
    return sign(cross(p, q, r));
}

bool point_below_segment(const Point& p1, const Point& p2, const Point& p) {
    if (!(p1.x < p.x && p.x < p2.x))
        throw error(errc::domain_error, "point x must lie strictly between segment endpoints");
    return orientation(p1, p2, p) < 0;
}

bool point_above_segment(const Point& p1, const Point& p2, const Point& p) {
    if (!(p1.x < p.x && p.x < p2.x))
        throw error(errc::domain_error, "point x must lie strictly between segment endpoints");
    return orientation(p1, p2, p) > 0;
}

bool point_in_open_triangle(const Point& a, const Point& b, const Point& c,
                            const Point& p) {
    int o1 = orientation(a, b, p);
    int o2 = orientation(b, c, p);
    int o3 = orientation(c, a, p);
    return (o1 > 0 && o2 > 0 && o3 > 0) || (o1 < 0 && o2 < 0 && o3 < 0);
}

bool point_on_segment(const Point& a, const Point& b, const Point& p) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
        ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0)))
        return true;
    if (o1 == 0 && point_on_segment(a, b, c)) return true;
    if (o2 == 0 && point_on_segment(a, b, d)) return true;
    if (o3 == 0 && point_on_segment(c, d, a)) return true;
    if (o4 == 0 && point_on_segment(c, d, b)) return true;
    return false;
}

}  // namespace scdraw
