#include "zpstab/geom.hpp"

#include <algorithm>

namespace zpstab {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::TooFewVertices: return "TooFewVertices";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::CollinearTriple: return "CollinearTriple";
        case ErrorCode::CoordinateRange: return "CoordinateRange";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::InconsistentInput: return "InconsistentInput";
        case ErrorCode::NoWitnessFound: return "NoWitnessFound";
        case ErrorCode::GenerationFailed: return "GenerationFailed";
        case ErrorCode::SearchFailed: return "SearchFailed";
        case ErrorCode::DegenerateTangency: return "DegenerateTangency";
        case ErrorCode::Unclassifiable: return "Unclassifiable";
    }
    return "Unknown";
}

bool segments_properly_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    const auto a = static_cast<int>(orient(p1, p2, q1));
    const auto b = static_cast<int>(orient(p1, p2, q2));
    const auto c = static_cast<int>(orient(q1, q2, p1));
    const auto d = static_cast<int>(orient(q1, q2, p2));
    return a * b < 0 && c * d < 0;
}

std::optional<Component> ray_line_component(const Point& x, const Point& y, const Point& e1,
                                            const Point& e2) {
    const auto s1 = static_cast<int>(orient(x, y, e1));
    const auto s2 = static_cast<int>(orient(x, y, e2));
    if (s1 * s2 >= 0) return std::nullopt;

    // The edge straddles the line; locate the crossing by comparing the
    // signed distances of x and y from the edge's supporting line.
    const __int128 dx = cross(e1, e2, x);
    const __int128 dy = cross(e1, e2, y);
    if (dx == 0 || dy == 0) {
        throw Error(ErrorCode::DegenerateInput,
                    "ray_line_component: pair vertex collinear with edge endpoints");
    }
    if ((dx > 0) != (dy > 0)) return Component::Body;
    const __int128 ax = dx < 0 ? -dx : dx;
    const __int128 ay = dy < 0 ? -dy : dy;
    // Same side: the crossing lies beyond whichever of x, y is nearer the edge line.
    return ax < ay ? Component::Tail : Component::Head;
}

namespace {

bool on_segment_scaled(__int128 ax, __int128 ay, __int128 bx, __int128 by, __int128 px,
                       __int128 py) {
    const __int128 c = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
    if (c != 0) return false;
    return std::min(ax, bx) <= px && px <= std::max(ax, bx) && std::min(ay, by) <= py &&
           py <= std::max(ay, by);
}

}  // namespace

Location point_in_polygon_scaled(Coord px, Coord py, Coord den, std::span<const Point> ring) {
    const std::size_t n = ring.size();
    bool inside = false;
    const __int128 qx = px;
    const __int128 qy = py;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const __int128 ax = static_cast<__int128>(ring[j].x) * den;
        const __int128 ay = static_cast<__int128>(ring[j].y) * den;
        const __int128 bx = static_cast<__int128>(ring[i].x) * den;
        const __int128 by = static_cast<__int128>(ring[i].y) * den;
        if (on_segment_scaled(ax, ay, bx, by, qx, qy)) return Location::OnBoundary;
        // Half-open rule: an edge counts if exactly one endpoint is strictly above.
        if ((ay > qy) != (by > qy)) {
            // Crossing x > qx  <=>  q is left of the upward-directed edge.
            const __int128 c = (bx - ax) * (qy - ay) - (by - ay) * (qx - ax);
            if ((c > 0) == (by > ay)) inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

Location point_in_polygon(const Point& p, std::span<const Point> ring) {
    return point_in_polygon_scaled(p.x, p.y, 1, ring);
}

}  // namespace zpstab
