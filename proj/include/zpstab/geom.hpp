#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace zpstab {

/// Exact integer coordinate. Loaders reject magnitudes above kMaxCoord so
/// every determinant below fits in a 128-bit intermediate.
using Coord = std::int64_t;
inline constexpr Coord kMaxCoord = Coord{1} << 40;

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

enum class Component { Tail, Body, Head };

enum class Location { Inside, Outside, OnBoundary };

enum class ErrorCode {
    TooFewVertices,
    NotSimple,
    CollinearTriple,
    CoordinateRange,
    DegenerateInput,
    Parse,
    InconsistentInput,
    NoWitnessFound,
    GenerationFailed,
    SearchFailed,
    DegenerateTangency,
    Unclassifiable,
};

const char* to_string(ErrorCode code);

/// Every domain failure in the library is reported through this type; the
/// code names the violated invariant, the message carries the detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Twice the signed area of triangle abc.
constexpr __int128 cross(const Point& a, const Point& b, const Point& c) {
    return static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
           static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

constexpr Orientation orient(const Point& a, const Point& b, const Point& c) {
    const __int128 d = cross(a, b, c);
    return d > 0 ? Orientation::Left : (d < 0 ? Orientation::Right : Orientation::Collinear);
}

/// True iff the open segments p1p2 and q1q2 share exactly one point: each
/// segment's endpoints lie strictly on opposite sides of the other's line.
bool segments_properly_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

/// Which open component of line(x, y) minus {x, y} the edge e1e2 crosses.
/// The line is parameterized x + t(y - x): Tail is t < 0, Body 0 < t < 1,
/// Head t > 1. Returns nullopt if the edge does not properly cross the line.
/// Throws DegenerateInput if the edge straddles the line and x or y is
/// collinear with its endpoints; a non-straddling edge is simply none.
std::optional<Component> ray_line_component(const Point& x, const Point& y, const Point& e1,
                                            const Point& e2);

/// Ray-crossing parity test with exact handling of vertices on the ray
/// (half-open edge rule) and an explicit on-boundary check.
Location point_in_polygon(const Point& p, std::span<const Point> ring);

/// Same test for a point given with a common denominator: (px/den, py/den).
/// Used for segment midpoints so the test stays exact.
Location point_in_polygon_scaled(Coord px, Coord py, Coord den, std::span<const Point> ring);

}  // namespace zpstab
