#include "zpstab/oracle.hpp"

#include <algorithm>
#include <random>

namespace zpstab {

namespace {

using Wide = __int128;

Wide det(Wide ax, Wide ay, Wide bx, Wide by) { return ax * by - ay * bx; }

/// Sign of num/den compared with `v` (an integer), den != 0.
int compare_fraction(Wide num, Wide den, Wide v) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Wide lhs = num;
    const Wide rhs = v * den;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace

StabTriple brute_stab_triple(const Polygon& poly, std::size_t x, std::size_t y) {
    StabTriple s;
    const Point& p = poly[x];
    const Point& q = poly[y];
    const Wide dx = Wide{q.x} - p.x;
    const Wide dy = Wide{q.y} - p.y;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[poly.next(i)];
        const Wide fx = Wide{b.x} - a.x;
        const Wide fy = Wide{b.y} - a.y;
        // Solve p + t d = a + s f.
        const Wide den = det(dx, dy, fx, fy);
        if (den == 0) continue;
        const Wide wx = Wide{a.x} - p.x;
        const Wide wy = Wide{a.y} - p.y;
        const Wide t_num = det(wx, wy, fx, fy);
        const Wide s_num = det(wx, wy, dx, dy);
        // Keep only crossings strictly inside the edge.
        if (compare_fraction(s_num, den, 0) <= 0 || compare_fraction(s_num, den, 1) >= 0) continue;
        const int t0 = compare_fraction(t_num, den, 0);
        const int t1 = compare_fraction(t_num, den, 1);
        if (t0 < 0) {
            ++s.tail;
        } else if (t1 > 0) {
            ++s.head;
        } else if (t0 > 0 && t1 < 0) {
            ++s.body;
        }
        // t == 0 or t == 1 would put x or y inside an edge: excluded by general position.
    }
    return s;
}

StabTable brute_stab_table(const Polygon& poly) {
    StabTable t(poly.size());
    for (std::size_t x = 0; x < poly.size(); ++x)
        for (std::size_t y = 0; y < poly.size(); ++y)
            if (x != y) t.at(x, y) = brute_stab_triple(poly, x, y);
    return t;
}

namespace {

std::vector<Point> random_general_position_points(std::size_t n, Coord range, std::mt19937_64& rng) {
    std::uniform_int_distribution<Coord> coord(0, range - 1);
    std::vector<Point> pts;
    pts.reserve(n);
    std::size_t attempts = 0;
    while (pts.size() < n) {
        if (++attempts > 1000 * n + 1000)
            throw Error(ErrorCode::GenerationFailed, "cannot place points in general position");
        const Point c{coord(rng), coord(rng)};
        bool ok = true;
        for (std::size_t i = 0; i < pts.size() && ok; ++i) {
            if (pts[i] == c) ok = false;
            for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
                if (orient(pts[i], pts[j], c) == Orientation::Collinear) ok = false;
        }
        if (ok) pts.push_back(c);
    }
    return pts;
}

/// Repeated 2-opt: reverse the run between two crossing edges. Each move
/// strictly shortens the tour, so this terminates.
void untangle(std::vector<Point>& v) {
    const std::size_t n = v.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n && !changed; ++i)
            for (std::size_t j = i + 2; j < n && !changed; ++j) {
                if (i == 0 && j == n - 1) continue;
                if (segments_properly_cross(v[i], v[i + 1], v[j], v[(j + 1) % n])) {
                    std::reverse(v.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                 v.begin() + static_cast<std::ptrdiff_t>(j + 1));
                    changed = true;
                }
            }
    }
}

}  // namespace

Polygon generate_random_polygon(std::size_t n, std::uint64_t seed, PolygonStyle style,
                                Coord coord_range) {
    if (n < 3) throw Error(ErrorCode::TooFewVertices, "n must be at least 3");
    std::mt19937_64 rng(seed);
    constexpr int kRetries = 400;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        auto pts = random_general_position_points(n, coord_range, rng);
        untangle(pts);
        Polygon poly = load_polygon(std::move(pts));
        if (style == PolygonStyle::Generic || is_nontriangular(poly, 8)) return poly;
    }
    throw Error(ErrorCode::GenerationFailed,
                "no (>=8)-nontriangular polygon with n=" + std::to_string(n) + " after " +
                    std::to_string(kRetries) + " attempts");
}

Polygon generate_random_polygon(std::size_t n, std::uint64_t seed, PolygonStyle style) {
    return generate_random_polygon(n, seed, style, static_cast<Coord>(std::max<std::size_t>(64, 40 * n)));
}

}  // namespace zpstab
