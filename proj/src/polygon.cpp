#include "zpstab/polygon.hpp"

#include <algorithm>
#include <numeric>

namespace zpstab {

namespace {

std::string fmt_point(const Point& p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

void check_general_position(std::span<const Point> v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (orient(v[i], v[j], v[k]) == Orientation::Collinear)
                    throw Error(ErrorCode::CollinearTriple,
                                "vertices " + std::to_string(i) + ", " + std::to_string(j) +
                                    ", " + std::to_string(k) + " are collinear " +
                                    fmt_point(v[i]) + " " + fmt_point(v[j]) + " " +
                                    fmt_point(v[k]));
}

void check_simple(std::span<const Point> v) {
    // Under general position two edges can only meet by proper crossing.
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t i2 = (i + 1) % n;
        for (std::size_t j = i + 2; j < n; ++j) {
            const std::size_t j2 = (j + 1) % n;
            if (j2 == i) continue;
            if (segments_properly_cross(v[i], v[i2], v[j], v[j2]))
                throw Error(ErrorCode::NotSimple, "edges (" + std::to_string(i) + ", " +
                                                      std::to_string(i2) + ") and (" +
                                                      std::to_string(j) + ", " +
                                                      std::to_string(j2) + ") cross");
        }
    }
}

struct Decimal {
    __int128 mantissa = 0;
    int frac_digits = 0;
};

Decimal parse_decimal(const std::string& s) {
    Decimal d;
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    bool seen_digit = false;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '.' && !seen_dot) {
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') throw Error(ErrorCode::Parse, "not a decimal number: '" + s + "'");
        seen_digit = true;
        d.mantissa = d.mantissa * 10 + (c - '0');
        if (seen_dot) ++d.frac_digits;
        if (d.mantissa > (static_cast<__int128>(1) << 100))
            throw Error(ErrorCode::CoordinateRange, "coordinate too large: '" + s + "'");
    }
    if (!seen_digit) throw Error(ErrorCode::Parse, "not a decimal number: '" + s + "'");
    if (neg) d.mantissa = -d.mantissa;
    return d;
}

}  // namespace

__int128 doubled_area(std::span<const Point> ring) {
    __int128 a = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % n];
        a += static_cast<__int128>(p.x) * q.y - static_cast<__int128>(q.x) * p.y;
    }
    return a;
}

Polygon load_polygon(std::vector<Point> raw) {
    if (raw.size() < 3)
        throw Error(ErrorCode::TooFewVertices,
                    "polygon needs at least 3 vertices, got " + std::to_string(raw.size()));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const Point& p = raw[i];
        if (p.x > kMaxCoord || p.x < -kMaxCoord || p.y > kMaxCoord || p.y < -kMaxCoord)
            throw Error(ErrorCode::CoordinateRange,
                        "vertex " + std::to_string(i) + " exceeds |coordinate| <= 2^40");
    }
    check_general_position(raw);
    check_simple(raw);

    Polygon poly;
    if (doubled_area(raw) < 0) {
        std::reverse(raw.begin() + 1, raw.end());
        poly.reversed_ = true;
    }
    poly.vertices_ = std::move(raw);
    return poly;
}

Polygon load_polygon_decimal(const std::vector<std::pair<std::string, std::string>>& raw) {
    std::vector<Decimal> xs;
    std::vector<Decimal> ys;
    int digits = 0;
    for (const auto& [sx, sy] : raw) {
        xs.push_back(parse_decimal(sx));
        ys.push_back(parse_decimal(sy));
        digits = std::max({digits, xs.back().frac_digits, ys.back().frac_digits});
    }
    if (digits > 12) throw Error(ErrorCode::CoordinateRange, "more than 12 decimal places");
    auto scale = [digits](const Decimal& d) {
        __int128 v = d.mantissa;
        for (int k = d.frac_digits; k < digits; ++k) v *= 10;
        if (v > kMaxCoord || v < -kMaxCoord)
            throw Error(ErrorCode::CoordinateRange, "scaled coordinate exceeds 2^40");
        return static_cast<Coord>(v);
    };
    std::vector<Point> pts;
    pts.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) pts.push_back({scale(xs[i]), scale(ys[i])});
    Polygon poly = load_polygon(std::move(pts));
    poly.scale_exponent_ = digits;
    return poly;
}

std::vector<std::size_t> convex_hull_indices(std::span<const Point> pts) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a].y != pts[b].y ? pts[a].y < pts[b].y : pts[a].x < pts[b].x;
    });
    if (idx.size() < 3) return idx;

    // Andrew's monotone chain on (y, x) order.
    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i : idx) {
        while (k >= 2 && orient(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) != Orientation::Left)
            --k;
        hull[k++] = i;
    }
    for (std::size_t t = k + 1, j = idx.size() - 1; j-- > 0;) {
        const std::size_t i = idx[j];
        while (k >= t && orient(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) != Orientation::Left)
            --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

VertexFlags vertex_flags(const Polygon& poly) {
    const std::size_t n = poly.size();
    VertexFlags f{std::vector<bool>(n), std::vector<bool>(n, false)};
    for (std::size_t v = 0; v < n; ++v)
        f.convex[v] = orient(poly[poly.prev(v)], poly[v], poly[poly.next(v)]) == Orientation::Left;
    for (std::size_t h : convex_hull_indices(poly.vertices())) f.on_hull[h] = true;
    return f;
}

std::vector<VertexPair> hull_edges(const Polygon& poly) {
    const auto h = convex_hull_indices(poly.vertices());
    std::vector<VertexPair> out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const std::size_t a = h[i];
        const std::size_t b = h[(i + 1) % h.size()];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexPair> polygon_edges(const Polygon& poly) {
    std::vector<VertexPair> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const std::size_t j = poly.next(i);
        out.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> chain_vertices(std::size_t x, std::size_t y, std::size_t n) {
    std::vector<std::size_t> out;
    out.reserve(chain_length(x, y, n));
    for (std::size_t v = x;; v = (v + 1) % n) {
        out.push_back(v);
        if (v == y) break;
    }
    return out;
}

const char* to_string(Visibility v) {
    switch (v) {
        case Visibility::Internal: return "Internal";
        case Visibility::External: return "External";
        case Visibility::Boundary: return "Boundary";
        case Visibility::NotVisible: return "NotVisible";
    }
    return "?";
}

Visibility classify_pair_geometric(const Polygon& poly, std::size_t x, std::size_t y) {
    if (poly.adjacent(x, y)) return Visibility::Boundary;
    const std::size_t n = poly.size();
    const Point& a = poly[x];
    const Point& b = poly[y];
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = poly.next(i);
        if (i == x || i == y || j == x || j == y) continue;
        if (segments_properly_cross(a, b, poly[i], poly[j])) return Visibility::NotVisible;
    }
    const Location mid = point_in_polygon_scaled(a.x + b.x, a.y + b.y, 2, poly.vertices());
    return mid == Location::Inside ? Visibility::Internal : Visibility::External;
}

VisibilityMatrix visibility_oracle(const Polygon& poly) {
    VisibilityMatrix m(poly.size());
    for (std::size_t x = 0; x < poly.size(); ++x)
        for (std::size_t y = x + 1; y < poly.size(); ++y)
            m.set(x, y, classify_pair_geometric(poly, x, y));
    return m;
}

namespace {

bool internal_like(Visibility v) { return v == Visibility::Internal || v == Visibility::Boundary; }
bool external_like(Visibility v) { return v == Visibility::External || v == Visibility::Boundary; }

}  // namespace

std::optional<TriangularWitness> is_triangular_chain(const Polygon& poly,
                                                     const VisibilityMatrix& vis, std::size_t x,
                                                     std::size_t y) {
    const std::size_t n = poly.size();
    if (x == y || chain_length(x, y, n) < 3) return std::nullopt;

    std::optional<std::size_t> zi;
    std::optional<std::size_t> ze;
    // Walk from y + 1 around to y - 1 so witnesses off the chain come first.
    // A vertex joined to x and y by two polygon edges sees neither through a
    // diagonal and is no witness.
    for (std::size_t k = 1; k < n && !(zi && ze); ++k) {
        const std::size_t z = (y + k) % n;
        if (z == x || (poly.adjacent(z, x) && poly.adjacent(z, y))) continue;
        if (!zi && internal_like(vis.at(z, x)) && internal_like(vis.at(z, y))) zi = z;
        if (!ze && external_like(vis.at(z, x)) && external_like(vis.at(z, y))) ze = z;
    }
    if (!zi || !ze) return std::nullopt;

    const auto chain = chain_vertices(x, y, n);
    std::vector<Point> pts;
    pts.reserve(chain.size());
    for (std::size_t v : chain) pts.push_back(poly[v]);
    const auto hull = convex_hull_indices(pts);
    if (hull.size() != 3) return std::nullopt;
    // x and y must be corners: the chain sits inside triangle x z y.
    const std::size_t last = chain.size() - 1;
    if (std::find(hull.begin(), hull.end(), 0) == hull.end() ||
        std::find(hull.begin(), hull.end(), last) == hull.end())
        return std::nullopt;

    TriangularWitness w;
    w.x = x;
    w.y = y;
    w.length = chain.size();
    w.z_internal = *zi;
    w.z_external = *ze;
    for (std::size_t h : hull) w.hull.push_back(chain[h]);
    std::sort(w.hull.begin(), w.hull.end());
    return w;
}

std::optional<TriangularWitness> is_triangular_chain(const Polygon& poly, std::size_t x,
                                                     std::size_t y) {
    return is_triangular_chain(poly, visibility_oracle(poly), x, y);
}

std::vector<TriangularWitness> triangular_chains(const Polygon& poly, const VisibilityMatrix& vis,
                                                 std::size_t k) {
    std::vector<TriangularWitness> out;
    const std::size_t n = poly.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && chain_length(x, y, n) >= k)
                if (auto w = is_triangular_chain(poly, vis, x, y)) out.push_back(std::move(*w));
    return out;
}

bool is_nontriangular(const Polygon& poly, const VisibilityMatrix& vis, std::size_t k) {
    const std::size_t n = poly.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && chain_length(x, y, n) >= k && is_triangular_chain(poly, vis, x, y))
                return false;
    return true;
}

bool is_nontriangular(const Polygon& poly, std::size_t k) {
    return is_nontriangular(poly, visibility_oracle(poly), k);
}

}  // namespace zpstab
