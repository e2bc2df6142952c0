#include "zpstab/geom.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace zpstab;

namespace {

// Winding number by signed upward/downward crossings; points on the
// boundary are reported separately.
enum class Wn { In, Out, On };

Wn winding(const Point& p, const std::vector<Point>& ring) {
    int w = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % ring.size()];
        const auto c = cross(a, b, p);
        if (c == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
            std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
            return Wn::On;
        if (a.y <= p.y) {
            if (b.y > p.y && c > 0) ++w;
        } else if (b.y <= p.y && c < 0) {
            --w;
        }
    }
    return w ? Wn::In : Wn::Out;
}

// Random star-shaped ring around the origin, angles sorted.
std::vector<Point> random_ring(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nd(3, 12);
    std::uniform_real_distribution<double> ad(0, 2 * M_PI), rd(2, 20);
    std::vector<double> angles(nd(rng));
    for (auto& a : angles) a = ad(rng);
    std::sort(angles.begin(), angles.end());
    std::vector<Point> ring;
    for (double a : angles) {
        const double r = rd(rng);
        ring.push_back({std::llround(r * std::cos(a)), std::llround(r * std::sin(a))});
    }
    return ring;
}

}  // namespace

TEST_SUITE("geom") {

TEST_CASE("orient") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == Orientation::Left);
    CHECK(orient({0, 0}, {1, 0}, {0, -1}) == Orientation::Right);
    CHECK(orient({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
    // Exact near the coordinate limit.
    const Coord m = kMaxCoord;
    CHECK(orient({-m, -m}, {m, m}, {m - 1, m}) == Orientation::Left);
    CHECK(orient({-m, -m}, {m, m}, {m, m - 1}) == Orientation::Right);
}

TEST_CASE("orient is cyclic and flips under swap") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Coord> d(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
        const Point a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
        CHECK(orient(a, b, c) == orient(b, c, a));
        CHECK(static_cast<int>(orient(a, b, c)) == -static_cast<int>(orient(b, a, c)));
    }
}

TEST_CASE("segments_properly_cross") {
    CHECK(segments_properly_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK_FALSE(segments_properly_cross({0, 0}, {1, 1}, {2, 0}, {3, 1}));
    // Shared endpoint is not a proper crossing.
    CHECK_FALSE(segments_properly_cross({0, 0}, {2, 2}, {2, 2}, {4, 0}));
    // T-junction: an endpoint on the other segment.
    CHECK_FALSE(segments_properly_cross({0, 0}, {2, 0}, {1, 0}, {1, 1}));
}

TEST_CASE("segments_properly_cross symmetry") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Coord> d(-20, 20);
    for (int i = 0; i < 5000; ++i) {
        const Point a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)}, e{d(rng), d(rng)};
        const bool r = segments_properly_cross(a, b, c, e);
        CHECK(r == segments_properly_cross(c, e, a, b));
        CHECK(r == segments_properly_cross(b, a, c, e));
        CHECK(r == segments_properly_cross(a, b, e, c));
    }
}

TEST_CASE("ray_line_component") {
    CHECK(ray_line_component({0, 0}, {2, 0}, {1, -1}, {1, 1}) == Component::Body);
    CHECK(ray_line_component({0, 0}, {2, 0}, {3, -1}, {3, 1}) == Component::Head);
    CHECK(ray_line_component({0, 0}, {2, 0}, {-1, -1}, {-1, 1}) == Component::Tail);
    CHECK_FALSE(ray_line_component({0, 0}, {2, 0}, {3, 1}, {4, 2}).has_value());
}

TEST_CASE("ray_line_component rejects collinear triples") {
    CHECK_THROWS_AS(ray_line_component({0, 0}, {2, 0}, {0, -1}, {0, 1}), Error);
    CHECK_THROWS_AS(ray_line_component({0, 0}, {2, 0}, {2, -1}, {2, 1}), Error);
    CHECK_THROWS_AS(ray_line_component({0, 0}, {2, 0}, {-1, -1}, {1, 1}), Error);
}

TEST_CASE("ray_line_component swaps Tail and Head under pair reversal") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Coord> d(-50, 50);
    int checked = 0;
    while (checked < 3000) {
        const Point x{d(rng), d(rng)}, y{d(rng), d(rng)}, e1{d(rng), d(rng)}, e2{d(rng), d(rng)};
        if (x == y || orient(e1, e2, x) == Orientation::Collinear ||
            orient(e1, e2, y) == Orientation::Collinear || orient(x, y, e1) == Orientation::Collinear ||
            orient(x, y, e2) == Orientation::Collinear)
            continue;
        ++checked;
        const auto f = ray_line_component(x, y, e1, e2);
        const auto r = ray_line_component(y, x, e1, e2);
        REQUIRE(f.has_value() == r.has_value());
        if (!f) continue;
        if (*f == Component::Tail) CHECK(*r == Component::Head);
        if (*f == Component::Head) CHECK(*r == Component::Tail);
        if (*f == Component::Body) CHECK(*r == Component::Body);
    }
}

TEST_CASE("point_in_polygon") {
    const std::vector<Point> sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(point_in_polygon({1, 1}, sq) == Location::Inside);
    CHECK(point_in_polygon({5, 5}, sq) == Location::Outside);
    CHECK(point_in_polygon({1, 0}, sq) == Location::OnBoundary);
    CHECK(point_in_polygon({2, 2}, sq) == Location::OnBoundary);
    // Ray through a vertex.
    const std::vector<Point> diamond{{0, -2}, {2, 0}, {0, 2}, {-2, 0}};
    CHECK(point_in_polygon({-1, 0}, diamond) == Location::Inside);
    CHECK(point_in_polygon({-3, 0}, diamond) == Location::Outside);
    CHECK(point_in_polygon({3, 0}, diamond) == Location::Outside);
}

TEST_CASE("point_in_polygon agrees with winding number") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<Coord> d(-22, 22);
    for (int i = 0; i < 1000; ++i) {
        const auto ring = random_ring(rng);
        const Point p{d(rng), d(rng)};
        const auto loc = point_in_polygon(p, ring);
        const auto w = winding(p, ring);
        CHECK((loc == Location::Inside) == (w == Wn::In));
        CHECK((loc == Location::Outside) == (w == Wn::Out));
        CHECK((loc == Location::OnBoundary) == (w == Wn::On));
    }
}

TEST_CASE("point_in_polygon_scaled matches unscaled on integer points") {
    const std::vector<Point> sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(point_in_polygon_scaled(1, 1, 2, sq) == Location::Inside);  // (0.5, 0.5)
    CHECK(point_in_polygon_scaled(5, 1, 2, sq) == Location::Outside);
    CHECK(point_in_polygon_scaled(4, 1, 2, sq) == Location::OnBoundary);
}

}  // TEST_SUITE
