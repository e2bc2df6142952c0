#include "support.hpp"

#include "zpstab/counterexample.hpp"
#include "zpstab/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace zpstab;

namespace {

// Gift wrapping, independent of the library's hull code.
std::set<std::size_t> jarvis(const std::vector<Point>& pts) {
    std::size_t start = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].x < pts[start].x || (pts[i].x == pts[start].x && pts[i].y < pts[start].y)) start = i;
    std::set<std::size_t> hull;
    std::size_t p = start;
    do {
        hull.insert(p);
        std::size_t q = (p + 1) % pts.size();
        for (std::size_t r = 0; r < pts.size(); ++r)
            if (cross(pts[p], pts[q], pts[r]) < 0) q = r;
        p = q;
    } while (p != start);
    return hull;
}

bool sees_both(const VisibilityMatrix& v, std::size_t z, std::size_t x, std::size_t y, Visibility kind) {
    auto ok = [&](Visibility c) { return c == kind || c == Visibility::Boundary; };
    return ok(v.at(z, x)) && ok(v.at(z, y));
}

// Triangular-chain test written from the definition.
bool triangular_by_definition(const Polygon& p, const VisibilityMatrix& v, std::size_t x, std::size_t y) {
    const auto chain = chain_vertices(x, y, p.size());
    std::vector<Point> pts;
    for (auto c : chain) pts.push_back(p[c]);
    const auto hull = jarvis(pts);
    if (hull.size() != 3 || !hull.count(0) || !hull.count(pts.size() - 1)) return false;
    bool zi = false, ze = false;
    for (std::size_t z = 0; z < p.size(); ++z) {
        if (z == x || z == y) continue;
        if (v.at(z, x) == Visibility::Boundary && v.at(z, y) == Visibility::Boundary) continue;
        zi = zi || sees_both(v, z, x, y, Visibility::Internal);
        ze = ze || sees_both(v, z, x, y, Visibility::External);
    }
    return zi && ze;
}

}  // namespace

TEST_SUITE("polygon") {

TEST_CASE("load_polygon normalizes orientation") {
    const auto p = load_polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(p.was_reversed());
    CHECK(doubled_area(p.vertices()) > 0);
    CHECK(p[0] == Point{0, 0});
    CHECK(p[1] == Point{1, 0});
    CHECK_FALSE(load_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}).was_reversed());
}

TEST_CASE("load_polygon rejects invalid input") {
    auto code = [](std::vector<Point> pts) {
        try {
            load_polygon(std::move(pts));
        } catch (const Error& e) {
            return e.code();
        }
        FAIL("accepted");
        return ErrorCode::Parse;
    };
    CHECK(code({{0, 0}, {1, 0}, {2, 0}, {1, 1}}) == ErrorCode::CollinearTriple);
    CHECK(code({{0, 0}, {2, 2}, {2, 0}, {0, 2}}) == ErrorCode::NotSimple);
    CHECK(code({{0, 0}, {1, 0}}) == ErrorCode::TooFewVertices);
    CHECK(code({{0, 0}, {kMaxCoord + 1, 0}, {0, 1}}) == ErrorCode::CoordinateRange);
    // 0, 3 and 2 are collinear though 0 and 3 are not adjacent.
    CHECK(code({{0, 0}, {6, 0}, {6, 6}, {3, 3}, {0, 6}}) == ErrorCode::CollinearTriple);
}

TEST_CASE("load_polygon_decimal is exact") {
    const auto p = load_polygon_decimal({{"0", "0"}, {"1.5", "0"}, {"0.25", "1"}});
    CHECK(p.scale_exponent() == 2);
    CHECK(p[1] == Point{150, 0});
    CHECK(p[2] == Point{25, 100});
    CHECK_THROWS_AS(load_polygon_decimal({{"0", "0"}, {"1e3", "0"}, {"0", "1"}}), Error);
}

TEST_CASE("vertex_flags examples") {
    const auto pent = vertex_flags(support::pentagon());
    CHECK(std::all_of(pent.convex.begin(), pent.convex.end(), [](bool b) { return b; }));
    CHECK(std::all_of(pent.on_hull.begin(), pent.on_hull.end(), [](bool b) { return b; }));
    const auto dent = vertex_flags(support::dented_square());
    CHECK_FALSE(dent.convex[3]);
    CHECK_FALSE(dent.on_hull[3]);
    for (std::size_t v : {0, 1, 2, 4}) CHECK(dent.on_hull[v]);
}

TEST_CASE("vertex_flags invariants") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto p = generate_random_polygon(4 + seed % 20, seed);
        const auto f = vertex_flags(p);
        std::size_t convex = 0;
        for (std::size_t v = 0; v < p.size(); ++v) {
            if (f.on_hull[v]) CHECK(f.convex[v]);
            convex += f.convex[v];
        }
        CHECK(convex >= 3);
        // Hull membership cross-checked by gift wrapping.
        const auto hull = jarvis({p.vertices().begin(), p.vertices().end()});
        for (std::size_t v = 0; v < p.size(); ++v) CHECK(f.on_hull[v] == (hull.count(v) == 1));
    }
}

TEST_CASE("chain_vertices") {
    CHECK(chain_vertices(0, 3, 6) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(chain_vertices(3, 0, 6) == std::vector<std::size_t>{3, 4, 5, 0});
    CHECK(chain_vertices(0, 8, 12).size() == 9);
    for (std::size_t n = 3; n < 15; ++n)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (x != y) {
                    CHECK(chain_length(x, y, n) + chain_length(y, x, n) == n + 2);
                    CHECK(chain_vertices(x, y, n).size() == chain_length(x, y, n));
                }
}

TEST_CASE("visibility_oracle examples") {
    const auto pent = support::pentagon();
    const auto vp = visibility_oracle(pent);
    for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t y = x + 1; y < 5; ++y)
            CHECK((vp.at(x, y) == Visibility::Internal || vp.at(x, y) == Visibility::Boundary));

    // The dented square's corner diagonals cross the dent edges.
    const auto d = support::dented_square();
    REQUIRE(segments_properly_cross(d[0], d[2], d[3], d[4]));
    REQUIRE(segments_properly_cross(d[1], d[4], d[2], d[3]));
    const auto vd = visibility_oracle(d);
    CHECK(vd.at(0, 2) == Visibility::NotVisible);
    CHECK(vd.at(1, 4) == Visibility::NotVisible);
    CHECK(vd.at(2, 4) == Visibility::External);
    CHECK(vd.at(0, 3) == Visibility::Internal);

    const auto ce = reconstruct_counterexample();
    CHECK(visibility_oracle(ce.a).at(0, 8) == Visibility::Internal);
    CHECK(visibility_oracle(ce.b).at(0, 8) == Visibility::External);
}

TEST_CASE("visibility_oracle invariants") {
    for (std::uint64_t seed = 100; seed < 300; ++seed) {
        const auto p = generate_random_polygon(4 + seed % 16, seed);
        const std::size_t n = p.size();
        const auto v = visibility_oracle(p);
        const auto f = vertex_flags(p);
        std::size_t boundary = 0, external = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                CHECK(v.at(x, y) == v.at(y, x));
                if (x < y && v.at(x, y) == Visibility::Boundary) {
                    ++boundary;
                    CHECK(p.adjacent(x, y));
                }
                external += v.at(x, y) == Visibility::External;
            }
        CHECK(boundary == n);
        const bool convex = std::all_of(f.convex.begin(), f.convex.end(), [](bool b) { return b; });
        // No E-edge and no blocked pair exactly when there is no reflex vertex.
        std::size_t blocked = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y) blocked += v.at(x, y) == Visibility::NotVisible;
        CHECK(convex == (external == 0 && blocked == 0));
    }
    CHECK(visibility_oracle(support::convex_ngon(9)).at(0, 4) == Visibility::Internal);
}

TEST_CASE("is_triangular_chain examples") {
    const auto ce = reconstruct_counterexample();
    const auto w = is_triangular_chain(ce.a, 0, 8);
    REQUIRE(w.has_value());
    CHECK(w->length == 9);
    CHECK(w->z_internal == 10);
    CHECK((w->z_external == 9 || w->z_external == 11));
    CHECK_FALSE(is_nontriangular(ce.a, 8));

    const auto hex = support::convex_ngon(6);
    for (std::size_t x = 0; x < 6; ++x) CHECK_FALSE(is_triangular_chain(hex, x, (x + 2) % 6));
    CHECK(is_nontriangular(support::convex_ngon(12), 8));
}

TEST_CASE("nontriangular generator, checked chain by chain") {
    const auto p = generate_random_polygon(40, 5, PolygonStyle::Nontriangular);
    const auto v = visibility_oracle(p);
    const std::size_t n = p.size();
    CHECK(is_nontriangular(p, v, 8));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y || chain_length(x, y, n) < 3) continue;
            const bool lib = is_triangular_chain(p, v, x, y).has_value();
            CHECK(lib == triangular_by_definition(p, v, x, y));
            if (chain_length(x, y, n) >= 8) CHECK_FALSE(lib);
        }
}

TEST_CASE("136-vertex nontriangular polygon") {
    const auto p = generate_random_polygon(136, 1, PolygonStyle::Nontriangular);
    CHECK(p.size() == 136);
    CHECK(is_nontriangular(p, 8));
}

TEST_CASE("triangular_chains agrees with the definition on small polygons") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto p = generate_random_polygon(6 + seed % 8, seed, PolygonStyle::Generic, 30);
        const auto v = visibility_oracle(p);
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = 0; y < p.size(); ++y)
                if (x != y && chain_length(x, y, p.size()) >= 3)
                    CHECK(is_triangular_chain(p, v, x, y).has_value() == triangular_by_definition(p, v, x, y));
    }
}

}  // TEST_SUITE
