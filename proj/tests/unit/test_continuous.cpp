#include "zpstab/continuous.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <string>

using namespace zpstab;

namespace {

// Samples turning clockwise inside the dent window of the bean.
std::vector<std::size_t> concave_arc(const CurveSample& c) {
    const std::size_t m = c.size();
    std::vector<std::size_t> arc;
    for (std::size_t i = m / 8 + 1; i < 3 * m / 8; ++i) {
        const auto& a = c.points[i - 1];
        const auto& b = c.points[i];
        const auto& d = c.points[i + 1];
        if ((b.x - a.x) * (d.y - a.y) - (b.y - a.y) * (d.x - a.x) < 0) arc.push_back(i);
    }
    return arc;
}

std::string pattern(const DiscontinuityPattern& d) {
    return {letter(d.before), '/', letter(d.value), '/', letter(d.after)};
}

std::map<std::string, int> body_patterns(const CurveSample& c, const std::vector<std::size_t>& xs) {
    std::map<std::string, int> out;
    for (auto x : xs)
        for (const auto& d : zp_functions(c, x).discontinuities)
            if (d.function == ZPFunctionKind::Body) ++out[pattern(d)];
    return out;
}

}  // namespace

TEST_SUITE("continuous") {

TEST_CASE("curve validation") {
    CHECK_THROWS_AS(make_curve({{0, 0}, {1, 0}}), Error);
    // Figure eight.
    std::vector<CurvePoint> eight;
    for (int i = 0; i < 200; ++i) {
        const double t = 2 * M_PI * i / 200;
        eight.push_back({std::sin(t), std::sin(t) * std::cos(t)});
    }
    CHECK_THROWS_AS(make_curve(eight), Error);
    // Too coarse for the turning bound.
    CHECK_THROWS_AS(ellipse_curve(12), Error);
    CHECK_THROWS_AS(named_curve("blob", 100), Error);
    // Clockwise input is reoriented.
    std::vector<CurvePoint> cw;
    for (int i = 0; i < 100; ++i) cw.push_back({std::cos(-2 * M_PI * i / 100), std::sin(-2 * M_PI * i / 100)});
    const auto c = make_curve(cw);
    double area = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& p = c.points[i];
        const auto& q = c.points[(i + 1) % c.size()];
        area += p.x * q.y - p.y * q.x;
    }
    CHECK(area > 0);
}

TEST_CASE("curve JSON round trip") {
    const auto c = bean_curve(300);
    const auto d = curve_from_json(curve_to_json(c));
    REQUIRE(d.size() == c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(d.points[i].x == c.points[i].x);
        CHECK(d.points[i].y == c.points[i].y);
    }
    CHECK(curve_to_json(c).at("closed") == true);
}

TEST_CASE("ellipse: B is zero and H is even everywhere") {
    const auto c = ellipse_curve(2000);
    for (std::size_t x = 0; x < c.size(); x += 97) {
        const auto f = zp_functions(c, x);
        // One run, split only where it wraps past t = 1.
        REQUIRE(f.body.size() <= 2);
        for (const auto& piece : f.body) CHECK(piece.cls == ZP::Zero);
        for (const auto& piece : f.head) CHECK(piece.cls != ZP::Odd);
        for (const auto& d : f.discontinuities) CHECK(d.function != ZPFunctionKind::Body);
        // Cross-check a few entries against raw counts.
        for (std::size_t y = (x + 1) % c.size(); y != x; y = (y + 131) % c.size()) {
            const auto s = curve_stab(c, x, y);
            REQUIRE(s.has_value());
            CHECK(s->body == 0);
            CHECK(s->head % 2 == 0);
        }
    }
}

TEST_CASE("ellipse: every chord Internal") {
    const auto c = ellipse_curve(2000);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 300; ++k) {
        const std::size_t x = rng() % c.size(), y = rng() % c.size();
        if (x == y) continue;
        const auto r = classify_chord(c, x, y);
        CHECK(r.cls == ChordClass::Internal);
        CHECK(chord_midpoint_inside(c, x, y));
    }
}

TEST_CASE("bean: chord across the concavity mouth is External") {
    const auto c = bean_curve(2000);
    const double mid = 0.25;  // the dent is centred at angle pi/2
    const std::size_t x = sample_at(c, mid - 0.06), y = sample_at(c, mid + 0.06);
    REQUIRE(chord_visible(c, x, y));
    CHECK_FALSE(chord_midpoint_inside(c, x, y));
    CHECK(classify_chord(c, x, y).cls == ChordClass::External);
}

TEST_CASE("bean: classified chords agree with the midpoint oracle") {
    const auto c = bean_curve(2000);
    std::mt19937_64 rng(2);
    int visible = 0, classified = 0;
    while (visible < 500) {
        const std::size_t x = rng() % c.size(), y = rng() % c.size();
        if (x == y || !chord_visible(c, x, y)) continue;
        ++visible;
        const auto r = classify_chord(c, x, y);
        if (r.cls == ChordClass::Unclassifiable) continue;
        ++classified;
        CHECK((r.cls == ChordClass::Internal) == chord_midpoint_inside(c, x, y));
    }
    CHECK(classified >= 475);
}

TEST_CASE("bean: body discontinuities on the concave arc") {
    const auto c = bean_curve(2000);
    const auto arc = concave_arc(c);
    CHECK(arc.size() == 134);
    const std::map<std::string, int> frozen{
        {"o/o/z", 264}, {"o/z/z", 266}, {"z/o/o", 264}, {"z/o/z", 2}, {"z/z/o", 266}};
    CHECK(body_patterns(c, arc) == frozen);
}

TEST_CASE("classify_chord requires a visible chord") {
    const auto c = bean_curve(2000);
    std::mt19937_64 rng(4);
    for (;;) {
        const std::size_t x = rng() % c.size(), y = rng() % c.size();
        if (x == y || chord_visible(c, x, y)) continue;
        CHECK_THROWS_AS(classify_chord(c, x, y), Error);
        break;
    }
}

TEST_CASE("doubling M keeps classified chords") {
    for (const char* name : {"bean", "star"}) {
        const auto c1 = named_curve(name, 1000), c2 = named_curve(name, 2000);
        std::mt19937_64 rng(9);
        int compared = 0;
        for (int k = 0; k < 400; ++k) {
            const std::size_t x = rng() % c1.size(), y = rng() % c1.size();
            if (x == y || !chord_visible(c1, x, y)) continue;
            const auto a = classify_chord(c1, x, y);
            const std::size_t x2 = sample_at(c2, c1.params[x]), y2 = sample_at(c2, c1.params[y]);
            if (a.cls == ChordClass::Unclassifiable || !chord_visible(c2, x2, y2)) continue;
            const auto b = classify_chord(c2, x2, y2);
            if (b.cls == ChordClass::Unclassifiable) continue;
            ++compared;
            CHECK(a.cls == b.cls);
        }
        CHECK(compared > 100);
    }
}

TEST_CASE("star: classified chords agree with the midpoint oracle") {
    const auto c = star_curve(2000);
    std::mt19937_64 rng(6);
    int visible = 0;
    while (visible < 300) {
        const std::size_t x = rng() % c.size(), y = rng() % c.size();
        if (x == y || !chord_visible(c, x, y)) continue;
        ++visible;
        const auto r = classify_chord(c, x, y);
        if (r.cls != ChordClass::Unclassifiable)
            CHECK((r.cls == ChordClass::Internal) == chord_midpoint_inside(c, x, y));
    }
}

}  // TEST_SUITE

// Kept apart so its ctest entry reports on its own.
TEST_SUITE("continuous-isolated-zero") {

TEST_CASE("bean: an o/z/e or e/z/o body pattern on the concave arc") {
    const auto c = bean_curve(2000);
    const auto p = body_patterns(c, concave_arc(c));
    const int isolated = (p.count("o/z/e") ? p.at("o/z/e") : 0) + (p.count("e/z/o") ? p.at("e/z/o") : 0);
    CHECK(isolated >= 1);
}

}  // TEST_SUITE
