#include "support.hpp"

#include "ordertype.hpp"
#include "zpstab/classifier.hpp"
#include "zpstab/counterexample.hpp"
#include "zpstab/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace zpstab;

namespace {

struct Inputs {
    ZPTable zp;
    VertexFlags flags;
    std::vector<VertexPair> edges, hull;
};

Inputs inputs(const Polygon& p) {
    return {zp_table(stab_table(p)), vertex_flags(p), polygon_edges(p), hull_edges(p)};
}

std::vector<EdgeClassification> classify(const Inputs& in, const ClassifierOptions& o = {}) {
    return classify_edges(in.zp, in.flags, in.edges, in.hull, o);
}

// Wrong I/E calls against the oracle; Ambiguous is never wrong.
std::size_t wrong(const Polygon& p, const std::vector<EdgeClassification>& cls) {
    const auto v = visibility_oracle(p);
    std::size_t bad = 0;
    for (const auto& c : cls) {
        const auto truth = v.at(c.pair.first, c.pair.second);
        if (c.cls == EdgeClass::Internal) bad += truth != Visibility::Internal;
        if (c.cls == EdgeClass::External) bad += truth != Visibility::External;
        if (c.cls == EdgeClass::Boundary) bad += truth != Visibility::Boundary;
    }
    return bad;
}

EdgeClass class_of(const std::vector<EdgeClassification>& cls, VertexPair p) {
    for (const auto& c : cls)
        if (c.pair == p) return c.cls;
    FAIL("pair missing");
    return EdgeClass::Ambiguous;
}

}  // namespace

TEST_SUITE("classifier") {

TEST_CASE("witness properties") {
    const auto ce = reconstruct_counterexample();
    const auto a = zp_table(stab_table(ce.a)), b = zp_table(stab_table(ce.b));
    CHECK(even_property(a, 0, 8, 10));
    CHECK(odd_property(b, 0, 8, 4));
    // Tables are equal, so the witnesses transfer.
    CHECK(even_property(b, 0, 8, 10));
    CHECK(odd_property(a, 0, 8, 4));
    CHECK(even_property(a, 0, 8, 3));

    const auto hex = zp_table(stab_table(support::convex_ngon(7)));
    for (std::size_t x = 0; x < 7; ++x)
        for (std::size_t y = 0; y < 7; ++y)
            for (std::size_t z = 0; z < 7; ++z)
                if (x != y && z != x && z != y) {
                    CHECK(even_property(hex, x, y, z));
                    CHECK_FALSE(odd_property(hex, x, y, z));
                }
}

TEST_CASE("convex polygon: Internal or Boundary only") {
    const auto p = support::convex_ngon(10);
    const auto cls = classify(inputs(p));
    CHECK(cls.size() == 45);
    for (const auto& c : cls) {
        CHECK((c.cls == EdgeClass::Internal || c.cls == EdgeClass::Boundary));
        CHECK(c.provenance != Provenance::Unresolved);
    }
}

TEST_CASE("dented square") {
    const auto p = support::dented_square();
    const auto cls = classify(inputs(p));
    CHECK(wrong(p, cls) == 0);
    CHECK(class_of(cls, {2, 4}) == EdgeClass::External);
    CHECK(class_of(cls, {0, 3}) == EdgeClass::Internal);
    for (const auto& c : cls)
        if (c.pair == VertexPair{2, 4}) CHECK(c.provenance == Provenance::HullPocketLid);
}

TEST_CASE("counterexample (0,8) is Ambiguous in both polygons") {
    const auto ce = reconstruct_counterexample();
    for (const auto* p : {&ce.a, &ce.b}) {
        const auto cls = classify(inputs(*p));
        CHECK(class_of(cls, {0, 8}) == EdgeClass::Ambiguous);
        CHECK(wrong(*p, cls) == 0);
        const std::vector<VertexPair> amb{{0, 8}};
        const auto w = explain_ambiguous(*p, amb);
        REQUIRE(w.size() == 1);
        CHECK(w[0].chain.x == 0);
        CHECK(w[0].chain.y == 8);
        CHECK(w[0].chain.length == 9);
    }
}

TEST_CASE("explain_ambiguous on an empty set") {
    CHECK(explain_ambiguous(support::pentagon(), std::vector<VertexPair>{}).empty());
}

TEST_CASE("explain_ambiguous surfaces a missing witness") {
    const std::vector<VertexPair> amb{{0, 2}};
    CHECK_THROWS_AS(explain_ambiguous(support::pentagon(), amb), Error);
}

TEST_CASE("output invariants") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto p = generate_random_polygon(4 + seed % 18, seed);
        const auto in = inputs(p);
        const auto cls = classify(in);
        CHECK(wrong(p, cls) == 0);
        CHECK(std::is_sorted(cls.begin(), cls.end(),
                             [](const auto& a, const auto& b) { return a.pair < b.pair; }));
        for (const auto& c : cls) {
            CHECK(c.pair.first < c.pair.second);
            if (c.cls != EdgeClass::Ambiguous) CHECK(c.provenance != Provenance::Unresolved);
            CHECK((c.cls == EdgeClass::Boundary) == p.adjacent(c.pair.first, c.pair.second));
        }
        CHECK(cls == classify(in));
    }
}

TEST_CASE("nontriangular polygons are fully classified") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto p = generate_random_polygon(20 + 3 * seed, seed, PolygonStyle::Nontriangular);
        const auto cls = classify(inputs(p));
        CHECK(wrong(p, cls) == 0);
        CHECK(std::none_of(cls.begin(), cls.end(), [](const auto& c) { return c.cls == EdgeClass::Ambiguous; }));
    }
}

TEST_CASE("stage order does not change classes") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto p = generate_random_polygon(6 + seed % 12, seed + 1000);
        const auto in = inputs(p);
        const auto base = classify(in);
        for (int k = 0; k < 6; ++k) {
            ClassifierOptions o;
            std::shuffle(o.order.begin(), o.order.end(), rng);
            const auto got = classify(in, o);
            REQUIRE(got.size() == base.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].cls == base[i].cls);
        }
    }
}

TEST_CASE("contradictory inputs are rejected") {
    const auto p = support::dented_square();
    auto in = inputs(p);
    SUBCASE("hull edge on an unflagged vertex") {
        in.flags.on_hull[2] = false;
        CHECK_THROWS_AS(classify(in), Error);
    }
    SUBCASE("all-convex flags against a pocket lid") {
        // Chain 2, 3, 4 then reads as all convex (Internal) while 2-4 is a lid.
        in.flags.convex.assign(5, true);
        CHECK_THROWS_AS(classify(in), Error);
    }
    SUBCASE("non-edge passed as polygon edge") {
        in.edges[0] = {0, 3};
        CHECK_THROWS_AS(classify(in), Error);
    }
}

TEST_CASE("order-type clauses admit the true orientations") {
    auto admits = [](const Polygon& p) {
        const auto zp = zp_table(stab_table(p));
        const auto f = vertex_flags(p);
        detail::OrderTypeModel m(zp, f);
        const auto v = visibility_oracle(p);
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = x + 1; y < p.size(); ++y)
                if (v.at(x, y) == Visibility::Internal || v.at(x, y) == Visibility::External)
                    m.fix(x, y, v.at(x, y) == Visibility::Internal);
        return m.admits(p.vertices());
    };
    const auto ce = reconstruct_counterexample();
    CHECK(admits(ce.a));
    CHECK(admits(ce.b));
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        CHECK(admits(generate_random_polygon(5 + seed % 8, seed + 31)));
}

}  // TEST_SUITE
