#include "support.hpp"

#include "zpstab/counterexample.hpp"
#include "zpstab/equivalence.hpp"
#include "zpstab/fuzz.hpp"
#include "zpstab/oracle.hpp"

#include <doctest.h>

using namespace zpstab;

namespace {

ZP component_class(const ZPTable& t, const ComponentDiff& d) {
    const auto& z = t.at(d.pair.first, d.pair.second);
    return d.component == Component::Tail ? z.tail : d.component == Component::Body ? z.body : z.head;
}

}  // namespace

TEST_SUITE("oracle-fuzz") {

TEST_CASE("identical polygons are equivalent") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto p = generate_random_polygon(4 + seed, seed);
        const auto r = verify_zp_equivalence({p, p, {}});
        CHECK(r.equal);
        CHECK(r.raw_diffs == 0);
        CHECK_FALSE(r.first_diff.has_value());
        CHECK(r.compared == 3 * p.size() * (p.size() - 1) / 2);
    }
}

TEST_CASE("counterexample equivalence") {
    const auto ce = reconstruct_counterexample();
    const auto r = verify_zp_equivalence(ce);
    CHECK(r.equal);
    CHECK(r.compared == 198);
    CHECK(r.raw_diffs >= 2);
    CHECK_FALSE(r.notes.empty());
    CHECK(verify_zp_equivalence({ce.b, ce.a, {}}).equal);
    // Pure parity is coarser, so it agrees as well.
    CHECK(verify_pp_equivalence(ce).equal);
}

TEST_CASE("counterexample is stable") {
    CHECK(counterexample_json_text() == counterexample_json_text());
    const auto ce = reconstruct_counterexample();
    CHECK(ce.a.size() == 12);
    CHECK(ce.b.size() == 12);
    for (std::size_t v : {9, 10, 11}) CHECK(ce.a[v] == ce.b[v]);
    const auto fa = vertex_flags(ce.a), fb = vertex_flags(ce.b);
    CHECK(fa.convex == fb.convex);
    CHECK(fa.on_hull == fb.on_hull);
    CHECK(fa.convex[10]);
    CHECK(fa.on_hull[10]);
    CHECK_FALSE(fa.convex[4]);
    // Chain 1..7 below segment 0-8 in A, above it in B.
    for (std::size_t v = 1; v <= 7; ++v) {
        CHECK(orient(ce.a[0], ce.a[8], ce.a[v]) == Orientation::Right);
        CHECK(orient(ce.b[0], ce.b[8], ce.b[v]) == Orientation::Left);
    }
}

TEST_CASE("nudging a vertex across a critical line") {
    const auto p = generate_random_polygon(8, 3, PolygonStyle::Generic, 60);
    const auto base = zp_table(brute_stab_table(p));
    std::vector<Point> pts(p.vertices().begin(), p.vertices().end());
    std::optional<Polygon> q;
    for (Coord step = 1; step < 200 && !q; ++step) {
        auto moved = pts;
        moved[2].x += step;
        try {
            auto cand = load_polygon(moved);
            if (zp_table(brute_stab_table(cand)) != base) q = std::move(cand);
        } catch (const Error&) {
        }
    }
    REQUIRE(q.has_value());
    const auto r = verify_zp_equivalence({p, *q, {}});
    CHECK_FALSE(r.equal);
    REQUIRE(r.first_diff.has_value());
    CHECK(r.first_diff->a != r.first_diff->b);
    CHECK(component_class(base, *r.first_diff) == r.first_diff->a);
    CHECK(component_class(zp_table(brute_stab_table(*q)), *r.first_diff) == r.first_diff->b);
    CHECK_FALSE(verify_zp_equivalence({*q, p, {}}).equal);
}

TEST_CASE("equivalence is symmetric") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto a = generate_random_polygon(4, seed, PolygonStyle::Generic, 6);
        const auto b = generate_random_polygon(4, seed + 1, PolygonStyle::Generic, 6);
        CHECK(verify_zp_equivalence({a, b, {}}).equal == verify_zp_equivalence({b, a, {}}).equal);
    }
}

TEST_CASE("correspondence and size checks") {
    const auto p = support::pentagon();
    // Rotating labels by one is a valid relabeling of the same polygon.
    std::vector<Point> rot;
    for (std::size_t i = 0; i < 5; ++i) rot.push_back(p[(i + 1) % 5]);
    const auto q = load_polygon(rot);
    CHECK(verify_zp_equivalence({p, q, {4, 0, 1, 2, 3}}).equal);
    CHECK_THROWS_AS(verify_zp_equivalence({p, q, {0, 0, 1, 2, 3}}), Error);
    CHECK_THROWS_AS(verify_zp_equivalence({p, support::convex_ngon(6), {}}), Error);
}

TEST_CASE("generate_random_polygon") {
    const auto t = generate_random_polygon(3, 42);
    CHECK(t.size() == 3);
    CHECK(doubled_area(t.vertices()) > 0);
    const auto a = generate_random_polygon(17, 99), b = generate_random_polygon(17, 99);
    CHECK(std::equal(a.vertices().begin(), a.vertices().end(), b.vertices().begin()));
    CHECK(is_nontriangular(generate_random_polygon(40, 8, PolygonStyle::Nontriangular), 8));
}

TEST_CASE("fuzz modes parse") {
    for (auto m : {FuzzMode::ZPCollision, FuzzMode::PureParityCollision, FuzzMode::AmbiguousChain,
                   FuzzMode::WeakInfoCompare})
        CHECK(parse_fuzz_mode(to_string(m)) == m);
    CHECK_THROWS_AS(parse_fuzz_mode("nope"), Error);
}

TEST_CASE("zp-collision finds the seeded pair") {
    FuzzOptions o;
    o.mode = FuzzMode::ZPCollision;
    o.budget = 200;
    o.n_max = 6;
    o.seeded.push_back(reconstruct_counterexample());
    const auto r = fuzz_campaign(o);
    REQUIRE_FALSE(r.findings.empty());
    CHECK_FALSE(r.inconclusive);
    for (const auto& f : r.findings) {
        CHECK(f.verified);
        CHECK(reverify_finding(f));
        CHECK(reverify_finding(finding_from_json(finding_to_json(f))));
    }
}

TEST_CASE("ambiguous-chain records the counterexample's chain") {
    FuzzOptions o;
    o.mode = FuzzMode::AmbiguousChain;
    o.budget = 50;
    o.n_min = o.n_max = 4;
    o.seeded.push_back(reconstruct_counterexample());
    const auto r = fuzz_campaign(o);
    REQUIRE(r.min_chain_length.has_value());
    CHECK(*r.min_chain_length == 9);
    CHECK(r.ambiguous_pairs == 2);
}

TEST_CASE("pure-parity-collision findings re-verify") {
    FuzzOptions o;
    o.mode = FuzzMode::PureParityCollision;
    o.budget = 20000;
    o.n_min = 4;
    o.n_max = 6;
    o.seed = 3;
    const auto r = fuzz_campaign(o);
    CHECK(r.trials == 20000);
    CHECK(r.inconclusive == r.findings.empty());
    CHECK_FALSE(r.findings.empty());
    for (const auto& f : r.findings) {
        REQUIRE(f.polygons.size() == 2);
        CHECK(verify_pp_equivalence({f.polygons[0], f.polygons[1], {}}).equal);
        CHECK(reverify_finding(finding_from_json(finding_to_json(f))));
    }
}

TEST_CASE("campaigns are deterministic") {
    FuzzOptions o;
    o.mode = FuzzMode::WeakInfoCompare;
    o.budget = 3000;
    o.n_max = 7;
    o.seed = 12;
    const auto a = report_summary_json(fuzz_campaign(o));
    o.workers = 1;
    const auto b = report_summary_json(fuzz_campaign(o));
    CHECK(a == b);
}

TEST_CASE("tampered findings fail re-verification") {
    FuzzOptions o;
    o.mode = FuzzMode::ZPCollision;
    o.budget = 1;
    o.seeded.push_back(reconstruct_counterexample());
    const auto r = fuzz_campaign(o);
    REQUIRE_FALSE(r.findings.empty());
    auto j = finding_to_json(r.findings[0]);
    j["polygons"][1] = j["polygons"][0];
    CHECK_FALSE(reverify_finding(finding_from_json(j)));
}

}  // TEST_SUITE
