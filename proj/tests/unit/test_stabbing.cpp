#include "support.hpp"

#include "zpstab/counterexample.hpp"
#include "zpstab/oracle.hpp"
#include "zpstab/stabbing.hpp"

#include <doctest.h>

#include <set>

using namespace zpstab;

TEST_SUITE("stabbing") {

TEST_CASE("reductions") {
    const StabTriple s{3, 0, 4};
    const auto z = zp_triple(s);
    CHECK(z.tail == ZP::Odd);
    CHECK(z.body == ZP::Zero);
    CHECK(z.head == ZP::EvenPos);
    const auto p = pp_triple(s);
    CHECK(p.tail == PP::Odd);
    CHECK(p.body == PP::Even);
    CHECK(p.head == PP::Even);
    const auto zero = zp_triple({0, 0, 0});
    CHECK((zero.tail == ZP::Zero && zero.body == ZP::Zero && zero.head == ZP::Zero));
    for (std::uint32_t c = 0; c < 20; ++c) {
        CHECK((zp(c) == ZP::Zero) == (c == 0));
        CHECK((zp(c) == ZP::Odd) == (c % 2 == 1));
        CHECK((zp(c) == ZP::EvenPos) == (c > 0 && c % 2 == 0));
        CHECK(pp(zp(c)) == pp(c));
    }
}

TEST_CASE("convex polygons stab nothing") {
    for (const auto& p : {support::pentagon(), support::convex_ngon(11)}) {
        const auto st = stab_table(p);
        const auto brute = brute_stab_table(p);
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = 0; y < p.size(); ++y)
                if (x != y) {
                    CHECK(st.at(x, y) == StabTriple{0, 0, 0});
                    CHECK(brute.at(x, y) == StabTriple{0, 0, 0});
                }
        CHECK(visible_pairs(zp_table(st)).size() == p.size() * (p.size() - 1) / 2);
    }
}

TEST_CASE("counterexample raw counts") {
    const auto ce = reconstruct_counterexample();
    const auto a = stab_table(ce.a), b = stab_table(ce.b);
    CHECK(a.at(1, 6).tail == 3);
    CHECK(b.at(1, 6).tail == 1);
    CHECK(a.at(0, 2).head == 3);
    CHECK(b.at(0, 2).head == 5);
    const auto vis = visible_pairs(zp_table(a));
    CHECK(std::find(vis.begin(), vis.end(), VertexPair{0, 8}) != vis.end());
}

TEST_CASE("table size for n = 12") {
    const auto st = stab_table(generate_random_polygon(12, 9));
    CHECK(st.size() == 12);
    std::size_t unordered = 0;
    for (std::size_t x = 0; x < 12; ++x)
        for (std::size_t y = x + 1; y < 12; ++y) ++unordered;
    CHECK(unordered == 66);
    CHECK(3 * unordered == 198);
}

TEST_CASE("table symmetries and bounds") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto p = generate_random_polygon(4 + seed % 20, seed);
        const std::size_t n = p.size();
        const auto st = stab_table(p);
        const auto zt = zp_table(st);
        const auto pt = pp_table(st);
        CHECK(pt == pp_table(zt));
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                const auto& s = st.at(x, y);
                CHECK(s.tail == st.at(y, x).head);
                CHECK(s.body == st.at(y, x).body);
                CHECK(s.tail + s.body + s.head <= n);
                CHECK(zt.at(x, y) == zp_triple(s));
                CHECK(pt.at(x, y) == pp_triple(s));
            }
    }
}

TEST_CASE("stab_triple agrees with the brute-force oracle") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto p = generate_random_polygon(3 + seed % 13, seed ^ 0x5eed);
        CHECK(stab_table(p) == brute_stab_table(p));
    }
}

TEST_CASE("visible pairs are exactly the oracle's visible pairs") {
    auto check = [](const Polygon& p) {
        const auto v = visibility_oracle(p);
        std::set<VertexPair> expected;
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = x + 1; y < p.size(); ++y)
                if (v.at(x, y) != Visibility::NotVisible) expected.insert({x, y});
        const auto got = visible_pairs(zp_table(stab_table(p)));
        CHECK(std::set<VertexPair>(got.begin(), got.end()) == expected);
    };
    check(support::dented_square());
    const auto dent = visible_pairs(zp_table(stab_table(support::dented_square())));
    CHECK(std::find(dent.begin(), dent.end(), VertexPair{0, 2}) == dent.end());
    for (std::uint64_t seed = 0; seed < 200; ++seed) check(generate_random_polygon(4 + seed % 25, seed));
}

TEST_CASE("parity balance") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto p = generate_random_polygon(4 + seed % 25, seed + 77);
        const auto st = stab_table(p);
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = 0; y < p.size(); ++y)
                if (x != y) CHECK(parity_balanced(p, st, x, y));
    }
}

TEST_CASE("straddle") {
    // A diagonal from a convex corner separates the corner's neighbours.
    const auto q = load_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 3}});
    CHECK(straddle(q, 0, 0, 2) == 1);
    // Neighbours on the line itself do not count.
    CHECK(straddle(q, 1, 0, 2) == 0);
    const auto d = support::dented_square();
    CHECK(straddle(d, 3, 3, 0) == 0);
    CHECK(straddle(d, 0, 0, 3) == 1);
}

}  // TEST_SUITE
