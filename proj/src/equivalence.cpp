#include "zpstab/equivalence.hpp"

#include <numeric>

namespace zpstab {

namespace {

std::vector<std::size_t> checked_map(const PolygonPair& pair) {
    const std::size_t n = pair.a.size();
    if (pair.b.size() != n)
        throw Error(ErrorCode::InconsistentInput,
                    "vertex counts differ: " + std::to_string(n) + " vs " +
                        std::to_string(pair.b.size()));
    std::vector<std::size_t> map = pair.correspondence;
    if (map.empty()) {
        map.resize(n);
        std::iota(map.begin(), map.end(), std::size_t{0});
    }
    if (map.size() != n)
        throw Error(ErrorCode::InconsistentInput, "correspondence has the wrong length");
    std::vector<bool> seen(n);
    for (std::size_t v : map) {
        if (v >= n || seen[v])
            throw Error(ErrorCode::InconsistentInput, "correspondence is not a permutation");
        seen[v] = true;
    }
    return map;
}

template <class Reduce>
EquivalenceReport compare(const PolygonPair& pair, Reduce reduce) {
    const auto map = checked_map(pair);
    const std::size_t n = pair.a.size();
    const StabTable sa = stab_table(pair.a), sb = stab_table(pair.b);
    EquivalenceReport r;
    auto diff = [&](std::size_t x, std::size_t y, Component c, std::uint32_t u, std::uint32_t v) {
        if (reduce(u) == reduce(v)) return false;
        if (!r.first_diff) r.first_diff = ComponentDiff{{x, y}, c, zp(u), zp(v)};
        return true;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            r.compared += 3;
            bool differs = false;
            // Both orientations; (y, x) is the mirror of (x, y), so a
            // mismatch there means a broken table rather than a new entry.
            for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
                const StabTriple& u = sa.at(p, q);
                const StabTriple& v = sb.at(map[p], map[q]);
                differs |= diff(p, q, Component::Tail, u.tail, v.tail);
                differs |= diff(p, q, Component::Body, u.body, v.body);
                differs |= diff(p, q, Component::Head, u.head, v.head);
            }
            if (differs)
                r.equal = false;
            else if (!(sa.at(x, y) == sb.at(map[x], map[y])))
                ++r.raw_diffs;
        }
    if (n == 12)
        r.notes.push_back("3 x C(12,2) = 198 component classes compared (a count of 196 omits two)");
    return r;
}

}  // namespace

EquivalenceReport verify_zp_equivalence(const PolygonPair& pair) {
    return compare(pair, [](std::uint32_t c) { return zp(c); });
}

EquivalenceReport verify_pp_equivalence(const PolygonPair& pair) {
    return compare(pair, [](std::uint32_t c) { return pp(c); });
}

}  // namespace zpstab
