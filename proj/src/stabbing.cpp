#include "zpstab/stabbing.hpp"

namespace zpstab {

const char* to_string(ZP c) {
    switch (c) {
        case ZP::Zero: return "Zero";
        case ZP::Odd: return "Odd";
        case ZP::EvenPos: return "EvenPos";
    }
    return "?";
}

const char* to_string(PP c) { return c == PP::Odd ? "Odd" : "Even"; }

char letter(ZP c) {
    switch (c) {
        case ZP::Zero: return 'z';
        case ZP::Odd: return 'o';
        case ZP::EvenPos: return 'e';
    }
    return '?';
}

StabTriple stab_triple(const Polygon& poly, std::size_t x, std::size_t y) {
    StabTriple s;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = poly.next(i);
        if (i == x || i == y || j == x || j == y) continue;
        const auto c = ray_line_component(poly[x], poly[y], poly[i], poly[j]);
        if (!c) continue;
        switch (*c) {
            case Component::Tail: ++s.tail; break;
            case Component::Body: ++s.body; break;
            case Component::Head: ++s.head; break;
        }
    }
    return s;
}

StabTable stab_table(const Polygon& poly) {
    const std::size_t n = poly.size();
    StabTable t(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const StabTriple s = stab_triple(poly, x, y);
            t.at(x, y) = s;
            t.at(y, x) = StabTriple{s.head, s.body, s.tail};
        }
    return t;
}

ZPTriple zp_triple(const StabTriple& s) { return {zp(s.tail), zp(s.body), zp(s.head)}; }
PPTriple pp_triple(const StabTriple& s) { return {pp(s.tail), pp(s.body), pp(s.head)}; }

ZPTable zp_table(const StabTable& st) {
    ZPTable z(st.size());
    for (std::size_t x = 0; x < st.size(); ++x)
        for (std::size_t y = 0; y < st.size(); ++y)
            if (x != y) z.at(x, y) = zp_triple(st.at(x, y));
    return z;
}

PPTable pp_table(const StabTable& st) {
    PPTable p(st.size());
    for (std::size_t x = 0; x < st.size(); ++x)
        for (std::size_t y = 0; y < st.size(); ++y)
            if (x != y) p.at(x, y) = pp_triple(st.at(x, y));
    return p;
}

PPTable pp_table(const ZPTable& zt) {
    PPTable p(zt.size());
    for (std::size_t x = 0; x < zt.size(); ++x)
        for (std::size_t y = 0; y < zt.size(); ++y)
            if (x != y) {
                const ZPTriple& z = zt.at(x, y);
                p.at(x, y) = {pp(z.tail), pp(z.body), pp(z.head)};
            }
    return p;
}

std::vector<VertexPair> visible_pairs(const ZPTable& zt) {
    std::vector<VertexPair> out;
    for (std::size_t x = 0; x < zt.size(); ++x)
        for (std::size_t y = x + 1; y < zt.size(); ++y)
            if (zt.at(x, y).body == ZP::Zero) out.emplace_back(x, y);
    return out;
}

int straddle(const Polygon& poly, std::size_t v, std::size_t x, std::size_t y) {
    const auto a = static_cast<int>(orient(poly[x], poly[y], poly[poly.prev(v)]));
    const auto b = static_cast<int>(orient(poly[x], poly[y], poly[poly.next(v)]));
    return a * b < 0 ? 1 : 0;
}

bool parity_balanced(const Polygon& poly, const StabTable& st, std::size_t x, std::size_t y) {
    const StabTriple& s = st.at(x, y);
    unsigned expected = 0;
    if (poly.adjacent(x, y)) {
        // The edge xy lies on the line; the boundary crosses it there iff the
        // two outer neighbours are on opposite sides.
        const std::size_t a = poly.next(x) == y ? poly.prev(x) : poly.next(x);
        const std::size_t b = poly.next(y) == x ? poly.prev(y) : poly.next(y);
        const auto sa = static_cast<int>(orient(poly[x], poly[y], poly[a]));
        const auto sb = static_cast<int>(orient(poly[x], poly[y], poly[b]));
        expected = sa * sb < 0 ? 1 : 0;
    } else {
        expected = static_cast<unsigned>(straddle(poly, x, x, y) + straddle(poly, y, x, y));
    }
    return (s.tail + s.body + s.head) % 2 == expected % 2;
}

}  // namespace zpstab
