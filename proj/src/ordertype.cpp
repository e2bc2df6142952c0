#include "ordertype.hpp"

#include <cadical.hpp>

#include <algorithm>
#include <array>

namespace zpstab::detail {

namespace {

std::uint64_t triple_rank(std::uint64_t i, std::uint64_t j, std::uint64_t k) {
    // i < j < k
    return k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i;
}

}  // namespace

OrderTypeModel::OrderTypeModel(const ZPTable& zp, const VertexFlags& flags)
    : zp_(zp), flags_(flags), n_(zp.size()), solver_(std::make_unique<CaDiCaL::Solver>()) {
    vars_ = static_cast<int>(n_ < 3 ? 0 : triple_rank(n_ - 3, n_ - 2, n_ - 1) + 1);
    enters_.assign(n_ * n_, 0);
    counts_encoded_.assign(n_ * n_, false);
    encode_flags();
    encode_simplicity();
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = x + 1; y < n_; ++y) encode_pair(x, y);
}

OrderTypeModel::~OrderTypeModel() = default;

OrderTypeModel::Lit OrderTypeModel::chi(std::size_t a, std::size_t b, std::size_t c) const {
    bool flip = false;
    if (a > b) std::swap(a, b), flip = !flip;
    if (b > c) std::swap(b, c), flip = !flip;
    if (a > b) std::swap(a, b), flip = !flip;
    const Lit v = static_cast<Lit>(triple_rank(a, b, c) + 1);
    return flip ? -v : v;
}

OrderTypeModel::Lit OrderTypeModel::fresh() { return ++vars_; }

void OrderTypeModel::clause(std::initializer_list<Lit> lits) {
    for (Lit l : lits) solver_->add(l);
    solver_->add(0);
}

void OrderTypeModel::clause(const std::vector<Lit>& lits) {
    for (Lit l : lits) solver_->add(l);
    solver_->add(0);
}

OrderTypeModel::Lit OrderTypeModel::lit_xor(Lit a, Lit b) {
    const Lit v = fresh();
    clause({-v, a, b});
    clause({-v, -a, -b});
    clause({v, -a, b});
    clause({v, a, -b});
    return v;
}

OrderTypeModel::Lit OrderTypeModel::lit_and(std::initializer_list<Lit> lits) {
    const Lit v = fresh();
    std::vector<Lit> back{v};
    for (Lit l : lits) {
        clause({-v, l});
        back.push_back(-l);
    }
    clause(back);
    return v;
}

OrderTypeModel::Lit OrderTypeModel::parity(const std::vector<Lit>& lits) {
    Lit acc = lits.front();
    for (std::size_t i = 1; i < lits.size(); ++i) acc = lit_xor(acc, lits[i]);
    return acc;
}

OrderTypeModel::Lit OrderTypeModel::enters(std::size_t x, std::size_t y) {
    Lit& cached = enters_[x * n_ + y];
    if (cached) return cached;
    const std::size_t nx = (x + 1) % n_, px = (x + n_ - 1) % n_;
    const Lit a = chi(x, nx, y), b = chi(px, x, y);
    // Convex: left of both incident edges. Reflex: left of either.
    cached = flags_.convex[x] ? lit_and({a, b}) : -lit_and({-a, -b});
    return cached;
}

OrderTypeModel::Lit OrderTypeModel::exits(std::size_t x, std::size_t y) {
    const std::size_t nx = (x + 1) % n_, px = (x + n_ - 1) % n_;
    const Lit a = -chi(x, nx, y), b = -chi(px, x, y);
    return flags_.convex[x] ? lit_and({a, b}) : -lit_and({-a, -b});
}

void OrderTypeModel::encode_flags() {
    std::vector<std::size_t> hull;
    for (std::size_t v = 0; v < n_; ++v) {
        const Lit turn = chi((v + n_ - 1) % n_, v, (v + 1) % n_);
        clause({flags_.convex[v] ? turn : -turn});
        if (flags_.on_hull[v]) hull.push_back(v);
    }
    // Hull vertices keep their polygon order around the hull.
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const std::size_t a = hull[i], b = hull[(i + 1) % hull.size()];
        for (std::size_t w = 0; w < n_; ++w)
            if (w != a && w != b) clause({chi(a, b, w)});
    }
}

void OrderTypeModel::encode_simplicity() {
    for (std::size_t p = 0; p < n_; ++p)
        for (std::size_t q = p + 2; q < n_; ++q) {
            const std::size_t p1 = p + 1, q1 = (q + 1) % n_;
            if (q1 == p) continue;
            const Lit a = chi(p, p1, q), b = chi(p, p1, q1), c = chi(q, q1, p), d = chi(q, q1, p1);
            clause({-a, b, -c, d});
            clause({-a, b, c, -d});
            clause({a, -b, -c, d});
            clause({a, -b, c, -d});
        }
}

void OrderTypeModel::encode_pair(std::size_t x, std::size_t y) {
    const ZPTriple cls = zp_.at(x, y);
    for (std::size_t p = 0; p < n_; ++p) {
        const std::size_t q = (p + 1) % n_;
        if (p == x || p == y || q == x || q == y) continue;
        const Lit a = chi(x, y, p), b = chi(x, y, q), c = chi(p, q, x), d = chi(p, q, y),
                  e = chi(x, q, y);
        // Line xy meets edge pq iff a != b; the hit is in the segment iff
        // x and y straddle line pq, beyond x iff x lies in triangle pqy.
        if (cls.tail == ZP::Zero && cls.body == ZP::Zero && cls.head == ZP::Zero) {
            clause({-a, b});
            clause({a, -b});
            continue;
        }
        if (cls.body == ZP::Zero) {
            clause({-a, b, -c, d});
            clause({-a, b, c, -d});
            clause({a, -b, -c, d});
            clause({a, -b, c, -d});
        }
        if (cls.tail == ZP::Zero) {
            clause({-a, b, -c, -d, -e});
            clause({a, -b, c, d, e});
        }
        if (cls.head == ZP::Zero) {
            // crossing, same side of pq, and not in triangle pqy
            for (int m = 0; m < 8; ++m) {
                const bool av = m & 1, dv = m & 2, ev = m & 4;
                if (av == dv && ev == dv) continue;
                clause({av ? -a : a, av ? b : -b, dv ? -c : c, dv ? -d : d, ev ? -e : e});
            }
        }
    }

    if (x + 1 == y || (y + 1) % n_ == x) return;
    // A ray from a vertex crosses the boundary an odd number of times iff it
    // starts inside; likewise the open segment between two vertices.
    clause({cls.tail == ZP::Odd ? exits(x, y) : -exits(x, y)});
    clause({cls.head == ZP::Odd ? exits(y, x) : -exits(y, x)});
    const Lit through = lit_xor(enters(x, y), enters(y, x));
    clause({cls.body == ZP::Odd ? through : -through});
}

void OrderTypeModel::encode_counts(std::size_t x, std::size_t y) {
    const ZPTriple cls = zp_.at(x, y);
    std::vector<Lit> tail, body, head;
    for (std::size_t p = 0; p < n_; ++p) {
        const std::size_t q = (p + 1) % n_;
        if (p == x || p == y || q == x || q == y) continue;
        const Lit a = chi(x, y, p), b = chi(x, y, q), c = chi(p, q, x), d = chi(p, q, y),
                  e = chi(x, q, y);
        const Lit cross = lit_xor(a, b);
        const Lit opp = lit_xor(c, d);
        if (cls.body != ZP::Zero) body.push_back(lit_and({cross, opp}));
        if (cls.tail == ZP::Zero && cls.head == ZP::Zero) continue;
        const Lit t = lit_and({cross, -opp, -lit_xor(e, d), -lit_xor(a, d)});
        if (cls.tail != ZP::Zero) tail.push_back(t);
        if (cls.head != ZP::Zero) head.push_back(lit_and({cross, -opp, -t}));
    }
    auto count = [&](ZP c, const std::vector<Lit>& lits) {
        if (c == ZP::Zero) return;
        if (lits.empty()) {
            clause(std::vector<Lit>{});
            return;
        }
        const Lit odd = parity(lits);
        clause({c == ZP::Odd ? odd : -odd});
        if (c == ZP::EvenPos) clause(lits);
    };
    count(cls.tail, tail);
    count(cls.body, body);
    count(cls.head, head);
}

void OrderTypeModel::fix(std::size_t x, std::size_t y, bool internal) {
    clause({internal ? enters(x, y) : -enters(x, y)});
    clause({internal ? enters(y, x) : -enters(y, x)});
}

bool OrderTypeModel::value(Lit l) const { return solver_->val(l) > 0; }

void OrderTypeModel::load_model() {
    const std::size_t n = n_;
    sign_.assign(n * n * n, 0);
    for (std::size_t k = 2; k < n; ++k)
        for (std::size_t j = 1; j < k; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                const std::int8_t v = value(static_cast<Lit>(triple_rank(i, j, k) + 1)) ? 1 : -1;
                const std::int8_t w = static_cast<std::int8_t>(-v);
                sign_[(i * n + j) * n + k] = sign_[(j * n + k) * n + i] = sign_[(k * n + i) * n + j] = v;
                sign_[(j * n + i) * n + k] = sign_[(i * n + k) * n + j] = sign_[(k * n + j) * n + i] = w;
            }
}

bool OrderTypeModel::add_count_constraints() {
    bool added = false;
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = x + 1; y < n_; ++y) {
            if (counts_encoded_[x * n_ + y]) continue;
            StabTriple t{};
            for (std::size_t p = 0; p < n_; ++p) {
                const std::size_t q = (p + 1) % n_;
                if (p == x || p == y || q == x || q == y) continue;
                const int a = s(x, y, p), b = s(x, y, q), c = s(p, q, x), d = s(p, q, y),
                          e = s(x, q, y);
                if (a == b) continue;
                if (c != d)
                    ++t.body;
                else if (e == d && a == d)
                    ++t.tail;
                else
                    ++t.head;
            }
            if (zp_triple(t) != zp_.at(x, y)) {
                encode_counts(x, y);
                counts_encoded_[x * n_ + y] = true;
                added = true;
            }
        }
    return added;
}

bool OrderTypeModel::check_axioms(const std::array<std::size_t, 5>& pt) {
    bool added = false;
    for (int apex = 0; apex < 5; ++apex) {
        std::array<std::size_t, 4> o{};
        for (int i = 0, k = 0; i < 5; ++i)
            if (i != apex) o[k++] = pt[i];
        const std::size_t a = pt[apex], b = o[0], c = o[1], d = o[2], e = o[3];
        const int p1 = s(a, b, c) * s(a, d, e);
        const int p2 = -s(a, b, d) * s(a, c, e);
        const int p3 = s(a, b, e) * s(a, c, d);
        if (p1 != p2 || p2 != p3) continue;
        // [abc][ade] - [abd][ace] + [abe][acd] = 0 needs terms of both
        // signs; block this sign pattern.
        for (auto [u, v, w] : {std::array{a, b, c}, std::array{a, d, e}, std::array{a, b, d},
                               std::array{a, c, e}, std::array{a, b, e}, std::array{a, c, d}})
            solver_->add(s(u, v, w) > 0 ? -chi(u, v, w) : chi(u, v, w));
        solver_->add(0);
        added = true;
    }
    return added;
}

bool OrderTypeModel::add_violated_axioms() {
    // Every three-term relation shares one point a in all six brackets, so
    // they all hold iff, for each a, the signs chi(a, ., .) form a rank-2
    // chirotope: after reorienting against a reference r they must be a
    // transitive tournament. An edge u -> v with score(u) <= score(v) closes
    // a 3-cycle u -> v -> w -> u, and {a, r, u, v, w} breaks a relation.
    bool added = false;
    std::vector<int> flip(n_), score(n_);
    for (std::size_t a = 0; a < n_; ++a) {
        const std::size_t r = a == 0 ? 1 : 0;
        for (std::size_t b = 0; b < n_; ++b) flip[b] = (b == a || b == r) ? 0 : s(a, r, b);
        auto beats = [&](std::size_t u, std::size_t v) { return flip[u] * flip[v] * s(a, u, v) > 0; };
        for (std::size_t u = 0; u < n_; ++u) {
            score[u] = 0;
            if (!flip[u]) continue;
            for (std::size_t v = 0; v < n_; ++v)
                if (flip[v] && v != u && beats(u, v)) ++score[u];
        }
        std::size_t budget = n_;
        for (std::size_t u = 0; u < n_ && budget; ++u) {
            if (!flip[u]) continue;
            for (std::size_t v = 0; v < n_ && budget; ++v) {
                if (!flip[v] || v == u || !beats(u, v) || score[u] > score[v]) continue;
                for (std::size_t w = 0; w < n_; ++w)
                    if (flip[w] && w != u && w != v && beats(v, w) && beats(w, u)) {
                        std::array<std::size_t, 5> q{a, r, u, v, w};
                        std::sort(q.begin(), q.end());
                        added |= check_axioms(q);
                        --budget;
                        break;
                    }
            }
        }
    }
    return added;
}

bool OrderTypeModel::solve(std::span<const Lit> assumptions) {
    for (;;) {
        for (Lit l : assumptions) solver_->assume(l);
        if (solver_->solve() != 10) return false;
        load_model();
        if (exact_counts_ && add_count_constraints()) continue;
        if (!add_violated_axioms()) return true;
    }
}

bool OrderTypeModel::admits(std::span<const Point> pts) {
    exact_counts_ = true;
    std::vector<Lit> lits;
    for (std::size_t k = 2; k < n_; ++k)
        for (std::size_t j = 1; j < k; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                const Lit v = chi(i, j, k);
                lits.push_back(orient(pts[i], pts[j], pts[k]) == Orientation::Left ? v : -v);
            }
    return solve(lits);
}

std::vector<std::optional<bool>> OrderTypeModel::decide(std::span<const VertexPair> pairs) {
    std::vector<Lit> lits;
    for (const auto& [x, y] : pairs) lits.push_back(enters(x, y));
    if (!solve({}))
        throw Error(ErrorCode::InconsistentInput, "no order type matches the zero-parity table");
    std::vector<std::array<bool, 2>> seen(pairs.size(), {false, false});
    auto record = [&] {
        for (std::size_t i = 0; i < lits.size(); ++i) seen[i][value(lits[i]) ? 1 : 0] = true;
    };
    record();
    // Zero classes alone usually settle everything; exact counts are only
    // brought in when some pair is left open.
    for (bool exact : {false, true}) {
        if (exact) {
            if (std::all_of(seen.begin(), seen.end(), [](auto v) { return !(v[0] && v[1]); }))
                break;
            exact_counts_ = true;
            for (auto& v : seen) v = {false, false};
            if (!solve({}))
                throw Error(ErrorCode::InconsistentInput,
                            "no order type matches the zero-parity table");
            record();
        }
        for (std::size_t i = 0; i < lits.size(); ++i) {
            if (seen[i][0] && seen[i][1]) continue;
            const Lit flip = seen[i][1] ? -lits[i] : lits[i];
            if (solve(std::span<const Lit>(&flip, 1)))
                record();
            else
                clause({-flip});
        }
    }
    std::vector<std::optional<bool>> out(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (seen[i][0] != seen[i][1]) out[i] = seen[i][1];
    return out;
}

}  // namespace zpstab::detail
