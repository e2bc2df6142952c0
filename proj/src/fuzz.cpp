#include "zpstab/fuzz.hpp"

#include "zpstab/classifier.hpp"
#include "zpstab/io.hpp"
#include "zpstab/oracle.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <unordered_map>

namespace zpstab {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return splitmix(splitmix(seed) ^ trial);
}

std::size_t trial_n(const FuzzOptions& o, std::uint64_t ts) {
    const std::size_t lo = std::max<std::size_t>(3, o.n_min);
    const std::size_t hi = std::max(lo, o.n_max);
    return lo + splitmix(ts ^ 0x5bd1e995) % (hi - lo + 1);
}

Coord trial_range(const FuzzOptions& o, std::size_t n) {
    if (o.coord_range > 0) return o.coord_range;
    switch (o.mode) {
        case FuzzMode::PureParityCollision:
        case FuzzMode::ZPCollision:
            // A coarse grid makes combinatorially equal polygons common.
            return static_cast<Coord>(n + 3);
        default:
            return static_cast<Coord>(std::max<std::size_t>(64, 40 * n));
    }
}

Polygon rotated(const Polygon& p, std::size_t r) {
    std::vector<Point> v(p.vertices().begin(), p.vertices().end());
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
    return load_polygon(std::move(v));
}

template <class T, class Code>
std::string table_key(const PairTable<T>& t, std::size_t r, Code code) {
    const std::size_t n = t.size();
    std::string key(n * n * 3, '\0');
    std::size_t k = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const T& c = t.at((x + r) % n, (y + r) % n);
            key[k++] = code(c.tail);
            key[k++] = code(c.body);
            key[k++] = code(c.head);
        }
    return key;
}

/// Smallest key over all rotations of the labels, and the rotation.
template <class T, class Code>
std::pair<std::string, std::size_t> canonical_key(const PairTable<T>& t, Code code) {
    std::pair<std::string, std::size_t> best{table_key(t, 0, code), 0};
    for (std::size_t r = 1; r < t.size(); ++r) {
        auto k = table_key(t, r, code);
        if (k < best.first) best = {std::move(k), r};
    }
    return best;
}

template <class T>
char code_of(T c) {
    return static_cast<char>('0' + static_cast<int>(c));
}

std::vector<VertexPair> sorted_hull_edges(const Polygon& p) {
    auto h = hull_edges(p);
    std::sort(h.begin(), h.end());
    return h;
}

/// Pairs classified Internal in one and External in the other.
std::vector<VertexPair> ie_disagreements(const VisibilityMatrix& a, const VisibilityMatrix& b) {
    std::vector<VertexPair> out;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = x + 1; y < a.size(); ++y) {
            const auto u = a.at(x, y), v = b.at(x, y);
            if ((u == Visibility::Internal && v == Visibility::External) ||
                (u == Visibility::External && v == Visibility::Internal))
                out.emplace_back(x, y);
        }
    return out;
}

std::vector<VertexPair> visibility_differences(const VisibilityMatrix& a,
                                               const VisibilityMatrix& b) {
    std::vector<VertexPair> out;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = x + 1; y < a.size(); ++y)
            if (a.at(x, y) != b.at(x, y)) out.emplace_back(x, y);
    return out;
}

nlohmann::json pairs_json(const std::vector<VertexPair>& ps) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [x, y] : ps) arr.push_back({x, y});
    return arr;
}

std::vector<VertexPair> pairs_from_json(const nlohmann::json& j) {
    std::vector<VertexPair> out;
    for (const auto& p : j) out.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    return out;
}

std::vector<EdgeClassification> classify(const Polygon& p, const ZPTable& zt) {
    const auto pe = polygon_edges(p);
    const auto he = hull_edges(p);
    return classify_edges(zt, vertex_flags(p), pe, he);
}

/// Runs fn(trial) for trials [begin, end) on the worker pool; results are
/// returned in trial order so merging stays deterministic.
template <class Out, class Fn>
std::vector<Out> run_chunk(std::uint64_t begin, std::uint64_t end, unsigned workers, Fn fn) {
    std::vector<Out> out(end - begin);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::uint64_t t = begin + w; t < end; t += workers) out[t - begin] = fn(t);
        });
    for (auto& th : pool) th.join();
    return out;
}

template <class Out, class Fn, class Merge>
void run_trials(const FuzzOptions& o, Fn fn, Merge merge) {
    const unsigned workers =
        o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t chunk = 256ULL * workers;
    for (std::uint64_t b = 0; b < o.budget; b += chunk) {
        const std::uint64_t e = std::min(o.budget, b + chunk);
        auto outs = run_chunk<Out>(b, e, workers, fn);
        for (auto& r : outs) merge(r);
    }
}

std::optional<Polygon> try_generate(const FuzzOptions& o, std::uint64_t ts) {
    const std::size_t n = trial_n(o, ts);
    try {
        return generate_random_polygon(n, ts, PolygonStyle::Generic, trial_range(o, n));
    } catch (const Error&) {
        return std::nullopt;
    }
}

// ---- collision modes ------------------------------------------------------

struct CollisionTrial {
    std::uint64_t seed = 0;
    std::optional<Polygon> poly;  ///< relabeled to the canonical rotation
    std::string key;
};

struct Bucket {
    std::uint64_t seed;
    Polygon poly;
    VisibilityMatrix vis;
    std::vector<VertexPair> hull;
};

std::optional<FuzzFinding> collision_finding(FuzzMode mode, const Polygon& a, const Polygon& b,
                                             const VisibilityMatrix& va,
                                             const VisibilityMatrix& vb,
                                             const std::vector<VertexPair>& ha,
                                             const std::vector<VertexPair>& hb) {
    FuzzFinding f;
    f.mode = mode;
    f.polygons = {a, b};
    if (mode == FuzzMode::ZPCollision) {
        auto d = ie_disagreements(va, vb);
        if (d.empty()) return std::nullopt;
        f.properties = {{"ie_disagreements", pairs_json(d)}};
    } else {
        auto d = visibility_differences(va, vb);
        const bool hull_differs = ha != hb;
        if (d.empty() && !hull_differs) return std::nullopt;
        f.properties = {{"visibility_differences", pairs_json(d)},
                        {"hull_edges_a", pairs_json(ha)},
                        {"hull_edges_b", pairs_json(hb)},
                        {"hull_differs", hull_differs}};
    }
    return f;
}

void collision_campaign(const FuzzOptions& o, FuzzReport& rep) {
    const bool zp_mode = o.mode == FuzzMode::ZPCollision;
    for (const auto& pair : o.seeded) {
        const auto eq = zp_mode ? verify_zp_equivalence(pair) : verify_pp_equivalence(pair);
        if (!eq.equal) continue;
        auto f = collision_finding(o.mode, pair.a, pair.b, visibility_oracle(pair.a),
                                   visibility_oracle(pair.b), sorted_hull_edges(pair.a),
                                   sorted_hull_edges(pair.b));
        if (!f) continue;
        f->verified = reverify_finding(*f);
        rep.findings.push_back(std::move(*f));
    }

    std::unordered_map<std::string, std::vector<Bucket>> seen;
    auto trial = [&](std::uint64_t t) {
        CollisionTrial r;
        r.seed = trial_seed(o.seed, t);
        auto p = try_generate(o, r.seed);
        if (!p) return r;
        const StabTable st = stab_table(*p);
        std::pair<std::string, std::size_t> k =
            zp_mode ? canonical_key(zp_table(st), code_of<ZP>)
                    : canonical_key(pp_table(st), code_of<PP>);
        r.key = std::move(k.first);
        r.poly = k.second ? rotated(*p, k.second) : *p;
        return r;
    };
    auto merge = [&](CollisionTrial& r) {
        ++rep.trials;
        if (!r.poly) return;
        auto& bucket = seen[r.key];
        VisibilityMatrix vis = visibility_oracle(*r.poly);
        auto hull = sorted_hull_edges(*r.poly);
        for (const auto& other : bucket) {
            auto f = collision_finding(o.mode, other.poly, *r.poly, other.vis, vis, other.hull,
                                       hull);
            if (!f) continue;
            f->trial_seeds = {other.seed, r.seed};
            f->verified = reverify_finding(*f);
            rep.findings.push_back(std::move(*f));
            // One finding per new shape is enough.
            break;
        }
        // Keep one representative per distinct outcome.
        const bool novel = std::none_of(bucket.begin(), bucket.end(), [&](const Bucket& b) {
            return b.hull == hull && visibility_differences(b.vis, vis).empty();
        });
        if (novel) bucket.push_back({r.seed, std::move(*r.poly), std::move(vis), std::move(hull)});
    };
    run_trials<CollisionTrial>(o, trial, merge);
    rep.inconclusive = rep.findings.empty();
}

// ---- ambiguous-chain -------------------------------------------------------

struct ChainTrial {
    std::uint64_t seed = 0;
    std::vector<FuzzFinding> findings;
};

std::vector<FuzzFinding> ambiguous_findings(const Polygon& p) {
    std::vector<FuzzFinding> out;
    const auto cls = classify(p, zp_table(stab_table(p)));
    std::vector<VertexPair> amb;
    for (const auto& c : cls)
        if (c.cls == EdgeClass::Ambiguous) amb.push_back(c.pair);
    if (amb.empty()) return out;
    const auto vis = visibility_oracle(p);
    for (const auto& pr : amb) {
        FuzzFinding f;
        f.mode = FuzzMode::AmbiguousChain;
        f.polygons = {p};
        f.properties = {{"pair", {pr.first, pr.second}}};
        try {
            const auto w = explain_ambiguous(p, vis, std::span(&pr, 1)).front();
            f.properties["chain"] = {w.chain.x, w.chain.y};
            f.properties["length"] = w.chain.length;
            f.properties["z_internal"] = w.chain.z_internal;
            f.properties["z_external"] = w.chain.z_external;
        } catch (const Error&) {
            f.properties["chain"] = nullptr;
            f.properties["length"] = 0;
        }
        out.push_back(std::move(f));
    }
    return out;
}

void record_chain(FuzzReport& rep, FuzzFinding& f) {
    ++rep.ambiguous_pairs;
    const std::size_t len = f.properties.at("length").get<std::size_t>();
    rep.min_chain_length = std::min(rep.min_chain_length.value_or(len), len);
    f.verified = reverify_finding(f);
    rep.findings.push_back(std::move(f));
}

void chain_campaign(const FuzzOptions& o, FuzzReport& rep) {
    for (const auto& pair : o.seeded)
        for (const Polygon* p : {&pair.a, &pair.b})
            for (auto& f : ambiguous_findings(*p)) record_chain(rep, f);
    auto trial = [&](std::uint64_t t) {
        ChainTrial r;
        r.seed = trial_seed(o.seed, t);
        if (auto p = try_generate(o, r.seed)) r.findings = ambiguous_findings(*p);
        return r;
    };
    auto merge = [&](ChainTrial& r) {
        ++rep.trials;
        for (auto& f : r.findings) {
            f.trial_seeds = {r.seed};
            record_chain(rep, f);
        }
    };
    run_trials<ChainTrial>(o, trial, merge);
}

// ---- weak-info-compare -----------------------------------------------------

std::size_t head_tail_raw_diffs(const StabTable& a, const StabTable& b) {
    std::size_t d = 0;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y)
            if (x != y) d += (a.at(x, y).tail != b.at(x, y).tail) + (a.at(x, y).head != b.at(x, y).head);
    return d;
}

struct WeakTrial {
    std::uint64_t seed = 0;
    std::optional<FuzzFinding> finding;
};

void weak_campaign(const FuzzOptions& o, FuzzReport& rep) {
    auto record = [&](FuzzFinding f) {
        ++rep.near_pairs;
        rep.raw_head_tail_diffs += f.properties.at("raw_head_tail_diffs").get<std::size_t>();
        f.verified = reverify_finding(f);
        rep.findings.push_back(std::move(f));
    };
    for (const auto& pair : o.seeded) {
        if (!verify_zp_equivalence(pair).equal) continue;
        FuzzFinding f;
        f.mode = FuzzMode::WeakInfoCompare;
        f.polygons = {pair.a, pair.b};
        f.properties = {{"raw_head_tail_diffs",
                         head_tail_raw_diffs(stab_table(pair.a), stab_table(pair.b)) }};
        record(std::move(f));
    }
    auto trial = [&](std::uint64_t t) {
        WeakTrial r;
        r.seed = trial_seed(o.seed, t);
        auto p = try_generate(o, r.seed);
        if (!p) return r;
        const StabTable sp = stab_table(*p);
        const ZPTable zp = zp_table(sp);
        std::mt19937_64 rng(r.seed);
        const Coord span = trial_range(o, p->size()) / 8 + 1;
        std::uniform_int_distribution<Coord> d(-span, span);
        // Nudge one vertex until the ZP table survives but a raw count moves.
        for (int k = 0; k < 64; ++k) {
            std::vector<Point> v(p->vertices().begin(), p->vertices().end());
            auto& q = v[rng() % v.size()];
            q.x += d(rng);
            q.y += d(rng);
            try {
                Polygon moved = load_polygon(std::move(v));
                if (moved.was_reversed()) continue;
                const StabTable sm = stab_table(moved);
                if (!(zp_table(sm) == zp)) continue;
                const std::size_t diffs = head_tail_raw_diffs(sp, sm);
                if (diffs == 0) continue;
                FuzzFinding f;
                f.mode = FuzzMode::WeakInfoCompare;
                f.polygons = {*p, moved};
                f.properties = {{"raw_head_tail_diffs", diffs}};
                r.finding = std::move(f);
                break;
            } catch (const Error&) {
            }
        }
        return r;
    };
    auto merge = [&](WeakTrial& r) {
        ++rep.trials;
        if (!r.finding) return;
        r.finding->trial_seeds = {r.seed};
        record(std::move(*r.finding));
    };
    run_trials<WeakTrial>(o, trial, merge);
}

}  // namespace

const char* to_string(FuzzMode m) {
    switch (m) {
        case FuzzMode::ZPCollision: return "zp-collision";
        case FuzzMode::PureParityCollision: return "pure-parity-collision";
        case FuzzMode::AmbiguousChain: return "ambiguous-chain";
        case FuzzMode::WeakInfoCompare: return "weak-info-compare";
    }
    return "?";
}

FuzzMode parse_fuzz_mode(const std::string& s) {
    for (auto m : {FuzzMode::ZPCollision, FuzzMode::PureParityCollision, FuzzMode::AmbiguousChain,
                   FuzzMode::WeakInfoCompare})
        if (s == to_string(m)) return m;
    throw Error(ErrorCode::Parse, "unknown fuzz mode: " + s);
}

FuzzReport fuzz_campaign(const FuzzOptions& o) {
    FuzzReport rep;
    rep.mode = o.mode;
    switch (o.mode) {
        case FuzzMode::ZPCollision:
        case FuzzMode::PureParityCollision: collision_campaign(o, rep); break;
        case FuzzMode::AmbiguousChain: chain_campaign(o, rep); break;
        case FuzzMode::WeakInfoCompare: weak_campaign(o, rep); break;
    }
    return rep;
}

bool reverify_finding(const FuzzFinding& f) {
    try {
        switch (f.mode) {
            case FuzzMode::ZPCollision:
            case FuzzMode::PureParityCollision: {
                if (f.polygons.size() != 2) return false;
                const auto& a = f.polygons[0];
                const auto& b = f.polygons[1];
                if (a.size() != b.size()) return false;
                const StabTable sa = brute_stab_table(a), sb = brute_stab_table(b);
                const auto va = visibility_oracle(a), vb = visibility_oracle(b);
                if (f.mode == FuzzMode::ZPCollision) {
                    if (!(zp_table(sa) == zp_table(sb))) return false;
                    const auto d = ie_disagreements(va, vb);
                    return !d.empty() && d == pairs_from_json(f.properties.at("ie_disagreements"));
                }
                if (!(pp_table(sa) == pp_table(sb))) return false;
                const auto d = visibility_differences(va, vb);
                const auto ha = sorted_hull_edges(a), hb = sorted_hull_edges(b);
                return (!d.empty() || ha != hb) &&
                       d == pairs_from_json(f.properties.at("visibility_differences"));
            }
            case FuzzMode::AmbiguousChain: {
                if (f.polygons.size() != 1) return false;
                const auto& p = f.polygons[0];
                const VertexPair pr{f.properties.at("pair")[0].get<std::size_t>(),
                                    f.properties.at("pair")[1].get<std::size_t>()};
                const auto cls = classify(p, zp_table(brute_stab_table(p)));
                const auto it = std::find_if(cls.begin(), cls.end(),
                                             [&](const auto& c) { return c.pair == pr; });
                if (it == cls.end() || it->cls != EdgeClass::Ambiguous) return false;
                const auto& ch = f.properties.at("chain");
                if (ch.is_null()) return false;
                const auto w = is_triangular_chain(p, ch[0].get<std::size_t>(), ch[1].get<std::size_t>());
                return w && w->length == f.properties.at("length").get<std::size_t>();
            }
            case FuzzMode::WeakInfoCompare: {
                if (f.polygons.size() != 2) return false;
                const StabTable sa = brute_stab_table(f.polygons[0]);
                const StabTable sb = brute_stab_table(f.polygons[1]);
                return zp_table(sa) == zp_table(sb) &&
                       head_tail_raw_diffs(sa, sb) ==
                           f.properties.at("raw_head_tail_diffs").get<std::size_t>();
            }
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

nlohmann::json finding_to_json(const FuzzFinding& f) {
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& p : f.polygons) polys.push_back(polygon_to_json(p));
    return {{"mode", to_string(f.mode)},
            {"trial_seeds", f.trial_seeds},
            {"polygons", polys},
            {"properties", f.properties},
            {"verified", f.verified}};
}

FuzzFinding finding_from_json(const nlohmann::json& j) {
    FuzzFinding f;
    f.mode = parse_fuzz_mode(j.at("mode").get<std::string>());
    f.trial_seeds = j.at("trial_seeds").get<std::vector<std::uint64_t>>();
    for (const auto& p : j.at("polygons")) f.polygons.push_back(polygon_from_json(p));
    f.properties = j.at("properties");
    f.verified = j.value("verified", false);
    return f;
}

nlohmann::json report_summary_json(const FuzzReport& r) {
    nlohmann::json j{{"mode", to_string(r.mode)},
                     {"trials", r.trials},
                     {"findings", r.findings.size()},
                     {"verified", std::count_if(r.findings.begin(), r.findings.end(),
                                                [](const FuzzFinding& f) { return f.verified; })}};
    switch (r.mode) {
        case FuzzMode::ZPCollision:
        case FuzzMode::PureParityCollision: j["inconclusive"] = r.inconclusive; break;
        case FuzzMode::AmbiguousChain:
            j["ambiguous_pairs"] = r.ambiguous_pairs;
            j["min_chain_length"] =
                r.min_chain_length ? nlohmann::json(*r.min_chain_length) : nlohmann::json(nullptr);
            break;
        case FuzzMode::WeakInfoCompare:
            j["near_pairs"] = r.near_pairs;
            j["raw_head_tail_diffs"] = r.raw_head_tail_diffs;
            break;
    }
    return j;
}

}  // namespace zpstab
