#include "zpstab/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zpstab {

namespace {

double cross(const CurvePoint& o, const CurvePoint& a, const CurvePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool segments_cross(const CurvePoint& a, const CurvePoint& b, const CurvePoint& c,
                    const CurvePoint& d) {
    const double d1 = cross(a, b, c), d2 = cross(a, b, d);
    const double d3 = cross(c, d, a), d4 = cross(c, d, b);
    // Touching counts too: the sample list must stay clear of itself.
    return ((d1 >= 0) != (d2 >= 0) || d1 == 0 || d2 == 0) &&
           ((d3 >= 0) != (d4 >= 0) || d3 == 0 || d4 == 0);
}

// Sample angles are offset by a fraction of a step so mirror-symmetric
// shapes do not get mirror-symmetric samples (exactly collinear triples).
constexpr double kPhase = 0.37;

double angle(std::size_t i, std::size_t m) {
    return 2 * std::numbers::pi * (static_cast<double>(i) + kPhase) / static_cast<double>(m);
}

CurveSample polar_curve(std::size_t m, double (*r)(double)) {
    std::vector<CurvePoint> pts(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double th = angle(i, m);
        pts[i] = {r(th) * std::cos(th), r(th) * std::sin(th)};
    }
    return make_curve(std::move(pts));
}

std::size_t wrap(std::ptrdiff_t i, std::size_t m) {
    const auto mm = static_cast<std::ptrdiff_t>(m);
    return static_cast<std::size_t>(((i % mm) + mm) % mm);
}

}  // namespace

CurveSample make_curve(std::vector<CurvePoint> pts, const CurveOptions& opt) {
    const std::size_t m = pts.size();
    if (m < 3) throw Error(ErrorCode::TooFewVertices, "a curve needs at least 3 samples");
    double area = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % m];
        if (p.x == q.x && p.y == q.y)
            throw Error(ErrorCode::DegenerateInput, "repeated sample " + std::to_string(i));
        area += p.x * q.y - p.y * q.x;
    }
    if (area < 0) std::reverse(pts.begin() + 1, pts.end());

    CurveSample c;
    c.points = std::move(pts);
    c.params.resize(m);
    double lo_x = c.points[0].x, hi_x = lo_x, lo_y = c.points[0].y, hi_y = lo_y;
    c.min_curvature_radius = INFINITY;
    for (std::size_t i = 0; i < m; ++i) {
        c.params[i] = static_cast<double>(i) / static_cast<double>(m);
        const auto& a = c.points[(i + m - 1) % m];
        const auto& b = c.points[i];
        const auto& d = c.points[(i + 1) % m];
        lo_x = std::min(lo_x, b.x), hi_x = std::max(hi_x, b.x);
        lo_y = std::min(lo_y, b.y), hi_y = std::max(hi_y, b.y);
        const double turn = std::abs(std::atan2(cross(a, b, d) - cross(a, b, b),
                                                (b.x - a.x) * (d.x - b.x) + (b.y - a.y) * (d.y - b.y)));
        c.max_turn = std::max(c.max_turn, turn);
        const double ab = std::hypot(b.x - a.x, b.y - a.y), bd = std::hypot(d.x - b.x, d.y - b.y),
                     ad = std::hypot(d.x - a.x, d.y - a.y);
        const double twice_area = std::abs(cross(a, b, d));
        if (twice_area > 0) c.min_curvature_radius = std::min(c.min_curvature_radius, ab * bd * ad / (2 * twice_area));
    }
    c.diameter = std::hypot(hi_x - lo_x, hi_y - lo_y);
    if (c.max_turn > opt.max_turn)
        throw Error(ErrorCode::DegenerateInput,
                    "sampling too coarse: turning angle " + std::to_string(c.max_turn) +
                        " exceeds " + std::to_string(opt.max_turn));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 2; j < m; ++j) {
            if (i == 0 && j == m - 1) continue;
            if (segments_cross(c.points[i], c.points[i + 1], c.points[j], c.points[(j + 1) % m]))
                throw Error(ErrorCode::NotSimple, "segments " + std::to_string(i) + " and " +
                                                      std::to_string(j) + " intersect");
        }
    return c;
}

CurveSample ellipse_curve(std::size_t m, double a, double b) {
    std::vector<CurvePoint> pts(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double th = angle(i, m);
        pts[i] = {a * std::cos(th), b * std::sin(th)};
    }
    return make_curve(std::move(pts));
}

CurveSample bean_curve(std::size_t m) {
    return polar_curve(m, [](double th) {
        const double d = th - std::numbers::pi / 2;
        return 1.0 - 0.45 * std::exp(-d * d / (2 * 0.35 * 0.35));
    });
}

CurveSample star_curve(std::size_t m) {
    return polar_curve(m, [](double th) { return 1.0 + 0.3 * std::cos(5 * th); });
}

CurveSample named_curve(const std::string& name, std::size_t m) {
    if (name == "ellipse") return ellipse_curve(m);
    if (name == "bean") return bean_curve(m);
    if (name == "star") return star_curve(m);
    throw Error(ErrorCode::Parse, "unknown curve: " + name);
}

CurveSample curve_from_json(const nlohmann::json& j, const CurveOptions& opt) {
    if (!j.is_object() || !j.contains("samples") || !j.at("samples").is_array())
        throw Error(ErrorCode::Parse, "expected an object with a \"samples\" array");
    if (!j.value("closed", false)) throw Error(ErrorCode::Parse, "curve must have \"closed\": true");
    std::vector<CurvePoint> pts;
    for (const auto& p : j.at("samples")) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw Error(ErrorCode::Parse, "sample " + std::to_string(pts.size()) + " is not [x, y]");
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return make_curve(std::move(pts), opt);
}

nlohmann::json curve_to_json(const CurveSample& c) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : c.points) arr.push_back({p.x, p.y});
    return {{"samples", arr}, {"closed", true}};
}

std::optional<StabTriple> curve_stab(const CurveSample& c, std::size_t x, std::size_t y,
                                     double tolerance) {
    const std::size_t m = c.size();
    const auto& P = c.points;
    const CurvePoint& px = P[x];
    const double dx = P[y].x - px.x, dy = P[y].y - px.y;
    const double len = std::hypot(dx, dy);
    const double tol = tolerance * c.diameter;
    StabTriple s;
    for (std::size_t a = 0; a < m; ++a) {
        const std::size_t b = (a + 1) % m;
        if (a == x || b == x || a == y || b == y) continue;
        const double s1 = (dx * (P[a].y - px.y) - dy * (P[a].x - px.x)) / len;
        const double s2 = (dx * (P[b].y - px.y) - dy * (P[b].x - px.x)) / len;
        if ((s1 > tol && s2 > tol) || (s1 < -tol && s2 < -tol)) continue;
        if (std::abs(s1) <= tol || std::abs(s2) <= tol) return std::nullopt;
        const double u = s1 / (s1 - s2);
        const double qx = P[a].x + u * (P[b].x - P[a].x) - px.x;
        const double qy = P[a].y + u * (P[b].y - P[a].y) - px.y;
        const double v = (qx * dx + qy * dy) / (len * len);
        if (std::abs(v) * len <= tol || std::abs(v - 1) * len <= tol) return std::nullopt;
        if (v < 0)
            ++s.tail;
        else if (v < 1)
            ++s.body;
        else
            ++s.head;
    }
    return s;
}

ZPFunction zp_functions(const CurveSample& c, std::size_t x, double tolerance) {
    const std::size_t m = c.size();
    if (x >= m) throw Error(ErrorCode::InconsistentInput, "basepoint is not a sample");
    ZPFunction f;
    f.x = x;
    f.t = c.params[x];
    std::vector<ZPTriple> v(m);
    for (std::size_t y = 0; y < m; ++y) {
        if (y == x) continue;
        const auto s = curve_stab(c, x, y, tolerance);
        if (!s)
            throw Error(ErrorCode::DegenerateTangency,
                        "tangency-ambiguous chord at t=" + std::to_string(c.params[x]) + ", " +
                            std::to_string(c.params[y]));
        v[y] = zp_triple(*s);
    }
    auto t_end = [&](std::size_t i) { return i + 1 == m ? 1.0 : c.params[i + 1]; };
    auto pieces = [&](auto get) {
        std::vector<ZPPiece> out;
        for (std::size_t k = 1; k < m; ++k) {
            const std::size_t y = (x + k) % m;
            const ZP cls = get(v[y]);
            // Runs follow the curve from x; a run is split where it wraps past t = 1.
            if (!out.empty() && out.back().cls == cls && out.back().last + 1 == y) {
                out.back().last = y;
                out.back().t_end = t_end(y);
            } else {
                out.push_back({c.params[y], t_end(y), y, y, cls});
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const ZPPiece& a, const ZPPiece& b) { return a.t_begin < b.t_begin; });
        return out;
    };
    f.body = pieces([](const ZPTriple& z) { return z.body; });
    f.tail = pieces([](const ZPTriple& z) { return z.tail; });
    f.head = pieces([](const ZPTriple& z) { return z.head; });

    auto scan = [&](ZPFunctionKind kind, auto get) {
        for (std::size_t k = 2; k + 1 < m; ++k) {
            const std::size_t y = (x + k) % m;
            const ZP b = get(v[(y + m - 1) % m]), a = get(v[y]), n = get(v[(y + 1) % m]);
            if (b != a || a != n) f.discontinuities.push_back({kind, y, c.params[y], b, a, n});
        }
    };
    scan(ZPFunctionKind::Body, [](const ZPTriple& z) { return z.body; });
    scan(ZPFunctionKind::Tail, [](const ZPTriple& z) { return z.tail; });
    scan(ZPFunctionKind::Head, [](const ZPTriple& z) { return z.head; });
    std::sort(f.discontinuities.begin(), f.discontinuities.end(),
              [](const auto& a, const auto& b) { return a.sample < b.sample; });
    return f;
}

const char* to_string(ChordClass c) {
    switch (c) {
        case ChordClass::Internal: return "Internal";
        case ChordClass::External: return "External";
        case ChordClass::Unclassifiable: return "Unclassifiable";
    }
    return "?";
}

const char* to_string(ChordRule r) {
    switch (r) {
        case ChordRule::OddZeroEven: return "o/z/e";
        case ChordRule::EvenZeroOdd: return "e/z/o";
        case ChordRule::HeadParity: return "head-parity";
        case ChordRule::None: return "none";
    }
    return "?";
}

ChordClassification classify_chord(const CurveSample& c, std::size_t x, std::size_t y,
                                   double tolerance) {
    const std::size_t m = c.size();
    if (x >= m || y >= m || x == y)
        throw Error(ErrorCode::InconsistentInput, "chord endpoints must be distinct samples");
    auto at = [&](std::ptrdiff_t k) -> std::optional<ZPTriple> {
        const std::size_t w = wrap(static_cast<std::ptrdiff_t>(y) + k, m);
        if (w == x) return std::nullopt;
        const auto s = curve_stab(c, x, w, tolerance);
        if (!s) return std::nullopt;
        return zp_triple(*s);
    };
    ChordClassification r;
    const auto mid = at(0);
    if (!mid) return r;
    if (mid->body != ZP::Zero)
        throw Error(ErrorCode::InconsistentInput, "chord is not visible (B_x(y) is not Zero)");
    r.value = ZP::Zero;
    const auto prev = at(-1), next = at(1);
    if (prev && next) {
        r.before = prev->body;
        r.after = next->body;
        if (r.before == ZP::Odd && r.after == ZP::EvenPos) {
            r.cls = ChordClass::External;
            r.rule = ChordRule::OddZeroEven;
            return r;
        }
        if (r.before == ZP::EvenPos && r.after == ZP::Odd) {
            r.cls = ChordClass::Internal;
            r.rule = ChordRule::EvenZeroOdd;
            return r;
        }
    }
    std::optional<bool> decided;
    bool conflict = false;
    for (std::ptrdiff_t s : {1, -1}) {
        const auto a = s > 0 ? next : prev;
        const auto b = at(2 * s);
        if (!a || !b || a->body != ZP::Zero || b->body != ZP::Zero || a->head != b->head) continue;
        const bool internal = a->head != ZP::Odd;
        if (decided && *decided != internal) conflict = true;
        decided = internal;
    }
    if (decided && !conflict) {
        r.cls = *decided ? ChordClass::Internal : ChordClass::External;
        r.rule = ChordRule::HeadParity;
        return r;
    }
    r.unexplained_pattern = conflict || (prev && next && r.before != ZP::Zero &&
                                         r.after != ZP::Zero);
    return r;
}

bool chord_midpoint_inside(const CurveSample& c, std::size_t x, std::size_t y) {
    const CurvePoint q{(c.points[x].x + c.points[y].x) / 2, (c.points[x].y + c.points[y].y) / 2};
    bool inside = false;
    const std::size_t m = c.size();
    for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
        const auto& a = c.points[i];
        const auto& b = c.points[j];
        if ((a.y > q.y) != (b.y > q.y) && q.x < (b.x - a.x) * (q.y - a.y) / (b.y - a.y) + a.x)
            inside = !inside;
    }
    return inside;
}

bool chord_visible(const CurveSample& c, std::size_t x, std::size_t y, double tolerance) {
    const auto s = curve_stab(c, x, y, tolerance);
    return s && s->body == 0;
}

std::size_t sample_at(const CurveSample& c, double t) {
    t -= std::floor(t);
    return static_cast<std::size_t>(std::llround(t * static_cast<double>(c.size()))) % c.size();
}

}  // namespace zpstab
