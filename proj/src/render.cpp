#include "zpstab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace zpstab {

namespace {

struct Vec {
    double x = 0, y = 0;
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v.empty() ? 0 : v[v.size() / 2];
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* edge_style(EdgeClass c) {
    switch (c) {
        case EdgeClass::Internal: return "stroke:#2e7d32;stroke-width:1.2";
        case EdgeClass::External: return "stroke:#1565c0;stroke-width:1.2;stroke-dasharray:6 4";
        case EdgeClass::Ambiguous: return "stroke:#c62828;stroke-width:2.5;stroke-dasharray:2 3";
        case EdgeClass::Boundary: return "stroke:#000;stroke-width:2";
    }
    return "";
}

}  // namespace

std::vector<std::size_t> far_vertices(const Polygon& poly, double far_factor) {
    const std::size_t n = poly.size();
    std::vector<double> xs, ys;
    for (const auto& p : poly.vertices()) {
        xs.push_back(static_cast<double>(p.x));
        ys.push_back(static_cast<double>(p.y));
    }
    const Vec c{median(xs), median(ys)};
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = std::hypot(xs[i] - c.x, ys[i] - c.y);
    const double r = std::max(median(d), 1.0);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (d[i] > far_factor * r) out.push_back(i);
    if (n - out.size() < 3) out.clear();
    return out;
}

std::string render_svg(const AnalysisResult& r, const RenderOptions& opt) {
    const Polygon& poly = r.polygon;
    const std::size_t n = poly.size();
    const auto far = far_vertices(poly, opt.far_factor);
    std::vector<bool> is_far(n);
    for (auto v : far) is_far[v] = true;

    double lo_x = INFINITY, hi_x = -INFINITY, lo_y = INFINITY, hi_y = -INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
        if (is_far[i]) continue;
        lo_x = std::min(lo_x, static_cast<double>(poly[i].x));
        hi_x = std::max(hi_x, static_cast<double>(poly[i].x));
        lo_y = std::min(lo_y, static_cast<double>(poly[i].y));
        hi_y = std::max(hi_y, static_cast<double>(poly[i].y));
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
    const Vec mid{(lo_x + hi_x) / 2, (lo_y + hi_y) / 2};
    // The core view takes the middle of the canvas; the band outside it is
    // the break frame for far vertices.
    const double margin = far.empty() ? 0.08 : 0.2;
    const double inner = std::min(opt.width, opt.height) * (1 - 2 * margin);
    const double scale = inner / span;
    auto to_screen = [&](Vec p) {
        return Vec{opt.width / 2 + (p.x - mid.x) * scale, opt.height / 2 - (p.y - mid.y) * scale};
    };
    const double frame = std::min(opt.width, opt.height) * (0.5 - margin / 2);
    std::vector<Vec> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec w{static_cast<double>(poly[i].x), static_cast<double>(poly[i].y)};
        if (!is_far[i]) {
            pos[i] = to_screen(w);
            continue;
        }
        const double dx = w.x - mid.x, dy = w.y - mid.y;
        const double t = frame / std::max(std::abs(dx), std::abs(dy));
        pos[i] = {opt.width / 2 + dx * t, opt.height / 2 - dy * t};
    }

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(opt.width) << "\" height=\""
      << num(opt.height) << "\" viewBox=\"0 0 " << num(opt.width) << ' ' << num(opt.height)
      << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
    if (!far.empty()) {
        const double m = std::min(opt.width, opt.height) * margin;
        s << "<rect x=\"" << num(m) << "\" y=\"" << num(m) << "\" width=\"" << num(opt.width - 2 * m)
          << "\" height=\"" << num(opt.height - 2 * m)
          << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"1 4\"/>\n";
    }
    s << "<polygon points=\"";
    for (std::size_t i = 0; i < n; ++i) s << (i ? " " : "") << num(pos[i].x) << ',' << num(pos[i].y);
    s << "\" fill=\"#eeeeee\" stroke=\"none\"/>\n";

    auto line = [&](std::size_t a, std::size_t b, const char* style, const char* cls) {
        s << "<line class=\"" << cls << "\" data-pair=\"" << a << ',' << b << "\" x1=\""
          << num(pos[a].x) << "\" y1=\"" << num(pos[a].y) << "\" x2=\"" << num(pos[b].x)
          << "\" y2=\"" << num(pos[b].y) << "\" style=\"" << style << "\"/>\n";
        if (!is_far[a] && !is_far[b]) return;
        // Break mark: two short strokes across the edge near the far end.
        const std::size_t f = is_far[b] ? b : a, o = f == b ? a : b;
        const double dx = pos[f].x - pos[o].x, dy = pos[f].y - pos[o].y;
        const double len = std::max(std::hypot(dx, dy), 1e-9);
        const Vec u{dx / len, dy / len}, nrm{-u.y, u.x};
        for (double k : {28.0, 34.0}) {
            const Vec c{pos[f].x - u.x * k, pos[f].y - u.y * k};
            s << "<line class=\"break\" x1=\"" << num(c.x - nrm.x * 5 + u.x * 2) << "\" y1=\""
              << num(c.y - nrm.y * 5 + u.y * 2) << "\" x2=\"" << num(c.x + nrm.x * 5 - u.x * 2)
              << "\" y2=\"" << num(c.y + nrm.y * 5 - u.y * 2)
              << "\" style=\"stroke:#555;stroke-width:1.5\"/>\n";
        }
    };
    for (const auto& c : r.classifications)
        if (c.cls != EdgeClass::Boundary) line(c.pair.first, c.pair.second, edge_style(c.cls), to_string(c.cls));
    for (std::size_t i = 0; i < n; ++i) line(i, poly.next(i), edge_style(EdgeClass::Boundary), "Boundary");

    for (std::size_t i = 0; i < n; ++i) {
        const bool convex = r.flags.convex[i];
        s << "<circle cx=\"" << num(pos[i].x) << "\" cy=\"" << num(pos[i].y) << "\" r=\""
          << (is_far[i] ? 6 : 4) << "\" fill=\"" << (convex ? "#000" : "#fff")
          << "\" stroke=\"#000\"" << (is_far[i] ? " stroke-dasharray=\"2 2\"" : "") << "/>\n";
        s << "<text x=\"" << num(pos[i].x + 7) << "\" y=\"" << num(pos[i].y - 7)
          << "\" font-family=\"sans-serif\" font-size=\"13\">" << i;
        if (is_far[i]) s << " (" << poly[i].x << ", " << poly[i].y << ")";
        s << "</text>\n";
    }
    const char* names[] = {"Internal", "External", "Ambiguous", "Boundary"};
    const EdgeClass kinds[] = {EdgeClass::Internal, EdgeClass::External, EdgeClass::Ambiguous,
                               EdgeClass::Boundary};
    for (int k = 0; k < 4; ++k) {
        const double y = 18 + 16 * k;
        s << "<line x1=\"10\" y1=\"" << y << "\" x2=\"40\" y2=\"" << y << "\" style=\""
          << edge_style(kinds[k]) << "\"/><text x=\"46\" y=\"" << y + 4
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << names[k] << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace zpstab
