#include "zpstab/analysis.hpp"

#include "zpstab/io.hpp"

#include <chrono>
#include <sstream>

namespace zpstab {

namespace {

const char* component_name(Component c) {
    switch (c) {
        case Component::Tail: return "tail";
        case Component::Body: return "body";
        case Component::Head: return "head";
    }
    return "?";
}

nlohmann::json witness_json(const TriangularWitness& w) {
    return {{"chain", {w.x, w.y}},
            {"length", w.length},
            {"z_internal", w.z_internal},
            {"z_external", w.z_external},
            {"hull", w.hull}};
}

}  // namespace

AnalysisResult analyze(const Polygon& poly) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisResult r{poly, vertex_flags(poly), stab_table(poly), {}, {}, {}, {}, {}, 0};
    r.zp = zp_table(r.stab);
    r.pp = pp_table(r.stab);
    const auto pe = polygon_edges(poly);
    const auto he = hull_edges(poly);
    r.classifications = classify_edges(r.zp, r.flags, pe, he);
    std::vector<VertexPair> amb;
    for (const auto& c : r.classifications)
        if (c.cls == EdgeClass::Ambiguous) amb.push_back(c.pair);
    if (!amb.empty()) {
        const auto vis = visibility_oracle(poly);
        for (const auto& p : amb) {
            try {
                r.witnesses.push_back(explain_ambiguous(poly, vis, std::span(&p, 1)).front());
            } catch (const Error&) {
                r.unexplained.push_back(p);
            }
        }
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

nlohmann::json classification_json(const AnalysisResult& r) {
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : r.classifications)
        cls.push_back({{"pair", {c.pair.first, c.pair.second}},
                       {"class", to_string(c.cls)},
                       {"provenance", to_string(c.provenance)}});
    nlohmann::json wit = nlohmann::json::array();
    for (const auto& w : r.witnesses) {
        auto j = witness_json(w.chain);
        j["pair"] = {w.pair.first, w.pair.second};
        wit.push_back(std::move(j));
    }
    return {{"classifications", cls}, {"witnesses", wit}, {"unexplained", r.unexplained}};
}

nlohmann::json analysis_to_json(const AnalysisResult& r, bool with_timing) {
    const std::size_t n = r.polygon.size();
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            const auto& s = r.stab.at(x, y);
            const auto& z = r.zp.at(x, y);
            const auto& p = r.pp.at(x, y);
            table.push_back({{"x", x},
                             {"y", y},
                             {"tail", s.tail},
                             {"body", s.body},
                             {"head", s.head},
                             {"zp", {to_string(z.tail), to_string(z.body), to_string(z.head)}},
                             {"pp", {to_string(p.tail), to_string(p.body), to_string(p.head)}}});
        }
    nlohmann::json j = classification_json(r);
    j["polygon"] = polygon_to_json(r.polygon);
    j["n"] = n;
    j["flags"] = {{"convex", r.flags.convex}, {"on_hull", r.flags.on_hull}};
    j["table"] = std::move(table);
    if (with_timing) j["meta"] = {{"elapsed_ms", r.elapsed_ms}};
    return j;
}

std::string table_dump_text(const AnalysisResult& r) {
    std::ostringstream out;
    const std::size_t n = r.polygon.size();
    out << "n " << n << "\n";
    out << "convex";
    for (std::size_t v = 0; v < n; ++v) out << ' ' << r.flags.convex[v];
    out << "\nhull";
    for (std::size_t v = 0; v < n; ++v) out << ' ' << r.flags.on_hull[v];
    out << "\n# x y tail body head zp\n";
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            const auto& s = r.stab.at(x, y);
            const auto& z = r.zp.at(x, y);
            out << x << ' ' << y << ' ' << s.tail << ' ' << s.body << ' ' << s.head << ' '
                << letter(z.tail) << letter(z.body) << letter(z.head) << "\n";
        }
    return out.str();
}

std::string classification_text(const AnalysisResult& r) {
    std::ostringstream out;
    std::size_t k = 0;
    for (const auto& c : r.classifications) {
        out << c.pair.first << ' ' << c.pair.second << ' ' << to_string(c.cls) << ' '
            << to_string(c.provenance);
        if (c.cls == EdgeClass::Ambiguous) {
            while (k < r.witnesses.size() && r.witnesses[k].pair < c.pair) ++k;
            if (k < r.witnesses.size() && r.witnesses[k].pair == c.pair) {
                const auto& w = r.witnesses[k].chain;
                out << " chain [" << w.x << "," << w.y << "] length " << w.length << " z_I "
                    << w.z_internal << " z_E " << w.z_external;
            } else {
                out << " no triangular chain";
            }
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::json equivalence_to_json(const EquivalenceReport& r) {
    nlohmann::json j{{"equal", r.equal},
                     {"compared", r.compared},
                     {"raw_diffs", r.raw_diffs},
                     {"notes", r.notes}};
    if (r.first_diff)
        j["first_diff"] = {{"pair", {r.first_diff->pair.first, r.first_diff->pair.second}},
                           {"component", component_name(r.first_diff->component)},
                           {"a", to_string(r.first_diff->a)},
                           {"b", to_string(r.first_diff->b)}};
    else
        j["first_diff"] = nullptr;
    return j;
}

std::string equivalence_text(const EquivalenceReport& r) {
    std::ostringstream out;
    out << (r.equal ? "equal" : "different") << "\ncompared " << r.compared << "\nraw_diffs "
        << r.raw_diffs << "\n";
    if (r.first_diff)
        out << "first_diff (" << r.first_diff->pair.first << "," << r.first_diff->pair.second
            << ") " << component_name(r.first_diff->component) << ' ' << to_string(r.first_diff->a)
            << " vs " << to_string(r.first_diff->b) << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    return out.str();
}

nlohmann::json error_json(const Error& e) {
    return {{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
}

}  // namespace zpstab
