// Command-line front end. Every subcommand prints text or JSON (--format)
// and exits nonzero with a structured error on domain failures.
#include "zpstab/analysis.hpp"
#include "zpstab/continuous.hpp"
#include "zpstab/counterexample.hpp"
#include "zpstab/fuzz.hpp"
#include "zpstab/io.hpp"
#include "zpstab/render.hpp"
#include "zpstab/service.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>

using namespace zpstab;

namespace {

bool json_out = false;

void emit(const nlohmann::json& j, const std::string& text) {
    if (json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
    out << bytes;
}

int cmd_analyze(const std::string& path, bool timing) {
    const auto r = analyze(read_polygon_file(path));
    emit(analysis_to_json(r, timing), table_dump_text(r));
    return 0;
}

int cmd_classify(const std::string& path) {
    const auto r = analyze(read_polygon_file(path));
    emit(classification_json(r), classification_text(r));
    return 0;
}

int cmd_verify_pair(const std::string& a, const std::string& b) {
    const auto rep = verify_zp_equivalence({read_polygon_file(a), read_polygon_file(b), {}});
    emit(equivalence_to_json(rep), equivalence_text(rep));
    return 0;
}

int cmd_fuzz(FuzzOptions o, const std::string& out, bool seed_counterexample) {
    if (seed_counterexample) o.seeded.push_back(reconstruct_counterexample());
    const auto rep = fuzz_campaign(o);
    if (!out.empty()) {
        std::ofstream f(out, std::ios::app);
        if (!f) throw Error(ErrorCode::Parse, "cannot write " + out);
        for (const auto& finding : rep.findings) {
            auto j = finding_to_json(finding);
            j["campaign_seed"] = o.seed;
            f << j.dump() << "\n";
        }
    }
    const auto sum = report_summary_json(rep);
    std::ostringstream text;
    for (const auto& [k, v] : sum.items()) text << k << ' ' << v.dump() << "\n";
    emit(sum, text.str());
    return 0;
}

CurveSample load_curve(const std::string& source, std::size_t m) {
    if (source == "ellipse" || source == "bean" || source == "star") return named_curve(source, m);
    return curve_from_json(parse_json_text(read_text_file(source)));
}

int cmd_continuous(const std::string& curve_source, std::size_t m, const std::string& chords,
                   std::uint64_t seed, const std::string& report) {
    const CurveSample c = load_curve(curve_source, m);
    const std::size_t n = c.size();
    std::vector<std::pair<std::size_t, std::size_t>> todo;
    if (chords == "all") {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y) todo.emplace_back(x, y);
    } else if (chords.rfind("random:", 0) == 0) {
        const std::size_t k = std::stoul(chords.substr(7));
        std::mt19937_64 rng(seed);
        // Random visible chords; the draw limit only guards pathological curves.
        for (std::size_t draws = 0; todo.size() < k && draws < 1000 * k; ++draws) {
            const std::size_t x = rng() % n, y = rng() % n;
            if (x != y && chord_visible(c, x, y)) todo.emplace_back(x, y);
        }
    } else {
        throw Error(ErrorCode::Parse, "--chords must be all or random:K");
    }
    std::size_t visible = 0, classified = 0, agree = 0, unexplained = 0;
    std::map<std::string, std::size_t> rules;
    nlohmann::json rows = nlohmann::json::array();
    for (auto [x, y] : todo) {
        if (!chord_visible(c, x, y)) continue;
        ++visible;
        const auto r = classify_chord(c, x, y);
        ++rules[to_string(r.rule)];
        unexplained += r.unexplained_pattern;
        const bool inside = chord_midpoint_inside(c, x, y);
        if (r.cls != ChordClass::Unclassifiable) {
            ++classified;
            agree += (r.cls == ChordClass::Internal) == inside;
        }
        rows.push_back({{"x", x},
                        {"y", y},
                        {"class", to_string(r.cls)},
                        {"rule", to_string(r.rule)},
                        {"pattern", std::string{letter(r.before), '/', letter(r.value), '/', letter(r.after)}},
                        {"midpoint_inside", inside}});
    }
    nlohmann::json sum{{"samples", n},
                       {"visible_chords", visible},
                       {"classified", classified},
                       {"unclassifiable", visible - classified},
                       {"agree_with_midpoint", agree},
                       {"disagree_with_midpoint", classified - agree},
                       {"unexplained_patterns", unexplained},
                       {"rules", rules}};
    if (!report.empty()) {
        nlohmann::json full = sum;
        full["chords"] = rows;
        write_file(report, full.dump(2) + "\n");
    }
    std::ostringstream text;
    text << "samples " << n << "\nvisible_chords " << visible << "\nclassified " << classified
         << "\nunclassifiable " << visible - classified << "\nagree_with_midpoint " << agree
         << "\ndisagree_with_midpoint " << classified - agree << "\nunexplained_patterns "
         << unexplained << "\n";
    for (const auto& [k, v] : rules) text << "rule " << k << ' ' << v << "\n";
    emit(sum, text.str());
    return 0;
}

int cmd_render(const std::string& path, const std::string& out) {
    const auto r = analyze(read_polygon_file(path));
    const std::string svg = render_svg(r);
    if (out.empty() || out == "-") {
        std::cout << svg;
        return 0;
    }
    write_file(out, svg);
    emit({{"written", out}, {"bytes", svg.size()}}, "wrote " + out + "\n");
    return 0;
}

int cmd_counterexample(const std::string& out_a, const std::string& out_b) {
    const auto pair = reconstruct_counterexample();
    if (!out_a.empty()) write_file(out_a, polygon_to_json(pair.a).dump(2) + "\n");
    if (!out_b.empty()) write_file(out_b, polygon_to_json(pair.b).dump(2) + "\n");
    if (json_out) {
        std::cout << counterexample_json_text();
    } else {
        for (const auto& [name, p] : {std::pair{"A", &pair.a}, std::pair{"B", &pair.b}}) {
            std::cout << name << "\n";
            for (std::size_t i = 0; i < p->size(); ++i)
                std::cout << "  " << i << ' ' << (*p)[i].x << ' ' << (*p)[i].y << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-parity stabbing information: analysis, classification, search"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    std::string path, path_b, out, out_b;
    bool timing = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "dump the stabbing and ZP tables");
    analyze_cmd->add_option("polygon", path, "polygon JSON file")->required();
    analyze_cmd->add_flag("--timing", timing, "include elapsed time (JSON only)");
    add_format(analyze_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "classify visibility edges from ZP information");
    classify_cmd->add_option("polygon", path, "polygon JSON file")->required();
    add_format(classify_cmd);

    auto* verify_cmd = app.add_subcommand("verify-pair", "compare the ZP tables of two polygons");
    verify_cmd->add_option("a", path, "first polygon")->required();
    verify_cmd->add_option("b", path_b, "second polygon")->required();
    add_format(verify_cmd);

    FuzzOptions fo;
    std::string mode = "ambiguous-chain";
    bool seed_ce = false;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "randomized search campaigns");
    fuzz_cmd->add_option("--mode", mode)
        ->check(CLI::IsMember({"zp-collision", "pure-parity-collision", "ambiguous-chain",
                               "weak-info-compare"}))
        ->capture_default_str();
    fuzz_cmd->add_option("--budget", fo.budget, "number of trials")->capture_default_str();
    fuzz_cmd->add_option("--seed", fo.seed)->capture_default_str();
    fuzz_cmd->add_option("--n-min", fo.n_min)->capture_default_str();
    fuzz_cmd->add_option("--n-max", fo.n_max)->capture_default_str();
    fuzz_cmd->add_option("--coord-range", fo.coord_range, "0 picks the mode default");
    fuzz_cmd->add_option("--workers", fo.workers, "0 uses all cores");
    fuzz_cmd->add_option("--out", out, "append findings as JSON lines");
    fuzz_cmd->add_flag("--seed-counterexample", seed_ce, "examine the frozen pair first");
    add_format(fuzz_cmd);

    std::string curve = "bean", chords = "random:500", report;
    std::size_t samples = 2000;
    std::uint64_t chord_seed = 1;
    auto* cont_cmd = app.add_subcommand("continuous", "continuous ZP chord classification");
    cont_cmd->add_option("--curve", curve, "ellipse | bean | star | curve JSON file")->capture_default_str();
    cont_cmd->add_option("--samples", samples, "M for generated curves")->capture_default_str();
    cont_cmd->add_option("--chords", chords, "all | random:K")->capture_default_str();
    cont_cmd->add_option("--seed", chord_seed)->capture_default_str();
    cont_cmd->add_option("--report", report, "write per-chord JSON report");
    add_format(cont_cmd);

    auto* render_cmd = app.add_subcommand("render", "SVG of a polygon with classified edges");
    render_cmd->add_option("polygon", path, "polygon JSON file")->required();
    render_cmd->add_option("--out,-o", out, "SVG path (stdout if omitted)");
    add_format(render_cmd);

    auto* ce_cmd = app.add_subcommand("counterexample", "write the frozen ZP counterexample pair");
    ce_cmd->add_option("--out-a", out, "file for polygon A");
    ce_cmd->add_option("--out-b", out_b, "file for polygon B");
    add_format(ce_cmd);

    std::string host = "127.0.0.1";
    int port = default_port();
    auto* serve_cmd = app.add_subcommand("serve", "HTTP analysis service (port from ZPSTAB_PORT)");
    serve_cmd->add_option("--host", host)->capture_default_str();
    serve_cmd->add_option("--port", port)->capture_default_str();
    add_format(serve_cmd);

    CLI11_PARSE(app, argc, argv);
    json_out = format == "json";
    try {
        if (*analyze_cmd) return cmd_analyze(path, timing);
        if (*classify_cmd) return cmd_classify(path);
        if (*verify_cmd) return cmd_verify_pair(path, path_b);
        if (*fuzz_cmd) {
            fo.mode = parse_fuzz_mode(mode);
            return cmd_fuzz(fo, out, seed_ce);
        }
        if (*cont_cmd) return cmd_continuous(curve, samples, chords, chord_seed, report);
        if (*render_cmd) return cmd_render(path, out);
        if (*ce_cmd) return cmd_counterexample(out, out_b);
        if (*serve_cmd) {
            std::cerr << "listening on " << host << ":" << port << "\n";
            serve(host, port);
            return 0;
        }
    } catch (const Error& e) {
        if (json_out)
            std::cout << error_json(e).dump(2) << "\n";
        else
            std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
