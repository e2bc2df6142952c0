#include "support.hpp"

#include "zpstab/analysis.hpp"
#include "zpstab/counterexample.hpp"
#include "zpstab/io.hpp"
#include "zpstab/render.hpp"
#include "zpstab/service.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace zpstab;

namespace {

std::string data(const std::string& name) { return read_text_file(support::data_dir + "/" + name); }
std::string golden(const std::string& name) { return read_text_file(support::golden_dir + "/" + name); }

}  // namespace

TEST_SUITE("service") {

TEST_CASE("health") {
    const auto r = handle_request("GET", "/health", "");
    CHECK(r.status == 200);
    CHECK(parse_json_text(r.body).at("status") == "ok");
}

TEST_CASE("analyze returns the full table") {
    const auto r = handle_request("POST", "/analyze", data("dented_square.json"));
    REQUIRE(r.status == 200);
    const auto j = parse_json_text(r.body);
    CHECK(j.at("n") == 5);
    CHECK(j.at("table").size() == 20);
    CHECK(j.at("classifications").size() == 8);
    CHECK_FALSE(j.contains("meta"));
}

TEST_CASE("error statuses") {
    auto status_and_code = [](const std::string& body) {
        const auto r = handle_request("POST", "/analyze", body);
        return std::pair{r.status, parse_json_text(r.body).at("error").at("code").get<std::string>()};
    };
    CHECK(status_and_code(data("bowtie.json")) == std::pair{400, std::string("NotSimple")});
    CHECK(status_and_code(data("collinear.json")) == std::pair{422, std::string("CollinearTriple")});
    CHECK(status_and_code(R"({"vertices": [[0, 0], [1, 0]]})") ==
          std::pair{400, std::string("TooFewVertices")});
    const auto bad = handle_request("POST", "/analyze", "{\n  \"vertices\": [[0, 0],\n");
    CHECK(bad.status == 400);
    CHECK(bad.body.find("line 3") != std::string::npos);
    CHECK(handle_request("GET", "/nope", "").status == 404);
    CHECK(handle_request("POST", "/verify-pair", R"({"a": {"vertices": []}})").status == 400);
}

TEST_CASE("counterexample bytes") {
    const auto r = handle_request("GET", "/counterexample", "");
    CHECK(r.status == 200);
    CHECK(r.body == counterexample_json_text());
    CHECK(r.body == golden("counterexample.json"));
}

TEST_CASE("verify-pair") {
    const auto ce = parse_json_text(counterexample_json_text());
    const nlohmann::json req{{"a", ce.at("A")}, {"b", ce.at("B")}};
    const auto r = handle_request("POST", "/verify-pair", req.dump());
    REQUIRE(r.status == 200);
    const auto j = parse_json_text(r.body);
    CHECK(j.at("equal") == true);
    CHECK(j.at("compared") == 198);
}

TEST_CASE("service and library output are identical") {
    const std::string body = data("dented_square.json");
    const auto r = handle_request("POST", "/analyze", body);
    const auto direct = analysis_to_json(analyze(read_polygon_file(support::data_dir + "/dented_square.json")));
    CHECK(r.body == direct.dump(2) + "\n");
    CHECK(r.body == golden("dented_square.analysis.json"));
    CHECK(handle_request("POST", "/analyze", body).body == r.body);
}

TEST_CASE("default port") {
    ::unsetenv("ZPSTAB_PORT");
    CHECK(default_port() == 8080);
    ::setenv("ZPSTAB_PORT", "9123", 1);
    CHECK(default_port() == 9123);
    ::setenv("ZPSTAB_PORT", "http", 1);
    CHECK(default_port() == 8080);
    ::unsetenv("ZPSTAB_PORT");
}

TEST_CASE("analysis consistency") {
    const auto r = analyze(reconstruct_counterexample().a);
    CHECK(r.unexplained.empty());
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].chain.z_internal == 10);
    for (const auto& c : r.classifications) CHECK(r.zp.at(c.pair.first, c.pair.second).body == ZP::Zero);
    CHECK(analysis_to_json(r, true).contains("meta"));
}

TEST_CASE("render") {
    const auto r = analyze(reconstruct_counterexample().a);
    CHECK(far_vertices(r.polygon) == std::vector<std::size_t>{9, 10, 11});
    CHECK(far_vertices(support::pentagon()).empty());
    const auto svg = render_svg(r);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    for (const char* cls : {"class=\"Internal\"", "class=\"External\"", "class=\"Ambiguous\"",
                            "class=\"Boundary\"", "class=\"break\"", "data-pair=\"0,8\""})
        CHECK(svg.find(cls) != std::string::npos);
    // Far vertices keep their true coordinates in the label.
    CHECK(svg.find("(-53, 1000000)") != std::string::npos);
    CHECK(render_svg(r) == svg);
}

}  // TEST_SUITE
