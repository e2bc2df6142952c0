#include "zpstab/service.hpp"

#include "zpstab/analysis.hpp"
#include "zpstab/counterexample.hpp"
#include "zpstab/io.hpp"

#include <httplib.h>

#include <cstdlib>
#include <stdexcept>

namespace zpstab {

int http_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::CollinearTriple: return 422;
        case ErrorCode::TooFewVertices:
        case ErrorCode::NotSimple:
        case ErrorCode::CoordinateRange:
        case ErrorCode::DegenerateInput:
        case ErrorCode::Parse:
        case ErrorCode::InconsistentInput: return 400;
        default: return 500;
    }
}

HttpReply handle_request(const std::string& method, const std::string& path,
                         const std::string& body) {
    auto json_reply = [](int status, const nlohmann::json& j) {
        return HttpReply{status, "application/json", j.dump(2) + "\n"};
    };
    try {
        if (method == "GET" && path == "/health") return json_reply(200, {{"status", "ok"}});
        if (method == "GET" && path == "/counterexample")
            return {200, "application/json", counterexample_json_text()};
        if (method == "POST" && path == "/analyze")
            return json_reply(200, analysis_to_json(analyze(parse_polygon(body))));
        if (method == "POST" && path == "/verify-pair") {
            const auto j = parse_json_text(body);
            if (!j.is_object() || !j.contains("a") || !j.contains("b"))
                throw Error(ErrorCode::Parse, "expected {\"a\": polygon, \"b\": polygon}");
            PolygonPair pair{polygon_from_json(j.at("a")), polygon_from_json(j.at("b")), {}};
            if (j.contains("correspondence"))
                pair.correspondence = j.at("correspondence").get<std::vector<std::size_t>>();
            return json_reply(200, equivalence_to_json(verify_zp_equivalence(pair)));
        }
        return json_reply(404, {{"error", {{"code", "NotFound"}, {"message", method + " " + path}}}});
    } catch (const Error& e) {
        return json_reply(http_status(e.code()), error_json(e));
    } catch (const nlohmann::json::exception& e) {
        return json_reply(400, error_json(Error(ErrorCode::Parse, e.what())));
    }
}

int default_port() {
    if (const char* p = std::getenv("ZPSTAB_PORT")) {
        char* end = nullptr;
        const long v = std::strtol(p, &end, 10);
        if (end != p && *end == '\0' && v > 0 && v < 65536) return static_cast<int>(v);
    }
    return 8080;
}

void serve(const std::string& host, int port) {
    httplib::Server srv;
    auto bind = [](const httplib::Request& req, httplib::Response& res) {
        const HttpReply r = handle_request(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    srv.Get("/health", bind);
    srv.Get("/counterexample", bind);
    srv.Post("/analyze", bind);
    srv.Post("/verify-pair", bind);
    // Lets a browser-based explorer on another origin call the API.
    srv.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    srv.Options(".*", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.status = 204;
    });
    if (!srv.listen(host, port))
        throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
}

}  // namespace zpstab
