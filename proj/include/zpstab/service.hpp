#pragma once

#include "zpstab/geom.hpp"

#include <string>

namespace zpstab {

struct HttpReply {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
};

/// Stateless request handler behind the HTTP service:
///   POST /analyze       polygon JSON -> analysis JSON
///   POST /verify-pair   {"a": polygon, "b": polygon[, "correspondence": [...]]}
///   GET  /counterexample
///   GET  /health
/// Invalid polygons give 400, general-position violations 422.
HttpReply handle_request(const std::string& method, const std::string& path,
                         const std::string& body);

/// HTTP status for a domain error.
int http_status(ErrorCode code);

/// ZPSTAB_PORT if set and valid, else 8080.
int default_port();

/// Blocks serving on host:port.
void serve(const std::string& host, int port);

}  // namespace zpstab
