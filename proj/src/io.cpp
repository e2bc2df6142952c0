#include "zpstab/io.hpp"

#include <fstream>
#include <sstream>

namespace zpstab {

namespace {

std::string coordinate_text(const nlohmann::json& v, std::size_t i) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer() || v.is_number_unsigned() || v.is_number_float()) return v.dump();
    throw Error(ErrorCode::Parse, "vertex " + std::to_string(i) + ": coordinate is not a number");
}

}  // namespace

Polygon polygon_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw Error(ErrorCode::Parse, "expected an object with a \"vertices\" array");
    const auto& vs = j.at("vertices");
    if (!vs.is_array()) throw Error(ErrorCode::Parse, "\"vertices\" is not an array");
    std::vector<std::pair<std::string, std::string>> raw;
    raw.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& p = vs[i];
        if (!p.is_array() || p.size() != 2)
            throw Error(ErrorCode::Parse, "vertex " + std::to_string(i) + " is not an [x, y] pair");
        raw.emplace_back(coordinate_text(p[0], i), coordinate_text(p[1], i));
    }
    return load_polygon_decimal(raw);
}

nlohmann::json parse_json_text(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                          std::to_string(col) + ": " + e.what());
    }
}

Polygon parse_polygon(std::string_view text) { return polygon_from_json(parse_json_text(text)); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Polygon read_polygon_file(const std::string& path) {
    try {
        return parse_polygon(read_text_file(path));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

nlohmann::json points_to_json(std::span<const Point> pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) arr.push_back({p.x, p.y});
    return arr;
}

nlohmann::json polygon_to_json(const Polygon& poly) {
    nlohmann::json j{{"vertices", points_to_json(poly.vertices())}};
    if (poly.scale_exponent() != 0) j["scale_exponent"] = poly.scale_exponent();
    return j;
}

}  // namespace zpstab
