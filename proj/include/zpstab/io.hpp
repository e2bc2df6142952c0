#pragma once

#include "zpstab/polygon.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace zpstab {

/// {"vertices": [[x, y], ...]} with integer or decimal-string coordinates
/// (JSON numbers with a fraction are read through their decimal text).
Polygon polygon_from_json(const nlohmann::json& j);

/// Parses text; syntax errors become Error(Parse) with line and column.
nlohmann::json parse_json_text(std::string_view text);
Polygon parse_polygon(std::string_view text);
Polygon read_polygon_file(const std::string& path);
std::string read_text_file(const std::string& path);

/// Integer vertices as loaded (scaled), plus "scale_exponent" when nonzero.
nlohmann::json polygon_to_json(const Polygon& poly);
nlohmann::json points_to_json(std::span<const Point> pts);

}  // namespace zpstab
