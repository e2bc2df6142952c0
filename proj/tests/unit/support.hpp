#pragma once

#include "zpstab/polygon.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace support {

inline const std::string data_dir = ZPSTAB_TEST_DATA_DIR;
inline const std::string golden_dir = ZPSTAB_TEST_GOLDEN_DIR;

inline zpstab::Polygon pentagon() { return zpstab::load_polygon({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}}); }

// Top edge pushed down to (5,2); the dent blocks both corner diagonals.
inline zpstab::Polygon dented_square() {
    return zpstab::load_polygon({{0, 0}, {10, 0}, {10, 10}, {5, 2}, {0, 10}});
}

inline zpstab::Polygon convex_ngon(std::size_t n, double r = 1e6) {
    std::vector<zpstab::Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2 * M_PI * (static_cast<double>(i) + 0.1) / static_cast<double>(n);
        pts.push_back({std::llround(r * std::cos(a)), std::llround(r * std::sin(a))});
    }
    return zpstab::load_polygon(pts);
}

}  // namespace support
