#pragma once

#include "zpstab/stabbing.hpp"

#include <cstdint>

namespace zpstab {

/// Independent stabbing oracle: intersects the full line through x and y
/// with every edge's supporting line, keeps intersections strictly inside
/// the edge, and bins the line parameter t into (-inf,0), (0,1), (1,inf).
/// Shares no crossing logic with stab_triple.
StabTriple brute_stab_triple(const Polygon& poly, std::size_t x, std::size_t y);
StabTable brute_stab_table(const Polygon& poly);

enum class PolygonStyle { Generic, Nontriangular };

/// Seed-deterministic random simple polygon: random points in general
/// position, random order, then 2-opt untangling until simple.
/// Nontriangular style retries until no chain of >= 8 vertices is triangular.
/// Throws GenerationFailed after the retry budget.
Polygon generate_random_polygon(std::size_t n, std::uint64_t seed,
                                PolygonStyle style = PolygonStyle::Generic);

/// Coordinates are drawn from [0, coord_range).
Polygon generate_random_polygon(std::size_t n, std::uint64_t seed, PolygonStyle style,
                                Coord coord_range);

}  // namespace zpstab
