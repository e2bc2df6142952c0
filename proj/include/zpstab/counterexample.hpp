#pragma once

#include "zpstab/equivalence.hpp"

#include <string>

namespace zpstab {

/// The frozen pair of 12-vertex polygons with identical zero-parity tables
/// where (0, 8) is an I-edge in A and an E-edge in B. Chains 1..7 lie below
/// segment 0-8 in A and above it in B; 9, 10, 11 are far-away hull vertices.
/// Found offline by tools/counterexample_search and stored as constants.
PolygonPair reconstruct_counterexample();

/// {"A": polygon, "B": polygon}, pretty-printed; the CLI and the service
/// both emit exactly these bytes.
std::string counterexample_json_text();

}  // namespace zpstab
