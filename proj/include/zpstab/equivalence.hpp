#pragma once

#include "zpstab/polygon.hpp"
#include "zpstab/stabbing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zpstab {

/// Two polygons with the same vertex count and a vertex correspondence
/// (b index for each a index; identity when empty).
struct PolygonPair {
    Polygon a;
    Polygon b;
    std::vector<std::size_t> correspondence;
};

struct ComponentDiff {
    VertexPair pair;  ///< ordered, in A's labels
    Component component = Component::Tail;
    ZP a = ZP::Zero;
    ZP b = ZP::Zero;
};

struct EquivalenceReport {
    bool equal = true;
    std::size_t compared = 0;  ///< 3 * C(n, 2)
    std::optional<ComponentDiff> first_diff;
    /// Unordered pairs whose classes agree while the raw counts do not.
    std::size_t raw_diffs = 0;
    std::vector<std::string> notes;
};

/// Compares the zero-parity classes of every pair in both orientations.
/// Throws InconsistentInput when the sizes or the correspondence disagree.
EquivalenceReport verify_zp_equivalence(const PolygonPair& pair);

/// Same comparison over pure-parity classes; used by the collision fuzzer.
EquivalenceReport verify_pp_equivalence(const PolygonPair& pair);

}  // namespace zpstab
