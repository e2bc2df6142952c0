#pragma once

#include "zpstab/equivalence.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zpstab {

enum class FuzzMode { ZPCollision, PureParityCollision, AmbiguousChain, WeakInfoCompare };

const char* to_string(FuzzMode m);
/// Accepts the CLI spellings ("zp-collision", ...); throws Parse otherwise.
FuzzMode parse_fuzz_mode(const std::string& s);

struct FuzzOptions {
    FuzzMode mode = FuzzMode::AmbiguousChain;
    std::uint64_t budget = 1000;  ///< trials
    std::uint64_t seed = 1;
    std::size_t n_min = 4;
    std::size_t n_max = 30;
    /// Zero picks the default range for the mode.
    Coord coord_range = 0;
    unsigned workers = 0;  ///< zero: hardware concurrency
    /// Pairs examined before any random trial (e.g. the frozen counterexample).
    std::vector<PolygonPair> seeded;
};

/// One corpus record. Trial seeds regenerate the polygons; the coordinates
/// are stored as well so a record re-verifies without the generator.
struct FuzzFinding {
    FuzzMode mode = FuzzMode::AmbiguousChain;
    std::vector<std::uint64_t> trial_seeds;  ///< empty for seeded inputs
    std::vector<Polygon> polygons;
    nlohmann::json properties;
    bool verified = false;
};

struct FuzzReport {
    FuzzMode mode = FuzzMode::AmbiguousChain;
    std::uint64_t trials = 0;
    std::vector<FuzzFinding> findings;
    /// Collision modes: no finding within the budget.
    bool inconclusive = false;
    /// ambiguous-chain: ambiguous pairs seen and the shortest witness chain.
    std::size_t ambiguous_pairs = 0;
    std::optional<std::size_t> min_chain_length;
    /// weak-info-compare: ZP-equal near pairs and their differing raw entries.
    std::size_t near_pairs = 0;
    std::size_t raw_head_tail_diffs = 0;
};

FuzzReport fuzz_campaign(const FuzzOptions& options);

/// Re-derives a finding's claims from its coordinates with the brute-force
/// stabbing oracle and the coordinate visibility oracle.
bool reverify_finding(const FuzzFinding& f);

nlohmann::json finding_to_json(const FuzzFinding& f);
FuzzFinding finding_from_json(const nlohmann::json& j);
nlohmann::json report_summary_json(const FuzzReport& r);

}  // namespace zpstab
