#pragma once

#include "zpstab/classifier.hpp"
#include "zpstab/equivalence.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace zpstab {

/// Everything the CLI and the service report about one polygon.
struct AnalysisResult {
    Polygon polygon;
    VertexFlags flags;
    StabTable stab;
    ZPTable zp;
    PPTable pp;
    std::vector<EdgeClassification> classifications;
    std::vector<AmbiguityWitness> witnesses;
    /// Ambiguous pairs with no triangular chain (none expected).
    std::vector<VertexPair> unexplained;
    double elapsed_ms = 0;
};

AnalysisResult analyze(const Polygon& poly);

/// Deterministic JSON; timing goes under "meta" only when asked for.
nlohmann::json analysis_to_json(const AnalysisResult& r, bool with_timing = false);
/// One line per ordered pair: x y tail body head and the ZP letters.
std::string table_dump_text(const AnalysisResult& r);
/// One line per visible pair: class, provenance, witness chain if ambiguous.
std::string classification_text(const AnalysisResult& r);
nlohmann::json classification_json(const AnalysisResult& r);

nlohmann::json equivalence_to_json(const EquivalenceReport& r);
std::string equivalence_text(const EquivalenceReport& r);

nlohmann::json error_json(const Error& e);

}  // namespace zpstab
