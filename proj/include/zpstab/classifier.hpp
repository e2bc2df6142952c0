#pragma once

#include "zpstab/polygon.hpp"
#include "zpstab/stabbing.hpp"

#include <span>
#include <vector>

namespace zpstab {

enum class EdgeClass { Internal, External, Boundary, Ambiguous };

/// Which rule decided a pair.
enum class Provenance {
    Lemma2Convex,
    Lemma2Reflex,
    Lemma3NoOddWitness,
    Lemma3NoEvenWitness,
    Lemma4Propagation,
    HullPocketLid,
    PolygonEdge,
    OrderTypeRefutation,
    Unresolved,
};

const char* to_string(EdgeClass c);
const char* to_string(Provenance p);

struct EdgeClassification {
    VertexPair pair;  ///< x < y
    EdgeClass cls = EdgeClass::Ambiguous;
    Provenance provenance = Provenance::Unresolved;

    friend bool operator==(const EdgeClassification&, const EdgeClassification&) = default;
};

/// For all w in chain [x, y] other than z, Head(w, z) is even (Zero or EvenPos).
bool even_property(const ZPTable& zp, std::size_t x, std::size_t y, std::size_t z);
/// For all w in chain [x, y] other than z, Head(w, z) is odd.
bool odd_property(const ZPTable& zp, std::size_t x, std::size_t y, std::size_t z);

/// Rule stages in the order they run; exposed so tests can reorder them.
/// OrderType searches for triple orientations consistent with the table and
/// the classes known so far; a class with no such orientation is refuted.
/// It only runs while some pair is still unknown.
enum class RuleStage { PolygonEdges, HullLids, Lemma2, Lemma3, Lemma4, OrderType };

struct ClassifierOptions {
    std::vector<RuleStage> order{RuleStage::PolygonEdges, RuleStage::HullLids, RuleStage::Lemma2,
                                 RuleStage::Lemma3,       RuleStage::Lemma4,   RuleStage::OrderType};
};

/// Classifies every visible pair (Body class Zero) as Internal, External,
/// Boundary or Ambiguous from the zero-parity table, the convex/hull flags
/// and the polygon and hull edge sets. Coordinates are never consulted.
/// Output is sorted by pair. Throws InconsistentInput when rules contradict.
std::vector<EdgeClassification> classify_edges(const ZPTable& zp, const VertexFlags& flags,
                                               std::span<const VertexPair> polygon_edges,
                                               std::span<const VertexPair> hull_edges,
                                               const ClassifierOptions& options = {});

struct AmbiguityWitness {
    VertexPair pair;
    TriangularWitness chain;
};

/// For each ambiguous pair, the triangular chain ([x, y] or [y, x]) spanning
/// it; the longer chain wins when both qualify. Throws NoWitnessFound when a
/// pair has none.
std::vector<AmbiguityWitness> explain_ambiguous(const Polygon& poly,
                                                std::span<const VertexPair> ambiguous);
std::vector<AmbiguityWitness> explain_ambiguous(const Polygon& poly, const VisibilityMatrix& vis,
                                                std::span<const VertexPair> ambiguous);

}  // namespace zpstab
