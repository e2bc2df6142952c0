#pragma once

#include "zpstab/stabbing.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace zpstab {

struct CurvePoint {
    double x = 0;
    double y = 0;
};

/// Dense counterclockwise sampling of a smooth closed curve; sample i sits
/// at parameter i / M.
struct CurveSample {
    std::vector<CurvePoint> points;
    std::vector<double> params;
    double min_curvature_radius = 0;  ///< estimated from consecutive triples
    double max_turn = 0;              ///< largest turning angle per sample, radians
    double diameter = 0;              ///< bounding-box diagonal

    std::size_t size() const noexcept { return points.size(); }
};

struct CurveOptions {
    double max_turn = 0.25;  ///< density bound on the turning angle per sample
};

/// Validates a closed sample list (simple polyline, turning-angle bound)
/// and orients it counterclockwise. Throws DegenerateInput or NotSimple.
CurveSample make_curve(std::vector<CurvePoint> pts, const CurveOptions& opt = {});

CurveSample ellipse_curve(std::size_t m, double a = 2.0, double b = 1.0);
/// Circle with one smooth inward dent: a single concavity.
CurveSample bean_curve(std::size_t m);
/// r = 1 + 0.3 cos(5 theta).
CurveSample star_curve(std::size_t m);
/// "ellipse", "bean" or "star"; throws Parse otherwise.
CurveSample named_curve(const std::string& name, std::size_t m);

/// {"samples": [[x, y], ...], "closed": true}
CurveSample curve_from_json(const nlohmann::json& j, const CurveOptions& opt = {});
nlohmann::json curve_to_json(const CurveSample& c);

struct ZPPiece {
    double t_begin = 0;  ///< parameter interval [t_begin, t_end)
    double t_end = 0;
    std::size_t first = 0;  ///< sample range covered
    std::size_t last = 0;
    ZP cls = ZP::Zero;
};

enum class ZPFunctionKind { Body, Tail, Head };

struct DiscontinuityPattern {
    ZPFunctionKind function = ZPFunctionKind::Body;
    std::size_t sample = 0;
    double at = 0;
    ZP before = ZP::Zero;
    ZP value = ZP::Zero;
    ZP after = ZP::Zero;
};

/// Piecewise classes of B_x, T_x and H_x over y, merged into equal runs.
/// The self sample x is excluded.
struct ZPFunction {
    std::size_t x = 0;
    double t = 0;
    std::vector<ZPPiece> body, tail, head;
    std::vector<DiscontinuityPattern> discontinuities;
};

/// Crossing counts of line(x, y) with the polyline, per component, skipping
/// the segments incident to x and y. nullopt when a crossing decision falls
/// inside the tangency guard band.
std::optional<StabTriple> curve_stab(const CurveSample& c, std::size_t x, std::size_t y,
                                     double tolerance = 1e-11);

/// Throws DegenerateTangency (naming the offending t) if any y is inside the
/// guard band.
ZPFunction zp_functions(const CurveSample& c, std::size_t x, double tolerance = 1e-11);

enum class ChordClass { Internal, External, Unclassifiable };
enum class ChordRule { OddZeroEven, EvenZeroOdd, HeadParity, None };

const char* to_string(ChordClass c);
const char* to_string(ChordRule r);

struct ChordClassification {
    ChordClass cls = ChordClass::Unclassifiable;
    ChordRule rule = ChordRule::None;
    /// B_x at y - 1, y, y + 1.
    ZP before = ZP::Zero, value = ZP::Zero, after = ZP::Zero;
    /// Pattern around a zero that none of the rules explains (logged, not assumed away).
    bool unexplained_pattern = false;
};

/// Requires B_x(y) = Zero (throws InconsistentInput otherwise). Rules in
/// order: o/z/e -> External, e/z/o -> Internal; then an interval next to y
/// where B_x stays Zero and H_x is constant decides by the parity of H_x.
ChordClassification classify_chord(const CurveSample& c, std::size_t x, std::size_t y,
                                   double tolerance = 1e-11);

/// Midpoint inside/outside oracle.
bool chord_midpoint_inside(const CurveSample& c, std::size_t x, std::size_t y);
/// True when the open chord crosses no polyline segment.
bool chord_visible(const CurveSample& c, std::size_t x, std::size_t y, double tolerance = 1e-11);

/// Nearest sample index to parameter t.
std::size_t sample_at(const CurveSample& c, double t);

}  // namespace zpstab
