#pragma once

#include "zpstab/analysis.hpp"

#include <string>

namespace zpstab {

struct RenderOptions {
    double width = 800;
    double height = 800;
    /// A vertex is drawn on the break frame when its distance from the
    /// median vertex exceeds far_factor times the median distance.
    double far_factor = 20;
};

/// SVG of the polygon with boundary, Internal, External and Ambiguous edges
/// in distinct styles. Far-away vertices sit on a frame around the main
/// view, labelled with their true coordinates; their edges carry a break mark.
std::string render_svg(const AnalysisResult& r, const RenderOptions& opt = {});

/// Indices of the vertices render_svg would place on the break frame.
std::vector<std::size_t> far_vertices(const Polygon& poly, double far_factor = 20);

}  // namespace zpstab
