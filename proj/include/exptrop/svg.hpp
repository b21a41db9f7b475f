#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exptrop/polyhedra.hpp"

namespace exptrop {

/// What render_svg draws in the box [-bound, bound]^2.
struct SvgScene {
    double bound = 4.0;
    std::optional<PolyhedralComplex> complex;
    std::vector<FloatPoint> points;
    /// Direction of a line through the origin (Re(L) for d = 1).
    std::optional<FloatPoint> line;
};

/// Cells clipped to the box (1-cells as line elements, 0-cells as markers, 2-cells as polygons), points as dots.
std::string render_svg(const SvgScene& scene);

}  // namespace exptrop
