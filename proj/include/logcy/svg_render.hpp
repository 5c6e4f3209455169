#pragma once

// Deterministic SVG pictures of U^trop: the charts developed into the plane
// starting from chart 1 (cut along the ray of D_n), labeled rays, integral
// points, and optionally a broken line diagram and the dual Liouville path.

#include <optional>
#include <string>

#include "logcy/broken_lines.hpp"
#include "logcy/liouville.hpp"
#include "logcy/manifold.hpp"

namespace logcy {

struct RenderOptions {
    Int point_bound{3};  // integral points with max coordinate <= bound
};

std::string render_svg(const TropManifold& m, const BrokenLineDiagram* diagram,
                       const LiouvillePath* path, const RenderOptions& options = {});

}  // namespace logcy
