#pragma once

// Static SVG drawings of plane tropical curves.

#include <string>
#include <vector>

#include "explograph/tropcurve.hpp"

namespace explograph {

// Viewport: the bounding box of the vertices padded on every side by
// reach · max(1, extent / 2), where reach is the largest |d|∞ over edges and
// ends and extent the larger side of the box. Ends run to the viewport border;
// edges and ends of multiplicity above one carry a label. Marked points are
// drawn when given. Throws NotPlanar unless dim == 2.
std::string render_svg(const TropicalCurve& c, const std::vector<RVec>& points = {});

}  // namespace explograph
