#pragma once

#include <string>
#include <vector>

#include "mocposite/continuation.hpp"
#include "mocposite/quadrature.hpp"
#include "mocposite/slit_domain.hpp"

namespace mocposite {

// Static SVG emission.  Output is a pure function of the input: fixed number
// formatting, fixed element order, no timestamps or random ids.

// Slits as solid polylines (tails drawn as finite extensions), punctures as
// dots, optional paths as arrowed curves.
std::string render_domain_svg(const SlitDomain& domain,
                              const std::vector<PolyPath>& paths = {});

// The z-projection of the trace, colored by the sheet sign of w (Re w > 0 vs
// Re w < 0, ties broken by Im w).
std::string render_trace_svg(const ContinuationTrace& trace);

// Contours as closed arrowed curves; clockwise specs are drawn in reversed
// parameter direction so the arrow shows the orientation.
std::string render_contours_svg(const std::vector<ContourSpec>& contours);

}  // namespace mocposite
