#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mocposite/continuation.hpp"
#include "mocposite/quadrature.hpp"
#include "mocposite/report.hpp"
#include "mocposite/slit_domain.hpp"

namespace mocposite {

// JSON conventions: a complex number is [re, im]; schemas follow the shapes
// noted on each converter.  Malformed input throws UsageError, filesystem
// trouble throws IoError.

nlohmann::json to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

// {"points": [[re,im], ...], "closed": bool}
nlohmann::json to_json(const PolyPath& path);
PolyPath path_from_json(const nlohmann::json& j);

// {"slits": [{"samples": [[re,im], ...], "tail": [re,im]?}, ...],
//  "punctures": [[re,im], ...], "clearance": x}
nlohmann::json to_json(const SlitDomain& domain);
SlitDomain domain_from_json(const nlohmann::json& j);

// {"samples": [[[re,im],[re,im]], ...], "terminal": [re,im], "refinements": n}
nlohmann::json to_json(const ContinuationTrace& trace);
ContinuationTrace trace_from_json(const nlohmann::json& j);

// {"kind": "circle"|"ellipse", "center": [re,im], "radius": x | "semi_axes": [a,b],
//  "orientation": "ccw"|"cw", "samples": n}
nlohmann::json to_json(const ContourSpec& spec);
ContourSpec contour_from_json(const nlohmann::json& j);

// Accepts either one contour object or {"contours": [spec, ...]}.
std::vector<ContourSpec> contours_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationRecord& rec);
nlohmann::json to_json(const VerificationReport& report);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace mocposite
