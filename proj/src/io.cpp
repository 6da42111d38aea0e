#include "mocposite/io.hpp"

#include <fstream>

namespace mocposite {

using nlohmann::json;

namespace {

const json& require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw UsageError(std::string("json: missing field \"") + key + "\"");
  return j.at(key);
}

double number_from_json(const json& j, const char* what) {
  if (!j.is_number()) throw UsageError(std::string("json: ") + what + " must be a number");
  return j.get<double>();
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw UsageError("json: a complex number must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json to_json(const PolyPath& path) {
  json pts = json::array();
  for (Complex p : path.points) pts.push_back(to_json(p));
  return json{{"points", std::move(pts)}, {"closed", path.closed}};
}

PolyPath path_from_json(const json& j) {
  PolyPath path;
  const json& pts = require_field(j, "points");
  if (!pts.is_array()) throw UsageError("json: \"points\" must be an array");
  for (const auto& p : pts) path.points.push_back(complex_from_json(p));
  const json& closed = require_field(j, "closed");
  if (!closed.is_boolean()) throw UsageError("json: \"closed\" must be a boolean");
  path.closed = closed.get<bool>();
  return path;
}

json to_json(const SlitDomain& domain) {
  json slits = json::array();
  for (const auto& slit : domain.slits) {
    json samples = json::array();
    for (Complex p : slit.samples) samples.push_back(to_json(p));
    json entry{{"samples", std::move(samples)}};
    if (slit.unbounded_tail) entry["tail"] = to_json(*slit.unbounded_tail);
    slits.push_back(std::move(entry));
  }
  json punctures = json::array();
  for (Complex p : domain.punctures) punctures.push_back(to_json(p));
  return json{{"slits", std::move(slits)},
              {"punctures", std::move(punctures)},
              {"clearance", domain.clearance}};
}

SlitDomain domain_from_json(const json& j) {
  SlitDomain domain;
  const json& slits = require_field(j, "slits");
  if (!slits.is_array()) throw UsageError("json: \"slits\" must be an array");
  for (const auto& entry : slits) {
    SlitCurve slit;
    const json& samples = require_field(entry, "samples");
    if (!samples.is_array()) throw UsageError("json: slit \"samples\" must be an array");
    for (const auto& p : samples) slit.samples.push_back(complex_from_json(p));
    if (entry.contains("tail")) slit.unbounded_tail = complex_from_json(entry.at("tail"));
    domain.slits.push_back(std::move(slit));
  }
  if (j.contains("punctures")) {
    const json& punctures = j.at("punctures");
    if (!punctures.is_array()) throw UsageError("json: \"punctures\" must be an array");
    for (const auto& p : punctures) domain.punctures.push_back(complex_from_json(p));
  }
  if (j.contains("clearance"))
    domain.clearance = number_from_json(j.at("clearance"), "\"clearance\"");
  validate(domain);
  return domain;
}

json to_json(const ContinuationTrace& trace) {
  json samples = json::array();
  for (const auto& [z, w] : trace.samples)
    samples.push_back(json::array({to_json(z), to_json(w)}));
  return json{{"samples", std::move(samples)},
              {"terminal", to_json(trace.terminal)},
              {"refinements", trace.refinements}};
}

ContinuationTrace trace_from_json(const json& j) {
  ContinuationTrace trace;
  const json& samples = require_field(j, "samples");
  if (!samples.is_array()) throw UsageError("json: \"samples\" must be an array");
  for (const auto& pair : samples) {
    if (!pair.is_array() || pair.size() != 2)
      throw UsageError("json: each trace sample must be [[re,im],[re,im]]");
    trace.samples.emplace_back(complex_from_json(pair[0]), complex_from_json(pair[1]));
  }
  trace.terminal = complex_from_json(require_field(j, "terminal"));
  const json& refinements = require_field(j, "refinements");
  if (!refinements.is_number_integer())
    throw UsageError("json: \"refinements\" must be an integer");
  trace.refinements = refinements.get<int>();
  return trace;
}

json to_json(const ContourSpec& spec) {
  json j{{"kind", spec.kind == ContourKind::circle ? "circle" : "ellipse"},
         {"center", to_json(spec.center)},
         {"orientation", spec.orientation == Orientation::ccw ? "ccw" : "cw"},
         {"samples", spec.samples}};
  if (spec.kind == ContourKind::circle)
    j["radius"] = spec.radius;
  else
    j["semi_axes"] = json::array({spec.a, spec.b});
  return j;
}

ContourSpec contour_from_json(const json& j) {
  ContourSpec spec;
  const json& kind = require_field(j, "kind");
  if (kind == "circle") {
    spec.kind = ContourKind::circle;
    spec.radius = number_from_json(require_field(j, "radius"), "\"radius\"");
  } else if (kind == "ellipse") {
    spec.kind = ContourKind::ellipse;
    const json& axes = require_field(j, "semi_axes");
    if (!axes.is_array() || axes.size() != 2)
      throw UsageError("json: \"semi_axes\" must be [a, b]");
    spec.a = number_from_json(axes[0], "semi-axis a");
    spec.b = number_from_json(axes[1], "semi-axis b");
  } else {
    throw UsageError("json: contour \"kind\" must be \"circle\" or \"ellipse\"");
  }
  if (j.contains("center")) spec.center = complex_from_json(j.at("center"));
  const json& orientation = require_field(j, "orientation");
  if (orientation == "ccw")
    spec.orientation = Orientation::ccw;
  else if (orientation == "cw")
    spec.orientation = Orientation::cw;
  else
    throw UsageError("json: \"orientation\" must be \"ccw\" or \"cw\"");
  if (j.contains("samples")) {
    const json& samples = j.at("samples");
    if (!samples.is_number_integer()) throw UsageError("json: \"samples\" must be an integer");
    spec.samples = samples.get<int>();
  }
  validate(spec);
  return spec;
}

std::vector<ContourSpec> contours_from_json(const json& j) {
  std::vector<ContourSpec> specs;
  if (j.is_object() && j.contains("contours")) {
    const json& list = j.at("contours");
    if (!list.is_array()) throw UsageError("json: \"contours\" must be an array");
    for (const auto& entry : list) specs.push_back(contour_from_json(entry));
  } else {
    specs.push_back(contour_from_json(j));
  }
  if (specs.empty()) throw UsageError("json: no contours given");
  return specs;
}

json to_json(const VerificationRecord& rec) {
  return json{{"name", rec.name},     {"computed", to_json(rec.computed)},
              {"expected", to_json(rec.expected)}, {"abs_err", rec.abs_err},
              {"tol", rec.tol},       {"pass", rec.pass}};
}

json to_json(const VerificationReport& report) {
  json records = json::array();
  for (const auto& rec : report.records) records.push_back(to_json(rec));
  return json{{"records", std::move(records)},
              {"summary", json{{"total", report.total},
                               {"passed", report.passed},
                               {"wall_time_ms", report.wall_time_ms}}}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw UsageError("json parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace mocposite
