#include "mocposite/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace mocposite {

namespace {

const char* const kPathPalette[] = {"#2563eb", "#059669", "#7c3aed", "#d97706"};
constexpr int kPaletteSize = 4;
const char* const kPositiveSheet = "#2563eb";
const char* const kNegativeSheet = "#dc2626";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void include(Complex z) {
    min_x = std::min(min_x, z.real());
    max_x = std::max(max_x, z.real());
    min_y = std::min(min_y, z.imag());
    max_y = std::max(max_y, z.imag());
  }
  bool empty() const { return min_x > max_x; }
};

struct Polyline {
  std::vector<Complex> points;
  std::string color;
  double width;
  bool arrow = false;
};

// Accumulates geometry, then emits with a viewport fitted to the non-tail
// content plus a 10% margin.  SVG's y axis points down, so points are emitted
// as (x, -y).
class Scene {
 public:
  void add_line(std::vector<Complex> points, std::string color, double width_factor,
                bool arrow) {
    if (points.size() < 2) return;
    for (Complex p : points) box_.include(p);
    lines_.push_back(Polyline{std::move(points), std::move(color), width_factor, arrow});
  }

  // Tails are excluded from the fit; their drawn length is set at emission.
  void add_tail(Complex origin, Complex direction) {
    box_.include(origin);
    tails_.emplace_back(origin, direction);
  }

  void add_dot(Complex p) {
    box_.include(p);
    dots_.push_back(p);
  }

  std::string emit() const {
    Box box = box_;
    if (box.empty()) box.include(Complex(0, 0));
    double span_x = box.max_x - box.min_x;
    double span_y = box.max_y - box.min_y;
    double diag = std::hypot(span_x, span_y);
    if (diag <= 0) diag = 1.0;
    double margin = 0.1 * std::max(span_x, span_y);
    if (margin <= 0) margin = 0.1 * diag;
    double x0 = box.min_x - margin, y_top = box.max_y + margin;
    double w = span_x + 2 * margin, h = span_y + 2 * margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\""
        << fmt(640.0 * h / w) << "\" viewBox=\"" << fmt(x0) << " " << fmt(-y_top) << " "
        << fmt(w) << " " << fmt(h) << "\">\n";
    out << "  <defs>\n"
        << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">\n"
        << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#374151\"/>\n"
        << "    </marker>\n"
        << "  </defs>\n";

    double tail_len = 0.35 * diag + margin;
    for (const auto& [origin, direction] : tails_) {
      Complex end = origin + tail_len * direction;
      out << "  <line x1=\"" << fmt(origin.real()) << "\" y1=\"" << fmt(-origin.imag())
          << "\" x2=\"" << fmt(end.real()) << "\" y2=\"" << fmt(-end.imag())
          << "\" stroke=\"#111827\" stroke-width=\"" << fmt(0.008 * diag) << "\"/>\n";
    }
    for (const auto& line : lines_) {
      out << "  <polyline fill=\"none\" stroke=\"" << line.color << "\" stroke-width=\""
          << fmt(line.width * diag) << "\"";
      if (line.arrow) out << " marker-end=\"url(#arrow)\"";
      out << " points=\"";
      for (std::size_t i = 0; i < line.points.size(); ++i) {
        if (i) out << " ";
        out << fmt(line.points[i].real()) << "," << fmt(-line.points[i].imag());
      }
      out << "\"/>\n";
    }
    for (Complex p : dots_) {
      out << "  <circle cx=\"" << fmt(p.real()) << "\" cy=\"" << fmt(-p.imag())
          << "\" r=\"" << fmt(0.012 * diag) << "\" fill=\"#111827\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
  }

 private:
  Box box_;
  std::vector<Polyline> lines_;
  std::vector<std::pair<Complex, Complex>> tails_;
  std::vector<Complex> dots_;
};

int sheet_sign(Complex w) {
  if (w.real() > 0) return 1;
  if (w.real() < 0) return -1;
  return w.imag() >= 0 ? 1 : -1;
}

}  // namespace

std::string render_domain_svg(const SlitDomain& domain, const std::vector<PolyPath>& paths) {
  Scene scene;
  for (const auto& slit : domain.slits) {
    scene.add_line(slit.samples, "#111827", 0.008, false);
    if (slit.unbounded_tail) scene.add_tail(slit.samples.back(), *slit.unbounded_tail);
  }
  for (Complex p : domain.punctures) scene.add_dot(p);
  for (std::size_t i = 0; i < paths.size(); ++i)
    scene.add_line(paths[i].points, kPathPalette[i % kPaletteSize], 0.005, true);
  return scene.emit();
}

std::string render_trace_svg(const ContinuationTrace& trace) {
  Scene scene;
  if (trace.samples.size() >= 2) {
    std::vector<Complex> run{trace.samples.front().first};
    int sign = sheet_sign(trace.samples[1].second);
    for (std::size_t i = 1; i < trace.samples.size(); ++i) {
      int s = sheet_sign(trace.samples[i].second);
      if (s != sign) {
        // close the run at the flip point and start the next color there
        run.push_back(trace.samples[i].first);
        scene.add_line(std::move(run), sign > 0 ? kPositiveSheet : kNegativeSheet, 0.005,
                       false);
        run = {trace.samples[i].first};
        sign = s;
      } else {
        run.push_back(trace.samples[i].first);
      }
    }
    scene.add_line(std::move(run), sign > 0 ? kPositiveSheet : kNegativeSheet, 0.005, true);
  }
  return scene.emit();
}

std::string render_contours_svg(const std::vector<ContourSpec>& contours) {
  Scene scene;
  for (std::size_t i = 0; i < contours.size(); ++i) {
    const ContourSpec& spec = contours[i];
    validate(spec);
    const int N = 256;
    std::vector<Complex> points;
    points.reserve(N + 1);
    for (int j = 0; j <= N; ++j) {
      double theta = 2 * kPi * j / N;
      if (spec.orientation == Orientation::cw) theta = -theta;
      points.push_back(contour_point(spec, theta));
    }
    scene.add_line(std::move(points), kPathPalette[i % kPaletteSize], 0.005, true);
  }
  return scene.emit();
}

}  // namespace mocposite
