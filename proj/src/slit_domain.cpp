#include "mocposite/slit_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mocposite {

namespace {

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }
double dot(Complex u, Complex v) { return u.real() * v.real() + u.imag() * v.imag(); }

// Proper or touching intersection of segment [a,b] with segment [c,d] or with
// the ray o + s*dir (s >= 0).  Near-parallel pairs fall through to the
// endpoint-distance candidates, which are exact for them.
bool segment_segment_cross(Complex a, Complex b, Complex c, Complex d) {
  Complex r = b - a, s = d - c;
  double den = cross(r, s);
  if (std::abs(den) < 1e-300) return false;
  double t = cross(c - a, s) / den;
  double u = cross(c - a, r) / den;
  return t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0;
}

bool segment_ray_cross(Complex a, Complex b, Complex o, Complex dir) {
  Complex r = b - a;
  double den = cross(r, dir);
  if (std::abs(den) < 1e-300) return false;
  double t = cross(o - a, dir) / den;
  double s = cross(o - a, r) / den;
  return t >= 0.0 && t <= 1.0 && s >= 0.0;
}

}  // namespace

double point_segment_distance(Complex p, Complex a, Complex b) {
  Complex ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

double point_ray_distance(Complex p, Complex origin, Complex direction) {
  double s = std::max(0.0, dot(p - origin, direction));
  return std::abs(p - (origin + s * direction));
}

double segment_segment_distance(Complex a, Complex b, Complex c, Complex d) {
  if (segment_segment_cross(a, b, c, d)) return 0.0;
  double m = point_segment_distance(a, c, d);
  m = std::min(m, point_segment_distance(b, c, d));
  m = std::min(m, point_segment_distance(c, a, b));
  m = std::min(m, point_segment_distance(d, a, b));
  return m;
}

double segment_ray_distance(Complex a, Complex b, Complex origin, Complex direction) {
  if (segment_ray_cross(a, b, origin, direction)) return 0.0;
  double m = point_ray_distance(a, origin, direction);
  m = std::min(m, point_ray_distance(b, origin, direction));
  m = std::min(m, point_segment_distance(origin, a, b));
  return m;
}

void validate(const SlitCurve& slit) {
  if (slit.samples.size() < 2) throw UsageError("slit needs at least 2 samples");
  for (const Complex& s : slit.samples) require_finite(s, "slit sample");
  for (std::size_t i = 1; i < slit.samples.size(); ++i) {
    if (slit.samples[i] == slit.samples[i - 1])
      throw UsageError("slit has repeated consecutive samples");
  }
  if (slit.unbounded_tail) {
    require_finite(*slit.unbounded_tail, "slit tail");
    if (std::abs(std::abs(*slit.unbounded_tail) - 1.0) > 1e-12)
      throw UsageError("slit tail direction must be a unit vector");
  }
}

void validate(const SlitDomain& domain) {
  if (!(domain.clearance > 0.0)) throw UsageError("clearance must be positive");
  for (const SlitCurve& s : domain.slits) validate(s);
  for (const Complex& p : domain.punctures) require_finite(p, "puncture");
}

void validate(const PolyPath& path) {
  if (path.points.size() < 2) throw UsageError("path needs at least 2 points");
  for (const Complex& p : path.points) require_finite(p, "path point");
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    if (path.points[i] == path.points[i - 1])
      throw UsageError("path has repeated consecutive points");
  }
}

double distance_to_slit(const SlitCurve& slit, Complex z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < slit.samples.size(); ++i)
    best = std::min(best, point_segment_distance(z, slit.samples[i - 1], slit.samples[i]));
  if (slit.unbounded_tail)
    best = std::min(best, point_ray_distance(z, slit.samples.back(), *slit.unbounded_tail));
  return best;
}

double domain_distance(const SlitDomain& domain, Complex z) {
  double best = std::numeric_limits<double>::infinity();
  for (const SlitCurve& s : domain.slits) best = std::min(best, distance_to_slit(s, z));
  for (const Complex& p : domain.punctures) best = std::min(best, std::abs(z - p));
  return best;
}

bool contains(const SlitDomain& domain, Complex z) {
  require_finite(z, "contains");
  return domain_distance(domain, z) > domain.clearance;
}

bool path_in_domain(const SlitDomain& domain, const PolyPath& path) {
  validate(path);
  std::size_t n = path.points.size();
  std::size_t segments = path.closed ? n : n - 1;
  for (std::size_t i = 0; i < segments; ++i) {
    Complex a = path.points[i];
    Complex b = path.points[(i + 1) % n];
    for (const SlitCurve& slit : domain.slits) {
      for (std::size_t j = 1; j < slit.samples.size(); ++j) {
        if (segment_segment_distance(a, b, slit.samples[j - 1], slit.samples[j]) <=
            domain.clearance)
          return false;
      }
      if (slit.unbounded_tail &&
          segment_ray_distance(a, b, slit.samples.back(), *slit.unbounded_tail) <=
              domain.clearance)
        return false;
    }
    for (const Complex& p : domain.punctures)
      if (point_segment_distance(p, a, b) <= domain.clearance) return false;
  }
  return true;
}

namespace {

double arg_increment(Complex a, Complex b, Complex p, int depth) {
  if (depth > 60) throw GeometryError("winding_number: refinement depth exceeded");
  double inc = principal_arg((b - p) / (a - p));
  if (std::abs(inc) <= kPi / 2) return inc;
  Complex m = 0.5 * (a + b);
  return arg_increment(a, m, p, depth + 1) + arg_increment(m, b, p, depth + 1);
}

}  // namespace

int winding_number(const PolyPath& path, Complex p, double clearance) {
  validate(path);
  require_finite(p, "winding_number");
  if (!path.closed) throw UsageError("winding_number: path must be closed");
  std::size_t n = path.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    Complex a = path.points[i];
    Complex b = path.points[(i + 1) % n];
    if (point_segment_distance(p, a, b) <= clearance)
      throw GeometryError("winding_number: path too close to reference point");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    total += arg_increment(path.points[i], path.points[(i + 1) % n], p, 0);
  return static_cast<int>(std::llround(total / (2.0 * kPi)));
}

bool sqrt_branch_obstruction(const SlitDomain& domain,
                             const std::vector<std::pair<Complex, int>>& branch_points,
                             const std::vector<PolyPath>& probe_loops) {
  validate(domain);
  for (const PolyPath& loop : probe_loops) {
    validate(loop);
    if (!loop.closed) throw UsageError("probe loops must be closed");
    for (const Complex& z : loop.points)
      if (!contains(domain, z)) throw GeometryError("probe loop leaves the domain");
    long long weighted = 0;
    for (const auto& [point, multiplicity] : branch_points)
      weighted += static_cast<long long>(multiplicity) *
                  winding_number(loop, point, domain.clearance);
    if (weighted % 2 != 0) return false;
  }
  return true;
}

namespace {

void add_comb_teeth(SlitDomain& d) {
  // Teeth chain from +1 toward 0 in the upper half plane and the
  // point-reflected chain from -1 below; heights stay fixed at 2.
  for (double s : {1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125}) {
    d.slits.push_back({{Complex(s, 0), Complex(s, 2), Complex(0.75 * s, 2),
                        Complex(0.75 * s, 0), Complex(0.5 * s, 0)},
                       std::nullopt});
    d.slits.push_back({{Complex(-s, 0), Complex(-s, -2), Complex(-0.75 * s, -2),
                        Complex(-0.75 * s, 0), Complex(-0.5 * s, 0)},
                       std::nullopt});
  }
}

void add_spirals(SlitDomain& d) {
  // r = 1 + t/10 at angle t, t in [0, 11]; the arrowed figure continues the
  // curve outward, realized here as a straight radial tail.  The tail never
  // meets either spiral: the radius along each curve is strictly increasing.
  const int steps = 220;
  std::vector<Complex> arm;
  arm.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) {
    double t = 11.0 * k / steps;
    arm.push_back(std::polar(1.0 + 0.1 * t, t));
  }
  Complex tail = std::polar(1.0, 11.0);
  d.slits.push_back({arm, tail});
  std::vector<Complex> mirror(arm.size());
  std::transform(arm.begin(), arm.end(), mirror.begin(), [](Complex z) { return -z; });
  d.slits.push_back({mirror, -tail});
}

}  // namespace

SlitDomain make_standard_domain(StandardDomain kind, double truncation_radius) {
  if (!(truncation_radius >= 4.0))
    throw UsageError("truncation radius must be at least 4");
  const double R = truncation_radius;
  SlitDomain d;
  switch (kind) {
    case StandardDomain::slit_interval:
      d.slits.push_back({{Complex(-1, 0), Complex(1, 0)}, std::nullopt});
      break;
    case StandardDomain::double_ray:
      d.slits.push_back({{Complex(1, 0), Complex(R, 0)}, Complex(1, 0)});
      d.slits.push_back({{Complex(-1, 0), Complex(-R, 0)}, Complex(-1, 0)});
      break;
    case StandardDomain::comb:
      d.slits.push_back({{Complex(0, -2), Complex(0, 2)}, std::nullopt});
      add_comb_teeth(d);
      break;
    case StandardDomain::double_spiral:
      add_spirals(d);
      break;
    case StandardDomain::sine_slits: {
      int n_max = static_cast<int>(std::floor(R / kPi));
      for (int n = -n_max; n <= n_max; ++n)
        d.slits.push_back({{Complex(n * kPi, 0), Complex(n * kPi, R)}, Complex(0, 1)});
      break;
    }
  }
  validate(d);
  return d;
}

}  // namespace mocposite
