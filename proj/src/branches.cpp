#include "mocposite/branches.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mocposite {

namespace {

constexpr double kClearance = 1e-6;   // matches the standard-domain default
constexpr double kFootGuard = 0.15;   // landing offset beside a sine slit foot
constexpr double kDetour = 0.1;       // detour radius around each slit foot

double distance_to_interval(Complex z) {
  return point_segment_distance(z, Complex(-1, 0), Complex(1, 0));
}

double distance_to_double_ray(Complex z) {
  return std::min(point_ray_distance(z, Complex(1, 0), Complex(1, 0)),
                  point_ray_distance(z, Complex(-1, 0), Complex(-1, 0)));
}

double distance_to_negative_axis(Complex z) {
  return point_ray_distance(z, Complex(0, 0), Complex(-1, 0));
}

// Distance to the full (untruncated) family of upward slits at every multiple
// of pi; only the feet bracketing Re z can be nearest.
double distance_to_sine_slits(Complex z) {
  double best = std::numeric_limits<double>::infinity();
  long long n0 = std::llround(z.real() / kPi);
  for (long long n = n0 - 1; n <= n0 + 1; ++n) {
    double dx = z.real() - static_cast<double>(n) * kPi;
    double d = z.imag() >= 0.0 ? std::abs(dx) : std::hypot(dx, z.imag());
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

Complex eval_f1(Complex z) {
  require_finite(z, "eval_f1");
  if (!(z.imag() > 0.0)) throw DomainError("eval_f1: z must lie in the upper half plane");
  return principal_sqrt(1.0 - z * z);
}

Complex eval_f2(Complex z) {
  require_finite(z, "eval_f2");
  if (distance_to_interval(z) <= kClearance)
    throw DomainError("eval_f2: z is on the slit [-1, 1]");
  return Complex(0, -1) * z * principal_sqrt(1.0 - 1.0 / (z * z));
}

Complex eval_f3(Complex z) {
  require_finite(z, "eval_f3");
  if (distance_to_double_ray(z) <= kClearance)
    throw DomainError("eval_f3: z is on a slit ray");
  return principal_sqrt(1.0 - z * z);
}

Complex eval_log_z2(Complex z) {
  require_finite(z, "eval_log_z2");
  if (distance_to_negative_axis(z) <= kClearance)
    throw DomainError("eval_log_z2: z is on the negative real axis or zero");
  return 2.0 * principal_log(z);
}

namespace {

// Canonical continuation path: along the real axis from pi/2 toward Re z with
// a semicircular dip below each crossed slit foot, then straight to z.  The
// landing abscissa is pushed kFootGuard away from a foot when z sits beside
// one so the final leg cannot start inside a detour.
PolyPath log_sin_path(Complex z) {
  PolyPath path;
  path.points.push_back(Complex(kPi / 2, 0));
  double x_land = z.real();
  long long nearest = std::llround(x_land / kPi);
  double beside = x_land - static_cast<double>(nearest) * kPi;
  if (std::abs(beside) < kFootGuard) {
    double side = beside == 0.0 ? 1.0 : (beside > 0.0 ? 1.0 : -1.0);
    x_land = static_cast<double>(nearest) * kPi + side * kFootGuard;
  }
  auto push = [&path](Complex p) {
    if (p != path.points.back()) path.points.push_back(p);
  };
  if (x_land > kPi / 2) {
    for (long long n = 1; static_cast<double>(n) * kPi < x_land; ++n) {
      double foot = static_cast<double>(n) * kPi;
      push(Complex(foot - kDetour, 0));
      for (int j = 1; j <= 16; ++j) {
        double theta = kPi + j * kPi / 16.0;
        push(Complex(foot + kDetour * std::cos(theta), kDetour * std::sin(theta)));
      }
    }
  } else {
    for (long long n = 0; static_cast<double>(n) * kPi > x_land; --n) {
      double foot = static_cast<double>(n) * kPi;
      push(Complex(foot + kDetour, 0));
      for (int j = 1; j <= 16; ++j) {
        double theta = -j * kPi / 16.0;
        push(Complex(foot + kDetour * std::cos(theta), kDetour * std::sin(theta)));
      }
    }
  }
  push(Complex(x_land, 0));
  push(z);
  return path;
}

}  // namespace

Complex eval_log_sin(Complex z) {
  require_finite(z, "eval_log_sin");
  if (distance_to_sine_slits(z) <= kClearance)
    throw DomainError("eval_log_sin: z is on an upward slit");
  if (z == Complex(kPi / 2, 0)) return Complex(0, 0);
  PolyPath path = log_sin_path(z);
  if (path.points.size() < 2) throw GeometryError("eval_log_sin: degenerate path");
  Evaluator g = [](Complex w) { return std::sin(w); };
  return continue_log(g, path, Complex(0, 0)).terminal;
}

Complex eval_cos_sqrt(Complex z) {
  require_finite(z, "eval_cos_sqrt");
  Complex sum(0, 0);
  Complex term(1, 0);
  for (int n = 0; n < 400; ++n) {
    sum += term;
    term *= -z / static_cast<double>((2 * n + 1) * (2 * n + 2));
    if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum))) return sum;
  }
  throw NumericError("eval_cos_sqrt: series did not converge within 400 terms");
}

Complex joukowski(Complex z) {
  require_finite(z, "joukowski");
  if (std::abs(z) <= kClearance) throw DomainError("joukowski: z must be nonzero");
  return 0.5 * (z + 1.0 / z);
}

Complex joukowski_inverse_disk(Complex c) {
  require_finite(c, "joukowski_inverse_disk");
  if (distance_to_interval(c) <= kClearance)
    throw DomainError("joukowski_inverse_disk: c is on the slit [-1, 1]");
  return c - Complex(0, 1) * eval_f2(c);
}

double estimate_order(const Evaluator& f, const std::vector<double>& radii) {
  if (radii.size() < 3) throw UsageError("estimate_order: need at least 3 radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 10.0)) throw UsageError("estimate_order: radii must be >= 10");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw UsageError("estimate_order: radii must be increasing");
  }
  std::vector<double> xs, ys;
  xs.reserve(radii.size());
  ys.reserve(radii.size());
  for (double r : radii) {
    double max_mod = 0.0;
    for (int k = 0; k < 256; ++k) {
      double theta = 2.0 * kPi * k / 256.0;
      Complex v = f(r * Complex(std::cos(theta), std::sin(theta)));
      max_mod = std::max(max_mod, std::abs(v));
    }
    if (!std::isfinite(max_mod))
      throw NumericError("estimate_order: |f| overflowed on a sample circle");
    if (max_mod <= 1.0)
      throw NumericError("estimate_order: M(r) <= 1, log log M undefined");
    xs.push_back(std::log(r));
    ys.push_back(std::log(std::log(max_mod)));
  }
  double n = static_cast<double>(xs.size());
  double x_mean = 0.0, y_mean = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    x_mean += xs[i];
    y_mean += ys[i];
  }
  x_mean /= n;
  y_mean /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - x_mean) * (ys[i] - y_mean);
    den += (xs[i] - x_mean) * (xs[i] - x_mean);
  }
  return num / den;
}

BranchTag branch_tag(BranchName name, double truncation_radius) {
  const double R = truncation_radius;
  SlitDomain d;
  switch (name) {
    case BranchName::f1_upper_half_plane:
      d.slits.push_back({{Complex(0, 0), Complex(R, 0)}, Complex(1, 0)});
      d.slits.push_back({{Complex(0, 0), Complex(-R, 0)}, Complex(-1, 0)});
      break;
    case BranchName::f2_odd_slit:
    case BranchName::joukowski_inverse_disk:
      d = make_standard_domain(StandardDomain::slit_interval, R);
      break;
    case BranchName::f3_even_doubly_slit:
      d = make_standard_domain(StandardDomain::double_ray, R);
      break;
    case BranchName::log_z_squared:
      d.slits.push_back({{Complex(0, 0), Complex(-R, 0)}, Complex(-1, 0)});
      break;
    case BranchName::log_sin:
      d = make_standard_domain(StandardDomain::sine_slits, R);
      break;
    case BranchName::cos_sqrt:
      break;  // entire: nothing removed
    case BranchName::joukowski:
      d.punctures.push_back(Complex(0, 0));
      break;
  }
  return BranchTag{name, std::move(d)};
}

Complex evaluate_branch(BranchName name, Complex z) {
  switch (name) {
    case BranchName::f1_upper_half_plane: return eval_f1(z);
    case BranchName::f2_odd_slit: return eval_f2(z);
    case BranchName::f3_even_doubly_slit: return eval_f3(z);
    case BranchName::log_z_squared: return eval_log_z2(z);
    case BranchName::log_sin: return eval_log_sin(z);
    case BranchName::cos_sqrt: return eval_cos_sqrt(z);
    case BranchName::joukowski: return joukowski(z);
    case BranchName::joukowski_inverse_disk: return joukowski_inverse_disk(z);
  }
  throw UsageError("evaluate_branch: unknown branch");
}

BranchName branch_from_string(const std::string& name) {
  if (name == "f1" || name == "f1_upper_half_plane") return BranchName::f1_upper_half_plane;
  if (name == "f2" || name == "f2_odd_slit") return BranchName::f2_odd_slit;
  if (name == "f3" || name == "f3_even_doubly_slit") return BranchName::f3_even_doubly_slit;
  if (name == "log_z2" || name == "log_z_squared") return BranchName::log_z_squared;
  if (name == "log_sin") return BranchName::log_sin;
  if (name == "cos_sqrt") return BranchName::cos_sqrt;
  if (name == "joukowski") return BranchName::joukowski;
  if (name == "joukowski_inverse_disk" || name == "joukowski_inverse")
    return BranchName::joukowski_inverse_disk;
  throw UsageError("unknown branch name: " + name);
}

std::string to_string(BranchName name) {
  switch (name) {
    case BranchName::f1_upper_half_plane: return "f1_upper_half_plane";
    case BranchName::f2_odd_slit: return "f2_odd_slit";
    case BranchName::f3_even_doubly_slit: return "f3_even_doubly_slit";
    case BranchName::log_z_squared: return "log_z_squared";
    case BranchName::log_sin: return "log_sin";
    case BranchName::cos_sqrt: return "cos_sqrt";
    case BranchName::joukowski: return "joukowski";
    case BranchName::joukowski_inverse_disk: return "joukowski_inverse_disk";
  }
  return "unknown";
}

}  // namespace mocposite
