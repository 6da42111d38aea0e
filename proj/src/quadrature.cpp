#include "mocposite/quadrature.hpp"

#include <cmath>
#include <cstdio>

#include "mocposite/branches.hpp"
#include "mocposite/slit_domain.hpp"

namespace mocposite {

namespace {

constexpr double kSlitClearance = 1e-6;

void check_rule(const QuadratureRule& rule) {
  if (rule.n < 1 || rule.nodes.size() != static_cast<std::size_t>(rule.n) ||
      rule.weights.size() != rule.nodes.size())
    throw UsageError("quadrature rule: inconsistent node/weight table");
}

}  // namespace

QuadratureRule make_chebyshev_second(int n) {
  if (n < 1) throw UsageError("make_chebyshev_second: n must be >= 1");
  QuadratureRule rule;
  rule.kind = RuleKind::chebyshev_second;
  rule.n = n;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // k runs 1..n; node k and its mirror n+1-k share one cos/sin evaluation so
  // the pair is exactly symmetric.
  for (int k = 1; 2 * k <= n + 1; ++k) {
    double angle = k * kPi / (n + 1);
    double t = 2 * k == n + 1 ? 0.0 : std::cos(angle);
    double s = std::sin(angle);
    double w = (kPi / (n + 1)) * s * s;
    rule.nodes[k - 1] = t;
    rule.weights[k - 1] = w;
    rule.nodes[n - k] = -t;
    rule.weights[n - k] = w;
  }
  return rule;
}

QuadratureRule make_chebyshev_first(int n) {
  if (n < 1) throw UsageError("make_chebyshev_first: n must be >= 1");
  QuadratureRule rule;
  rule.kind = RuleKind::chebyshev_first;
  rule.n = n;
  rule.nodes.resize(n);
  rule.weights.assign(n, kPi / n);
  for (int k = 1; 2 * k <= n + 1; ++k) {
    double angle = (2 * k - 1) * kPi / (2 * n);
    double t = 2 * k == n + 1 ? 0.0 : std::cos(angle);
    rule.nodes[k - 1] = t;
    rule.nodes[n - k] = -t;
  }
  return rule;
}

Complex integrate_weighted(const QuadratureRule& rule, const RealEvaluator& h) {
  check_rule(rule);
  Complex sum(0, 0);
  for (int k = 0; k < rule.n; ++k) {
    Complex v = h(rule.nodes[k]);
    if (!is_finite(v)) throw NumericError("integrate_weighted: integrand not finite at a node");
    sum += rule.weights[k] * v;
  }
  return sum;
}

Complex crack_integral(Complex z, int n) {
  require_finite(z, "crack_integral");
  if (n < 8) throw UsageError("crack_integral: n must be >= 8");
  if (point_segment_distance(z, Complex(-1, 0), Complex(1, 0)) <= kSlitClearance)
    throw DomainError("crack_integral: z is on the slit [-1, 1]");
  QuadratureRule rule = make_chebyshev_second(n);
  // Mirrored pairs are summed innermost and accumulated in fixed order; every
  // floating-point op here negates exactly under z -> -z, which is what makes
  // the antisymmetry bitwise.
  Complex total(0, 0);
  for (int k = 0; 2 * k < n - 1; ++k) {
    int j = n - 1 - k;
    total += rule.weights[k] / (z - rule.nodes[k]) + rule.weights[j] / (z - rule.nodes[j]);
  }
  if (n % 2 == 1) total += rule.weights[n / 2] / (z - rule.nodes[n / 2]);
  return total / kPi;
}

void validate(const ContourSpec& spec) {
  require_finite(spec.center, "contour center");
  if (spec.samples < 64 || (spec.samples & (spec.samples - 1)) != 0)
    throw UsageError("contour: samples must be a power of two >= 64");
  if (spec.kind == ContourKind::circle) {
    if (!(spec.radius > 0)) throw UsageError("contour: circle radius must be positive");
  } else {
    if (!(spec.a > 1) || !(spec.b > 0) || !(spec.b < spec.a))
      throw UsageError("contour: ellipse needs semi-axes a > 1 and 0 < b < a");
  }
}

Complex contour_point(const ContourSpec& spec, double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  if (spec.kind == ContourKind::circle) return spec.center + spec.radius * Complex(c, s);
  return spec.center + Complex(spec.a * c, spec.b * s);
}

Complex contour_integral(const ContourSpec& spec, const Evaluator& integrand) {
  validate(spec);
  const int N = spec.samples;
  Complex sum(0, 0);
  for (int j = 0; j < N; ++j) {
    double theta = 2 * kPi * j / N;
    double c = std::cos(theta), s = std::sin(theta);
    Complex w, dw;
    if (spec.kind == ContourKind::circle) {
      w = spec.center + spec.radius * Complex(c, s);
      dw = spec.radius * Complex(-s, c);
    } else {
      w = spec.center + Complex(spec.a * c, spec.b * s);
      dw = Complex(-spec.a * s, spec.b * c);
    }
    Complex v = integrand(w);
    if (!is_finite(v)) throw NumericError("contour_integral: integrand not finite on contour");
    sum += v * dw;
  }
  sum *= 2 * kPi / N;
  return spec.orientation == Orientation::cw ? -sum : sum;
}

VerificationRecord verify_collapse(Complex z, double R, double a, double b, int samples) {
  require_finite(z, "verify_collapse");
  ContourSpec circle{ContourKind::circle, Complex(0, 0), R, 0, 0, Orientation::ccw, samples};
  ContourSpec ellipse{ContourKind::ellipse, Complex(0, 0), 0, a, b, Orientation::cw, samples};
  validate(circle);
  validate(ellipse);
  if (!(std::abs(z) < R)) throw DomainError("verify_collapse: z must lie inside the circle");
  double ex = z.real() / a, ey = z.imag() / b;
  if (ex * ex + ey * ey <= 1.0)
    throw DomainError("verify_collapse: z must lie outside the ellipse");
  if (point_segment_distance(z, Complex(-1, 0), Complex(1, 0)) <= kSlitClearance)
    throw DomainError("verify_collapse: z is on the slit [-1, 1]");
  Evaluator integrand = [z](Complex w) { return eval_f2(w) / (z - w); };
  Complex computed = contour_integral(circle, integrand) + contour_integral(ellipse, integrand);
  Complex expected = Complex(0, -2 * kPi) * eval_f2(z);
  char name[128];
  std::snprintf(name, sizeof(name), "collapse z=%g,%g R=%g a=%g b=%g n=%d", z.real(),
                z.imag(), R, a, b, samples);
  return make_record(name, computed, expected, 1e-8);
}

Complex bessel_j0_quadrature(Complex z, int n) {
  require_finite(z, "bessel_j0_quadrature");
  if (n < 8) throw UsageError("bessel_j0_quadrature: n must be >= 8");
  QuadratureRule rule = make_chebyshev_first(n);
  Complex iz = Complex(0, 1) * z;
  Complex total(0, 0);
  for (int k = 0; 2 * k < n - 1; ++k) {
    int j = n - 1 - k;
    total += std::exp(iz * rule.nodes[k]) + std::exp(iz * rule.nodes[j]);
  }
  if (n % 2 == 1) total += std::exp(iz * rule.nodes[n / 2]);
  return total / static_cast<double>(n);
}

Complex bessel_j0_series(Complex z) {
  require_finite(z, "bessel_j0_series");
  Complex q = -(z * z) / 4.0;
  Complex term(1, 0);
  Complex sum(0, 0);
  for (int k = 0; k < 300; ++k) {
    sum += term;
    term *= q / static_cast<double>((k + 1) * (k + 1));
    if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) return sum;
  }
  throw NumericError("bessel_j0_series: series did not converge within 300 terms");
}

}  // namespace mocposite
