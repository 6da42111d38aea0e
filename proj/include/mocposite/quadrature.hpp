#pragma once

#include <functional>
#include <vector>

#include "mocposite/complex_core.hpp"
#include "mocposite/continuation.hpp"
#include "mocposite/report.hpp"

namespace mocposite {

enum class RuleKind { chebyshev_first, chebyshev_second, periodic_trapezoid };

// Nodes and weights for integration on (-1, 1) against the rule's implicit
// weight: sqrt(1-t^2) for the second kind, 1/sqrt(1-t^2) for the first.
// Nodes are built in mirrored pairs, t_{n+1-k} = -t_k bitwise, so symmetric
// sums cancel exactly.
struct QuadratureRule {
  RuleKind kind = RuleKind::chebyshev_second;
  int n = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule make_chebyshev_first(int n);
QuadratureRule make_chebyshev_second(int n);

using RealEvaluator = std::function<Complex(double)>;

// Weighted node sum: approximates the integral of h against the rule's weight.
Complex integrate_weighted(const QuadratureRule& rule, const RealEvaluator& h);

// (1/pi) sum of w_k / (z - t_k) over the second-kind rule.  Paired fixed-order
// summation over the mirrored nodes makes crack_integral(-z, n) the exact
// bitwise negation of crack_integral(z, n).
Complex crack_integral(Complex z, int n);

enum class ContourKind { circle, ellipse };
enum class Orientation { ccw, cw };

struct ContourSpec {
  ContourKind kind = ContourKind::circle;
  Complex center = Complex(0, 0);
  double radius = 0.0;        // circle
  double a = 0.0, b = 0.0;    // ellipse semi-axes, a > 1 > b > 0 around the slit
  Orientation orientation = Orientation::ccw;
  int samples = 256;          // power of two, >= 64
};

void validate(const ContourSpec& spec);

// Point on the counterclockwise parameterization at angle theta.
Complex contour_point(const ContourSpec& spec, double theta);

// Periodic-trapezoid contour integral; the clockwise value is the exact
// negation of the counterclockwise sum.
Complex contour_integral(const ContourSpec& spec, const Evaluator& integrand);

// Circle (ccw) plus ellipse (cw) integral of sqrt(1-w^2)/(z-w), with the odd
// branch for the root, checked against the residue value -2*pi*i*eval_f2(z).
VerificationRecord verify_collapse(Complex z, double R, double a, double b, int samples);

// (1/pi) sum of (pi/n) exp(i z t_k) over first-kind nodes; exactly even in z.
Complex bessel_j0_quadrature(Complex z, int n);

// Power-series reference: sum of (-1)^k (z/2)^{2k} / (k!)^2.
Complex bessel_j0_series(Complex z);

}  // namespace mocposite
