#include <cmath>
#include <complex>
#include <limits>

#include "doctest.h"
#include "mocposite/branches.hpp"
#include "mocposite/complex_core.hpp"
#include "mocposite/quadrature.hpp"

using namespace mocposite;

namespace {

double err(Complex a, Complex b) { return std::abs(a - b); }

// Reference for the crack integral: the polynomial part plus the exterior
// branch, which is what the Plemelj jump across [-1, 1] reconstructs.
Complex crack_reference(Complex z) { return z - Complex(0, 1) * eval_f2(z); }

}  // namespace

TEST_CASE("chebyshev rules: node tables are exactly mirror symmetric") {
  for (int n : {1, 2, 5, 8, 9, 33}) {
    for (auto rule : {make_chebyshev_second(n), make_chebyshev_first(n)}) {
      REQUIRE(rule.n == n);
      REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
      REQUIRE(rule.weights.size() == static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        CHECK(rule.nodes[k] == -rule.nodes[n - 1 - k]);
        CHECK(rule.weights[k] == rule.weights[n - 1 - k]);
        CHECK(rule.weights[k] > 0.0);
        if (k > 0) CHECK(rule.nodes[k] < rule.nodes[k - 1]);
      }
      if (n % 2 == 1) CHECK(rule.nodes[n / 2] == 0.0);
    }
  }
}

TEST_CASE("chebyshev rules: exact on low-degree polynomials") {
  auto cheb2 = make_chebyshev_second(8);
  auto cheb1 = make_chebyshev_first(8);
  // integral of sqrt(1-t^2) dt over [-1,1] is pi/2; with t^2 it is pi/8,
  // with t^4 it is pi/16. For 1/sqrt(1-t^2): pi, and with t^2: pi/2.
  CHECK(err(integrate_weighted(cheb2, [](double) { return Complex(1, 0); }),
            Complex(kPi / 2, 0)) < 1e-14);
  CHECK(err(integrate_weighted(cheb2, [](double t) { return Complex(t * t, 0); }),
            Complex(kPi / 8, 0)) < 1e-14);
  CHECK(err(integrate_weighted(cheb2, [](double t) { return Complex(t * t * t * t, 0); }),
            Complex(kPi / 16, 0)) < 1e-14);
  CHECK(err(integrate_weighted(cheb1, [](double) { return Complex(1, 0); }),
            Complex(kPi, 0)) < 1e-14);
  CHECK(err(integrate_weighted(cheb1, [](double t) { return Complex(t * t, 0); }),
            Complex(kPi / 2, 0)) < 1e-14);
}

TEST_CASE("chebyshev rules: odd integrand cancels exactly on an adjacent pair") {
  auto rule = make_chebyshev_second(2);
  Complex v = integrate_weighted(rule, [](double t) { return Complex(t, 0); });
  CHECK(v == Complex(0, 0));
}

TEST_CASE("integrate_weighted: validation") {
  QuadratureRule broken;
  broken.kind = RuleKind::chebyshev_second;
  broken.n = 3;
  broken.nodes = {0.5, -0.5};
  broken.weights = {1.0, 1.0};
  CHECK_THROWS_AS(integrate_weighted(broken, [](double) { return Complex(1, 0); }),
                  UsageError);
  auto rule = make_chebyshev_second(4);
  CHECK_THROWS_AS(
      integrate_weighted(
          rule, [](double) { return Complex(std::numeric_limits<double>::infinity(), 0); }),
      NumericError);
  CHECK_THROWS_AS(make_chebyshev_second(0), UsageError);
  CHECK_THROWS_AS(make_chebyshev_first(-2), UsageError);
}

TEST_CASE("crack_integral: validation") {
  CHECK_THROWS_AS(crack_integral(Complex(2, 0), 7), UsageError);
  CHECK_THROWS_AS(crack_integral(Complex(0.5, 0), 200), DomainError);
  CHECK_THROWS_AS(crack_integral(Complex(-1, 0), 200), DomainError);
  CHECK_THROWS_AS(crack_integral(Complex(0, 1e-9), 200), DomainError);
  CHECK_THROWS_AS(
      crack_integral(Complex(std::numeric_limits<double>::quiet_NaN(), 0), 200),
      DomainError);
}

TEST_CASE("crack_integral: matches the reconstruction off the slit") {
  CHECK(err(crack_integral(Complex(2, 0), 200), crack_reference(Complex(2, 0))) < 1e-12);
  CHECK(err(crack_integral(Complex(-2, 0), 200), crack_reference(Complex(-2, 0))) < 1e-12);
  CHECK(err(crack_integral(Complex(0.5, 1.2), 400), crack_reference(Complex(0.5, 1.2))) <
        1e-10);
  CHECK(err(crack_integral(Complex(-0.3, -2), 400), crack_reference(Complex(-0.3, -2))) <
        1e-10);
}

TEST_CASE("crack_integral: antisymmetry is exact, not just close") {
  const Complex pts[] = {Complex(2, 0), Complex(1.5, 0.25), Complex(0.3, 2),
                         Complex(-0.7, 1.3), Complex(0.05, -0.4)};
  for (Complex z : pts) {
    for (int n : {64, 65, 200}) {
      CHECK(crack_integral(-z, n) == -crack_integral(z, n));
    }
  }
}

TEST_CASE("crack_integral: spectral convergence near the slit") {
  // z close to the slit is the hard case; each doubling of n should still
  // multiply the accuracy, not add to it.
  Complex z(0, 0.05);
  Complex exact = crack_reference(z);
  double e50 = err(crack_integral(z, 50), exact);
  double e100 = err(crack_integral(z, 100), exact);
  double e200 = err(crack_integral(z, 200), exact);
  CHECK(e50 > e100);
  CHECK(e100 > e200);
  CHECK(e50 / e100 > 10.0);
  CHECK(e100 / e200 > 10.0);
  CHECK(e200 < 1e-6);
}

TEST_CASE("contour_integral: validation") {
  ContourSpec c{ContourKind::circle, Complex(0, 0), 2.0, 0, 0, Orientation::ccw, 256};
  auto one = [](Complex) { return Complex(1, 0); };
  c.samples = 100;
  CHECK_THROWS_AS(contour_integral(c, one), UsageError);
  c.samples = 32;
  CHECK_THROWS_AS(contour_integral(c, one), UsageError);
  c.samples = 256;
  c.radius = 0.0;
  CHECK_THROWS_AS(contour_integral(c, one), UsageError);

  ContourSpec e{ContourKind::ellipse, Complex(0, 0), 0, 0.9, 0.2, Orientation::ccw, 256};
  CHECK_THROWS_AS(contour_integral(e, one), UsageError);
  e.a = 1.2;
  e.b = 1.3;
  CHECK_THROWS_AS(contour_integral(e, one), UsageError);
  e.b = 0.2;
  CHECK_NOTHROW(contour_integral(e, one));

  // Pole sitting exactly on a sample point of the contour.
  ContourSpec hit{ContourKind::circle, Complex(0, 0), 2.0, 0, 0, Orientation::ccw, 256};
  CHECK_THROWS_AS(contour_integral(hit, [](Complex w) { return 1.0 / (w - 2.0); }),
                  NumericError);
}

TEST_CASE("contour_integral: residues and the argument principle") {
  ContourSpec unit{ContourKind::circle, Complex(0, 0), 1.0, 0, 0, Orientation::ccw, 256};
  Complex res = contour_integral(unit, [](Complex w) { return 1.0 / (w - 0.3); });
  CHECK(err(res, Complex(0, 2 * kPi)) < 1e-12);

  // d/dw log(w^2) integrated over the unit circle counts the double zero.
  Complex count = contour_integral(unit, [](Complex w) { return 2.0 / w; });
  count /= Complex(0, 2 * kPi);
  CHECK(err(count, Complex(2, 0)) < 1e-12);
}

TEST_CASE("contour_integral: entire integrands integrate to zero") {
  auto cubic = [](Complex w) { return w * w * w - 2.0 * w + 1.0; };
  ContourSpec circ{ContourKind::circle, Complex(0.4, -0.2), 3.0, 0, 0, Orientation::ccw, 256};
  ContourSpec ell{ContourKind::ellipse, Complex(0, 0), 0, 2.5, 1.25, Orientation::ccw, 256};
  CHECK(std::abs(contour_integral(circ, cubic)) < 1e-12);
  CHECK(std::abs(contour_integral(ell, cubic)) < 1e-12);
}

TEST_CASE("contour_integral: reversing orientation negates exactly") {
  ContourSpec ccw{ContourKind::circle, Complex(0.1, 0.2), 1.5, 0, 0, Orientation::ccw, 128};
  ContourSpec cw = ccw;
  cw.orientation = Orientation::cw;
  auto f = [](Complex w) { return eval_f2(w + Complex(0, 2)) / (w - 0.3); };
  CHECK(contour_integral(cw, f) == -contour_integral(ccw, f));
}

TEST_CASE("contour_integral: spectral convergence in the sample count") {
  // Simple pole at 1.8 inside the radius-2 circle: the trapezoid error decays
  // geometrically in N even though the pole is close to the contour.
  auto f = [](Complex w) { return 1.0 / (w - 1.8); };
  Complex exact(0, 2 * kPi);
  double e64, e128, e256;
  {
    ContourSpec c{ContourKind::circle, Complex(0, 0), 2.0, 0, 0, Orientation::ccw, 64};
    e64 = err(contour_integral(c, f), exact);
    c.samples = 128;
    e128 = err(contour_integral(c, f), exact);
    c.samples = 256;
    e256 = err(contour_integral(c, f), exact);
  }
  CHECK(e64 / e128 > 10.0);
  CHECK(e128 / e256 > 10.0);
  CHECK(e256 < 1e-9);
}

TEST_CASE("verify_collapse: two-contour cancellation holds off the slit") {
  VerificationRecord rec = verify_collapse(Complex(2, 1), 6.0, 1.2, 0.2, 1024);
  CHECK(rec.pass);
  CHECK(rec.abs_err <= rec.tol);
  VerificationRecord rec2 = verify_collapse(Complex(3, 0), 8.0, 1.1, 0.1, 2048);
  CHECK(rec2.pass);
}

TEST_CASE("verify_collapse: preconditions on the evaluation point") {
  // Inside the ellipse.
  CHECK_THROWS_AS(verify_collapse(Complex(0.3, 0.05), 6.0, 1.2, 0.2, 1024), DomainError);
  // Outside (or on) the outer circle.
  CHECK_THROWS_AS(verify_collapse(Complex(7, 0), 6.0, 1.2, 0.2, 1024), DomainError);
  CHECK_THROWS_AS(verify_collapse(Complex(6, 0), 6.0, 1.2, 0.2, 1024), DomainError);
  // Malformed contours are rejected before the point is examined.
  CHECK_THROWS_AS(verify_collapse(Complex(2, 1), -1.0, 1.2, 0.2, 1024), UsageError);
  CHECK_THROWS_AS(verify_collapse(Complex(2, 1), 6.0, 0.8, 0.2, 1024), UsageError);
  CHECK_THROWS_AS(verify_collapse(Complex(2, 1), 6.0, 1.2, 0.2, 1000), UsageError);
}

TEST_CASE("bessel_j0: exact at the origin") {
  CHECK(bessel_j0_quadrature(Complex(0, 0), 128) == Complex(1, 0));
  CHECK(bessel_j0_series(Complex(0, 0)) == Complex(1, 0));
}

TEST_CASE("bessel_j0: known real value") {
  // J0(2) to full double precision.
  Complex ref(0.2238907791412356, 0);
  CHECK(err(bessel_j0_series(Complex(2, 0)), ref) < 1e-13);
  CHECK(err(bessel_j0_quadrature(Complex(2, 0), 128), ref) < 1e-13);
}

TEST_CASE("bessel_j0: quadrature and series agree on a complex grid") {
  for (int k = -8; k <= 8; ++k) {
    Complex z(0.6 * k, 0.35 * k);
    CHECK(err(bessel_j0_quadrature(z, 160), bessel_j0_series(z)) <
          1e-11 * (1.0 + std::abs(bessel_j0_series(z))));
  }
}

TEST_CASE("bessel_j0: even to the last bit") {
  for (int k = -32; k <= 32; ++k) {
    Complex z(0.25 * k, 0.125 * k);
    CHECK(bessel_j0_quadrature(-z, 128) == bessel_j0_quadrature(z, 128));
    CHECK(bessel_j0_series(-z) == bessel_j0_series(z));
  }
}

TEST_CASE("bessel_j0: validation and series breakdown") {
  CHECK_THROWS_AS(bessel_j0_quadrature(Complex(1, 0), 7), UsageError);
  CHECK_THROWS_AS(
      bessel_j0_series(Complex(std::numeric_limits<double>::infinity(), 0)), DomainError);
  // The power series is hopeless far out: terms near k ~ |z|/2 peak around
  // 1e217 for z = 500 and cannot sink below the convergence threshold in the
  // allotted terms.
  CHECK_THROWS_AS(bessel_j0_series(Complex(500, 0)), NumericError);
}
