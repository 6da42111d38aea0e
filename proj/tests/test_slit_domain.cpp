#include <cmath>

#include "doctest.h"
#include "mocposite/slit_domain.hpp"

using namespace mocposite;

namespace {

PolyPath circle(Complex center, double radius, int samples, bool clockwise = false) {
  PolyPath loop;
  loop.closed = true;
  for (int j = 0; j < samples; ++j) {
    double theta = 2 * kPi * j / samples;
    if (clockwise) theta = -theta;
    loop.points.push_back(center + std::polar(radius, theta));
  }
  return loop;
}

}  // namespace

TEST_CASE("standard domain membership") {
  SlitDomain slit = make_standard_domain(StandardDomain::slit_interval, 10);
  CHECK(contains(slit, Complex(0, 2)));
  CHECK(!contains(slit, Complex(0.5, 0)));
  CHECK(!contains(slit, Complex(0, 0)));
  CHECK(contains(slit, Complex(1, 1)));

  SlitDomain dray = make_standard_domain(StandardDomain::double_ray, 10);
  CHECK(contains(dray, Complex(0, 0)));
  CHECK(!contains(dray, Complex(2, 0)));
  CHECK(!contains(dray, Complex(-3, 0)));
  // the rays are unbounded: membership uses the exact tail past the samples
  CHECK(!contains(dray, Complex(1e6, 0)));
  CHECK(contains(dray, Complex(1e6, 1)));

  SlitDomain sine = make_standard_domain(StandardDomain::sine_slits, 10);
  CHECK(contains(sine, Complex(kPi / 2, 0)));
  CHECK(!contains(sine, Complex(kPi, 1)));
  CHECK(contains(sine, Complex(kPi, -1)));

  CHECK_THROWS_AS(make_standard_domain(StandardDomain::comb, 3.9), UsageError);
}

TEST_CASE("exotic domains build and validate") {
  SlitDomain comb = make_standard_domain(StandardDomain::comb, 10);
  validate(comb);
  CHECK(comb.slits.size() == 13);  // central slit + 6 teeth + reflected copies
  CHECK(contains(comb, Complex(0, 3)));
  CHECK(contains(comb, Complex(0, -3)));
  CHECK(!contains(comb, Complex(0, 1)));      // central slit
  CHECK(!contains(comb, Complex(1, 1)));      // wall of the scale-1 tooth
  CHECK(contains(comb, Complex(0.875, 1)));   // channel between the walls

  SlitDomain spiral = make_standard_domain(StandardDomain::double_spiral, 10);
  validate(spiral);
  CHECK(spiral.slits.size() == 2);
  CHECK(spiral.slits[0].unbounded_tail.has_value());
  CHECK(contains(spiral, Complex(0, 3)));
  CHECK(!contains(spiral, Complex(1, 0)));     // spiral arm starts at +1
}

TEST_CASE("contains is monotone in clearance") {
  SlitDomain dom = make_standard_domain(StandardDomain::slit_interval, 10);
  Complex z(0, 1e-4);  // distance 1e-4 from the slit
  dom.clearance = 1e-3;
  CHECK(!contains(dom, z));
  dom.clearance = 1e-5;
  CHECK(contains(dom, z));
}

TEST_CASE("path clearance is checked segment-exactly, not just at samples") {
  SlitDomain dom = make_standard_domain(StandardDomain::slit_interval, 10);
  PolyPath crossing;
  crossing.points = {Complex(0, -0.5), Complex(0, 0.5)};
  CHECK(!path_in_domain(dom, crossing));  // both samples clear, segment is not
  PolyPath clear;
  clear.points = {Complex(2, -0.5), Complex(2, 0.5)};
  CHECK(path_in_domain(dom, clear));
}

TEST_CASE("winding numbers of canonical loops") {
  CHECK(winding_number(circle(Complex(0, 0), 1, 64), Complex(0, 0)) == 1);
  CHECK(winding_number(circle(Complex(0, 0), 1, 64, true), Complex(0, 0)) == -1);

  // image of the unit circle under squaring winds twice
  PolyPath squared;
  squared.closed = true;
  for (int j = 0; j < 64; ++j) {
    Complex z = std::polar(1.0, 2 * kPi * j / 64);
    squared.points.push_back(z * z);
  }
  CHECK(winding_number(squared, Complex(0, 0)) == 2);

  CHECK(winding_number(circle(Complex(5, 5), 1, 64), Complex(0, 0)) == 0);
}

TEST_CASE("winding number is stable under resampling and negates under reversal") {
  PolyPath coarse = circle(Complex(0.3, -0.2), 1.7, 64);
  PolyPath fine = circle(Complex(0.3, -0.2), 1.7, 4096);
  CHECK(winding_number(coarse, Complex(0, 0)) == winding_number(fine, Complex(0, 0)));

  PolyPath reversed = coarse;
  std::reverse(reversed.points.begin(), reversed.points.end());
  CHECK(winding_number(reversed, Complex(0, 0)) == -winding_number(coarse, Complex(0, 0)));
}

TEST_CASE("winding number rejects open paths and grazing loops") {
  PolyPath open_path;
  open_path.points = {Complex(1, 0), Complex(0, 1), Complex(-1, 0)};
  CHECK_THROWS_AS(winding_number(open_path, Complex(0, 0)), UsageError);
  CHECK_THROWS_AS(winding_number(circle(Complex(0, 0), 1, 64), Complex(1, 0), 0.05),
                  GeometryError);
}

TEST_CASE("square-root obstruction witnesses") {
  std::vector<std::pair<Complex, int>> pm1 = {{Complex(1, 0), 1}, {Complex(-1, 0), 1}};

  SlitDomain slit = make_standard_domain(StandardDomain::slit_interval, 10);
  CHECK(sqrt_branch_obstruction(slit, pm1, {circle(Complex(0, 0), 2, 64)}));

  SlitDomain punctured;
  punctured.punctures = {Complex(0, 0)};
  CHECK(!sqrt_branch_obstruction(punctured, {{Complex(0, 0), 1}},
                                 {circle(Complex(0, 0), 1, 64)}));

  SlitDomain dray = make_standard_domain(StandardDomain::double_ray, 10);
  CHECK(sqrt_branch_obstruction(dray, pm1, {circle(Complex(0, 0), 0.5, 64)}));

  // a probe that leaves the domain is a caller error
  CHECK_THROWS_AS(sqrt_branch_obstruction(slit, pm1, {circle(Complex(0, 0), 0.5, 64)}),
                  GeometryError);
}

TEST_CASE("structural validation") {
  SlitCurve too_short;
  too_short.samples = {Complex(0, 0)};
  CHECK_THROWS_AS(validate(too_short), UsageError);

  SlitCurve repeated;
  repeated.samples = {Complex(0, 0), Complex(0, 0)};
  CHECK_THROWS_AS(validate(repeated), UsageError);

  SlitCurve bad_tail;
  bad_tail.samples = {Complex(0, 0), Complex(1, 0)};
  bad_tail.unbounded_tail = Complex(2, 0);
  CHECK_THROWS_AS(validate(bad_tail), UsageError);

  SlitDomain bad_clearance;
  bad_clearance.clearance = 0;
  CHECK_THROWS_AS(validate(bad_clearance), UsageError);

  PolyPath single;
  single.points = {Complex(0, 0)};
  CHECK_THROWS_AS(validate(single), UsageError);
}

TEST_CASE("exact distance helpers") {
  CHECK(point_segment_distance(Complex(0, 1), Complex(-1, 0), Complex(1, 0)) == 1.0);
  CHECK(point_segment_distance(Complex(3, 0), Complex(-1, 0), Complex(1, 0)) == 2.0);
  CHECK(point_ray_distance(Complex(0, 1), Complex(1, 0), Complex(1, 0)) ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(point_ray_distance(Complex(5, 1), Complex(1, 0), Complex(1, 0)) == 1.0);
  CHECK(segment_segment_distance(Complex(0, 1), Complex(0, 2), Complex(-1, 0),
                                 Complex(1, 0)) == 1.0);
}
