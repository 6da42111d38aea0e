#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mocposite/complex_core.hpp"

namespace mocposite {

// A slit: polyline through `samples`, optionally extended to infinity from the
// last sample along the unit direction `unbounded_tail`.
struct SlitCurve {
  std::vector<Complex> samples;
  std::optional<Complex> unbounded_tail;
};

// Plane minus slits minus punctures.  A point belongs to the domain when its
// distance to every slit and puncture exceeds `clearance`.
struct SlitDomain {
  std::vector<SlitCurve> slits;
  std::vector<Complex> punctures;
  double clearance = 1e-6;
};

struct PolyPath {
  std::vector<Complex> points;
  bool closed = false;
};

enum class StandardDomain {
  slit_interval,   // plane minus [-1, 1]
  double_ray,      // plane minus (-inf, -1] and [1, inf)
  comb,            // nested rectangular comb, scales 1 .. 1/32
  double_spiral,   // two interleaved spiral slits from +1 and -1
  sine_slits,      // vertical upward rays from each multiple of pi
};

// Throws UsageError on structural violations (sample count, repeated
// consecutive samples, non-unit tail, non-positive clearance).
void validate(const SlitCurve& slit);
void validate(const SlitDomain& domain);
void validate(const PolyPath& path);

// Truncation radius bounds the sampled part of unbounded slits and the slit
// family of sine_slits; must be >= 4.
SlitDomain make_standard_domain(StandardDomain kind, double truncation_radius);

double distance_to_slit(const SlitCurve& slit, Complex z);

// Smallest distance from z to any slit or puncture of the domain.
double domain_distance(const SlitDomain& domain, Complex z);

bool contains(const SlitDomain& domain, Complex z);

// Exact segment-level clearance check: every segment of `path` keeps distance
// greater than domain.clearance from all slits and punctures.
bool path_in_domain(const SlitDomain& domain, const PolyPath& path);

// Winding number of a closed polyline about p, by summation of per-segment
// principal argument increments; a segment whose increment exceeds pi/2 is
// bisected.  Every segment must keep distance > clearance from p.
int winding_number(const PolyPath& path, Complex p, double clearance = 1e-6);

// A branch of sqrt(g) exists on the domain as far as the probes can tell iff
// for every probe loop the multiplicity-weighted sum of winding numbers about
// the branch points is even.
bool sqrt_branch_obstruction(const SlitDomain& domain,
                             const std::vector<std::pair<Complex, int>>& branch_points,
                             const std::vector<PolyPath>& probe_loops);

// Exact distances used by the membership and clearance checks.
double point_segment_distance(Complex p, Complex a, Complex b);
double point_ray_distance(Complex p, Complex origin, Complex direction);
double segment_segment_distance(Complex a, Complex b, Complex c, Complex d);
double segment_ray_distance(Complex a, Complex b, Complex origin, Complex direction);

}  // namespace mocposite
