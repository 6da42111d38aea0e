#pragma once

#include <string>
#include <vector>

#include "mocposite/complex_core.hpp"
#include "mocposite/continuation.hpp"
#include "mocposite/slit_domain.hpp"

namespace mocposite {

enum class BranchName {
  f1_upper_half_plane,
  f2_odd_slit,
  f3_even_doubly_slit,
  log_z_squared,
  log_sin,
  cos_sqrt,
  joukowski,
  joukowski_inverse_disk,
};

// Pairs a branch with the standard domain it is single-valued on.
struct BranchTag {
  BranchName name;
  SlitDomain domain;
};

BranchTag branch_tag(BranchName name, double truncation_radius = 10.0);

// sqrt(1 - z^2) on the upper half plane, as a plain composite with the
// principal root.
Complex eval_f1(Complex z);

// The odd branch of sqrt(1 - z^2) on the plane minus [-1, 1], via the single
// closed form -i*z*sqrt(1 - 1/z^2).
Complex eval_f2(Complex z);

// The even branch of sqrt(1 - z^2) on the plane minus (-inf,-1] and [1,inf);
// positive on (-1, 1).
Complex eval_f3(Complex z);

// 2*log z off the negative real axis; exp(result) = z^2.
Complex eval_log_z2(Complex z);

// Holomorphic logarithm of sin, normalized to 0 at pi/2, on the plane minus
// vertical upward slits at each multiple of pi.  Computed by logarithmic
// continuation along a canonical path that follows the real axis and dips
// below it in a radius-0.1 semicircle around each slit foot.
Complex eval_log_sin(Complex z);

// Entire series sum_{n>=0} (-1)^n z^n / (2n)!; equals cos(sqrt(z)) for any
// branch of the root.
Complex eval_cos_sqrt(Complex z);

// (z + 1/z)/2 on the punctured plane.
Complex joukowski(Complex z);

// Inverse of joukowski restricted to the punctured unit disk: c - i*eval_f2(c).
Complex joukowski_inverse_disk(Complex c);

// Growth-order estimate: slope of the least-squares fit of log log M(r)
// against log r, with M(r) the max of |f| over 256 circle samples.
// radii must be increasing, each >= 10, at least 3 of them.
double estimate_order(const Evaluator& f, const std::vector<double>& radii);

// Dispatcher used by the CLI.
Complex evaluate_branch(BranchName name, Complex z);
BranchName branch_from_string(const std::string& name);
std::string to_string(BranchName name);

}  // namespace mocposite
