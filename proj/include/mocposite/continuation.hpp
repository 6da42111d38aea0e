#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mocposite/complex_core.hpp"
#include "mocposite/slit_domain.hpp"

namespace mocposite {

using Evaluator = std::function<Complex(Complex)>;

enum class Equation { sqrt_of_g, log_of_g };

// Record of one continuation run.  samples holds (z, w) in traversal order,
// including points inserted by adaptive bisection; refinements counts the
// segment splits that were needed.
struct ContinuationTrace {
  std::vector<std::pair<Complex, Complex>> samples;
  Complex terminal;
  int refinements = 0;
};

// Tracks the branch of sqrt(g) along the path, starting from the root of
// w^2 = g(path[0]) nearest the seed.  At each sample the root nearer the
// previous value is chosen; a step is accepted only when
// |w_k - w_{k-1}| < 0.8*|w_{k-1}|, otherwise the segment is bisected
// (depth limit 40).  |g| <= 1e-12 anywhere on the walk is a branch point.
ContinuationTrace continue_sqrt(const Evaluator& g, const PolyPath& path, Complex w0);

// Tracks u with exp(u) = g(z): u_k = u_{k-1} + principal_log(g_k/g_{k-1}),
// bisecting whenever |g_k/g_{k-1} - 1| >= 0.5.
ContinuationTrace continue_log(const Evaluator& g, const PolyPath& path, Complex u0);

// Monodromy of a closed loop.  For sqrt_of_g returns +1 or -1 according to
// whether the terminal equals the seed or its negation (1e-8 relative);
// for log_of_g returns the integer k with terminal - seed = 2*pi*i*k
// (residual below 1e-6).  Anything else is a consistency error.
int monodromy_of_loop(Equation equation, const Evaluator& g, const PolyPath& loop,
                      Complex seed);

enum class Parity { odd, even, inconsistent };

std::string to_string(Parity p);

// Continues w^2 = 1 - z^2 from z0 to -z0 along the given in-domain path and
// classifies the branch by comparing the terminal against -w0 (odd) or
// +w0 (even).
Parity parity_probe(const SlitDomain& domain, Complex z0, const PolyPath& path_to_negation);

}  // namespace mocposite
