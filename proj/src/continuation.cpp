#include "mocposite/continuation.hpp"

#include <cmath>

namespace mocposite {

namespace {

constexpr double kSingular = 1e-12;     // |g| at or below this is a branch point
constexpr double kSeedRel = 1e-8;       // seed consistency, relative
constexpr double kStepGate = 0.8;       // sqrt step acceptance factor
constexpr double kRatioGate = 0.5;      // log ratio-to-1 acceptance
constexpr double kMatchRel = 1e-8;      // terminal-vs-seed classification
constexpr double kLogResidual = 1e-6;   // monodromy integer recovery
constexpr int kMaxDepth = 40;

Complex eval_checked(const Evaluator& g, Complex z) {
  Complex v = g(z);
  if (!is_finite(v)) throw NumericError("continuation: g returned a non-finite value");
  if (std::abs(v) <= kSingular)
    throw SingularityError("continuation: path passes through a zero of g");
  return v;
}

struct SqrtWalker {
  const Evaluator& g;
  ContinuationTrace& trace;

  Complex pick_root(Complex gz, Complex prev) const {
    Complex r = principal_sqrt(gz);
    double d_plus = std::abs(r - prev);
    double d_minus = std::abs(-r - prev);
    if (std::abs(d_plus - d_minus) <= 1e-12)
      throw AmbiguityError("continue_sqrt: root choice is ambiguous");
    return d_plus < d_minus ? r : -r;
  }

  // Endpoint gates alone are foolable: a long step can wrap the phase of g by
  // a full turn in its interior and land back near g(start), silently
  // switching sheets.  A step is therefore accepted only when the gates also
  // hold at its midpoint; any wrap hides a dip of |g| that some tested
  // midpoint then exposes, forcing refinement down to the safe scale.
  Complex advance(Complex za, Complex ga, Complex wa, Complex zb, int depth) {
    Complex m = 0.5 * (za + zb);
    Complex gm = eval_checked(g, m);
    Complex gb = eval_checked(g, zb);
    if (std::abs(gm / ga - 1.0) < kRatioGate && std::abs(gb / gm - 1.0) < kRatioGate) {
      Complex wm = pick_root(gm, wa);
      if (std::abs(wm - wa) < kStepGate * std::abs(wa)) {
        Complex wb = pick_root(gb, wm);
        if (std::abs(wb - wm) < kStepGate * std::abs(wm)) {
          trace.samples.emplace_back(m, wm);
          trace.samples.emplace_back(zb, wb);
          return wb;
        }
      }
    }
    if (depth >= kMaxDepth)
      throw StepError("continue_sqrt: refinement depth exceeded (grazing a branch point?)");
    ++trace.refinements;
    Complex wm = advance(za, ga, wa, m, depth + 1);
    return advance(m, gm, wm, zb, depth + 1);
  }
};

struct LogWalker {
  const Evaluator& g;
  ContinuationTrace& trace;

  // Same midpoint certification as the sqrt walker: an interior phase wrap
  // of g would otherwise be invisible to the endpoint ratio and drop a
  // 2*pi*i increment of u.
  Complex advance(Complex za, Complex ga, Complex ua, Complex zb, int depth) {
    Complex m = 0.5 * (za + zb);
    Complex gm = eval_checked(g, m);
    Complex gb = eval_checked(g, zb);
    Complex r1 = gm / ga;
    Complex r2 = gb / gm;
    if (std::abs(r1 - 1.0) < kRatioGate && std::abs(r2 - 1.0) < kRatioGate) {
      Complex um = ua + principal_log(r1);
      trace.samples.emplace_back(m, um);
      Complex ub = um + principal_log(r2);
      trace.samples.emplace_back(zb, ub);
      return ub;
    }
    if (depth >= kMaxDepth)
      throw StepError("continue_log: refinement depth exceeded (grazing a zero of g?)");
    ++trace.refinements;
    Complex um = advance(za, ga, ua, m, depth + 1);
    return advance(m, gm, um, zb, depth + 1);
  }
};

std::vector<std::pair<Complex, Complex>> path_segments(const PolyPath& path) {
  std::size_t n = path.points.size();
  std::vector<std::pair<Complex, Complex>> segs;
  segs.reserve(n);
  for (std::size_t i = 0; i + 1 < n; ++i) segs.emplace_back(path.points[i], path.points[i + 1]);
  if (path.closed) segs.emplace_back(path.points[n - 1], path.points[0]);
  return segs;
}

}  // namespace

ContinuationTrace continue_sqrt(const Evaluator& g, const PolyPath& path, Complex w0) {
  validate(path);
  require_finite(w0, "continue_sqrt seed");
  Complex z0 = path.points.front();
  Complex g0 = eval_checked(g, z0);
  if (std::abs(w0 * w0 - g0) > kSeedRel * std::abs(g0))
    throw UsageError("continue_sqrt: seed does not satisfy w0^2 = g(start)");
  ContinuationTrace trace;
  SqrtWalker walker{g, trace};
  Complex w = walker.pick_root(g0, w0);
  trace.samples.emplace_back(z0, w);
  Complex ga = g0;
  for (const auto& [a, b] : path_segments(path)) {
    w = walker.advance(a, ga, w, b, 0);
    ga = eval_checked(g, b);
  }
  trace.terminal = w;
  return trace;
}

ContinuationTrace continue_log(const Evaluator& g, const PolyPath& path, Complex u0) {
  validate(path);
  require_finite(u0, "continue_log seed");
  Complex z0 = path.points.front();
  Complex g0 = eval_checked(g, z0);
  if (std::abs(std::exp(u0) - g0) > kSeedRel * std::abs(g0))
    throw UsageError("continue_log: seed does not satisfy exp(u0) = g(start)");
  ContinuationTrace trace;
  LogWalker walker{g, trace};
  trace.samples.emplace_back(z0, u0);
  Complex u = u0;
  Complex ga = g0;
  for (const auto& [a, b] : path_segments(path)) {
    u = walker.advance(a, ga, u, b, 0);
    ga = eval_checked(g, b);
  }
  trace.terminal = u;
  return trace;
}

int monodromy_of_loop(Equation equation, const Evaluator& g, const PolyPath& loop,
                      Complex seed) {
  if (!loop.closed) throw UsageError("monodromy_of_loop: loop must be closed");
  if (equation == Equation::sqrt_of_g) {
    ContinuationTrace t = continue_sqrt(g, loop, seed);
    Complex snapped = t.samples.front().second;
    double scale = kMatchRel * std::abs(snapped);
    if (std::abs(t.terminal - snapped) <= scale) return 1;
    if (std::abs(t.terminal + snapped) <= scale) return -1;
    throw ConsistencyError("monodromy_of_loop: terminal is neither seed nor its negation");
  }
  ContinuationTrace t = continue_log(g, loop, seed);
  Complex offset = t.terminal - seed;
  long long k = std::llround(offset.imag() / (2.0 * kPi));
  if (std::abs(offset - Complex(0.0, 2.0 * kPi * static_cast<double>(k))) > kLogResidual)
    throw ConsistencyError("monodromy_of_loop: offset is not an integer multiple of 2*pi*i");
  return static_cast<int>(k);
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::odd: return "odd";
    case Parity::even: return "even";
    default: return "inconsistent";
  }
}

Parity parity_probe(const SlitDomain& domain, Complex z0, const PolyPath& path_to_negation) {
  validate(domain);
  validate(path_to_negation);
  if (!contains(domain, z0) || !contains(domain, -z0))
    throw DomainError("parity_probe: z0 or -z0 is not in the domain");
  if (std::abs(path_to_negation.points.front() - z0) > 1e-12 ||
      std::abs(path_to_negation.points.back() + z0) > 1e-12)
    throw UsageError("parity_probe: path must run from z0 to -z0");
  if (path_to_negation.closed)
    throw UsageError("parity_probe: path must be open");
  if (!path_in_domain(domain, path_to_negation))
    throw GeometryError("parity_probe: path leaves the domain");
  Evaluator g = [](Complex z) { return 1.0 - z * z; };
  Complex w0 = principal_sqrt(1.0 - z0 * z0);
  ContinuationTrace t = continue_sqrt(g, path_to_negation, w0);
  Complex snapped = t.samples.front().second;
  double scale = kMatchRel * std::abs(snapped);
  if (std::abs(t.terminal + snapped) <= scale) return Parity::odd;
  if (std::abs(t.terminal - snapped) <= scale) return Parity::even;
  return Parity::inconsistent;
}

}  // namespace mocposite
