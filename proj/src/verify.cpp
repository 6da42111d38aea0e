#include "mocposite/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "mocposite/branches.hpp"
#include "mocposite/continuation.hpp"
#include "mocposite/quadrature.hpp"

namespace mocposite {

namespace {

// Record sink applying the suite-wide tolerance and order overrides.
class Recorder {
 public:
  Recorder(std::vector<VerificationRecord>& out, const SuiteOptions& opts)
      : out_(out), opts_(opts) {}

  void add(std::string name, Complex computed, Complex expected, double tol) {
    if (opts_.tol_override) tol = *opts_.tol_override;
    out_.push_back(make_record(std::move(name), computed, expected, tol));
  }

  void add_max(std::string name, double max_err, double tol) {
    add(std::move(name), Complex(max_err, 0), Complex(0, 0), tol);
  }

  void add_raw(VerificationRecord rec) {
    if (opts_.tol_override) {
      rec.tol = *opts_.tol_override;
      rec.pass = std::isfinite(rec.abs_err) && rec.abs_err <= rec.tol;
    }
    out_.push_back(std::move(rec));
  }

  int order(int fallback) const { return opts_.n_override.value_or(fallback); }

 private:
  std::vector<VerificationRecord>& out_;
  const SuiteOptions& opts_;
};

PolyPath circle_loop(Complex center, double radius, int samples) {
  PolyPath loop;
  loop.closed = true;
  for (int j = 0; j < samples; ++j) {
    double theta = 2 * kPi * j / samples;
    loop.points.push_back(center + std::polar(radius, theta));
  }
  return loop;
}

int parity_value(Parity p) {
  if (p == Parity::odd) return -1;
  if (p == Parity::even) return 1;
  return 0;
}

double interval_distance(Complex z) {
  return point_segment_distance(z, Complex(-1, 0), Complex(1, 0));
}

Complex sample_slit_plane(Rng& rng) {
  for (;;) {
    Complex z = rng.box(-3, 3, -3, 3);
    if (interval_distance(z) > 1e-3) return z;
  }
}

Complex sample_double_ray_plane(Rng& rng) {
  for (;;) {
    Complex z = rng.box(-3, 3, -3, 3);
    double d = std::min(point_ray_distance(z, Complex(1, 0), Complex(1, 0)),
                        point_ray_distance(z, Complex(-1, 0), Complex(-1, 0)));
    if (d > 1e-3) return z;
  }
}

Complex sample_upper_half(Rng& rng) { return rng.box(-3, 3, 1e-3, 3); }

void branches_records(std::vector<VerificationRecord>& recs, const SuiteOptions& opts) {
  Recorder r(recs, opts);
  const double rt2 = std::sqrt(2.0), rt3 = std::sqrt(3.0), rt5 = std::sqrt(5.0);

  r.add("branches.f1.at_i", eval_f1(Complex(0, 1)), Complex(rt2, 0), 1e-12);
  r.add("branches.f1.at_2i", eval_f1(Complex(0, 2)), Complex(rt5, 0), 1e-12);
  r.add_max("branches.f1.small_near_one", std::abs(eval_f1(Complex(1, 0.001))), 0.05);

  r.add("branches.f2.at_2", eval_f2(Complex(2, 0)), Complex(0, -rt3), 1e-12);
  r.add("branches.f2.at_minus_2", eval_f2(Complex(-2, 0)), Complex(0, rt3), 1e-12);

  r.add("branches.f3.at_0", eval_f3(Complex(0, 0)), Complex(1, 0), 1e-14);
  r.add("branches.f3.at_half", eval_f3(Complex(0.5, 0)), Complex(std::sqrt(0.75), 0), 1e-14);
  r.add("branches.f3.at_minus_2i", eval_f3(Complex(0, -2)), Complex(rt5, 0), 1e-12);

  const Complex eighth = Complex(1 / rt2, 1 / rt2);
  r.add("branches.log_z2.at_eighth_root", eval_log_z2(eighth), Complex(0, kPi / 2), 1e-13);
  r.add("branches.log_z2.at_neg_eighth_root", eval_log_z2(-eighth),
        Complex(0, -1.5 * kPi), 1e-13);
  r.add("branches.log_z2.at_1", eval_log_z2(Complex(1, 0)), Complex(0, 0), 1e-14);

  r.add("branches.log_sin.at_half_pi", eval_log_sin(Complex(kPi / 2, 0)), Complex(0, 0),
        1e-12);
  r.add("branches.log_sin.at_5half_pi", eval_log_sin(Complex(2.5 * kPi, 0)),
        Complex(0, 2 * kPi), 1e-9);
  r.add("branches.log_sin.at_minus_half_pi", eval_log_sin(Complex(-kPi / 2, 0)),
        Complex(0, -kPi), 1e-9);

  r.add("branches.cos_sqrt.at_0", eval_cos_sqrt(Complex(0, 0)), Complex(1, 0), 1e-15);
  r.add("branches.cos_sqrt.at_quarter_pi_sq", eval_cos_sqrt(Complex(kPi * kPi / 4, 0)),
        Complex(0, 0), 1e-14);
  r.add("branches.cos_sqrt.at_minus_1", eval_cos_sqrt(Complex(-1, 0)),
        Complex(std::cosh(1.0), 0), 1e-12);

  r.add("branches.joukowski.at_sixth_turn", joukowski(std::polar(1.0, kPi / 3)),
        Complex(0.5, 0), 1e-12);
  r.add("branches.joukowski.at_half", joukowski(Complex(0.5, 0)), Complex(1.25, 0), 1e-14);
  r.add("branches.joukowski.at_2", joukowski(Complex(2, 0)), Complex(1.25, 0), 1e-14);

  r.add("branches.joukowski_inverse.at_1p25", joukowski_inverse_disk(Complex(1.25, 0)),
        Complex(0.5, 0), 1e-12);
  r.add("branches.joukowski_inverse.at_2", joukowski_inverse_disk(Complex(2, 0)),
        Complex(2 - rt3, 0), 1e-12);
  r.add_max("branches.joukowski_inverse.at_10i_in_disk",
            std::abs(joukowski_inverse_disk(Complex(0, 10))), 1.0 - 1e-9);

  // Orders.  The stated radii would push cosh past double range for cos
  // itself, so cos runs on smaller (still >= 10) radii; cos(sqrt(z)) keeps
  // the large ones.
  Evaluator cos_via_series = [](Complex z) { return eval_cos_sqrt(z * z); };
  r.add("branches.order.cos",
        Complex(estimate_order(cos_via_series, {10.0, std::pow(10.0, 1.5), 100.0}), 0),
        Complex(1, 0), 0.05);
  r.add("branches.order.cos_sqrt",
        Complex(estimate_order([](Complex z) { return eval_cos_sqrt(z); },
                               {1e2, 1e3, 1e4}),
                0),
        Complex(0.5, 0), 0.05);
  r.add("branches.order.poly_degree5",
        Complex(estimate_order([](Complex z) { return z * z * z * z * z + 1.0; },
                               {1e2, 1e3, 1e4}),
                0),
        Complex(0, 0), 0.2);

  // Seeded grids.
  Rng rng(opts.seed);
  double f2_square = 0, f3_square = 0, f2_odd = 0, f3_even = 0, f2_reflect = 0;
  for (int i = 0; i < 1000; ++i) {
    Complex z = sample_slit_plane(rng);
    Complex w = eval_f2(z);
    f2_square = std::max(f2_square, std::abs(w * w - (1.0 - z * z)) / std::abs(1.0 - z * z));
    f2_odd = std::max(f2_odd,
                      std::abs(eval_f2(-z) + w) / (1.0 + std::norm(z)));
    f2_reflect = std::max(f2_reflect, std::abs(eval_f2(std::conj(z)) + std::conj(w)));

    Complex y = sample_double_ray_plane(rng);
    Complex v = eval_f3(y);
    f3_square = std::max(f3_square, std::abs(v * v - (1.0 - y * y)) / std::abs(1.0 - y * y));
    f3_even = std::max(f3_even,
                       std::abs(eval_f3(-y) - v) / (1.0 + std::norm(y)));
  }
  r.add_max("branches.grid.f2_square", f2_square, 1e-12);
  r.add_max("branches.grid.f3_square", f3_square, 1e-12);
  r.add_max("branches.grid.f2_odd", f2_odd, 1e-12);
  r.add_max("branches.grid.f3_even", f3_even, 1e-12);
  r.add_max("branches.grid.f2_reflection", f2_reflect, 1e-12);

  double agree_f2 = 0, agree_f3 = 0;
  for (int i = 0; i < 1000; ++i) {
    Complex z = sample_upper_half(rng);
    Complex f1v = eval_f1(z);
    agree_f2 = std::max(agree_f2, std::abs(f1v - eval_f2(z)));
    agree_f3 = std::max(agree_f3, std::abs(f1v - eval_f3(z)));
  }
  r.add_max("branches.grid.agree_f1_f2", agree_f2, 1e-13);
  r.add_max("branches.grid.agree_f1_f3", agree_f3, 1e-13);

  double invol = 0;
  for (int i = 0; i < 1000; ++i) {
    Complex z, w;
    for (;;) {
      z = sample_slit_plane(rng);
      w = eval_f2(z);
      if (interval_distance(w) > 1e-5) break;
    }
    invol = std::max(invol, std::abs(-eval_f2(w) - z) / (1.0 + std::abs(z)));
  }
  r.add_max("branches.grid.f2_involution", invol, 1e-11);

  double roundtrip = 0, inside = 0;
  for (int i = 0; i < 500; ++i) {
    Complex c = sample_slit_plane(rng);
    Complex w = joukowski_inverse_disk(c);
    roundtrip = std::max(roundtrip, std::abs(joukowski(w) - c));
    inside = std::max(inside, std::abs(w));
  }
  r.add_max("branches.grid.joukowski_roundtrip", roundtrip, 1e-11);
  r.add_max("branches.grid.joukowski_inverse_in_disk", inside, 1.0 - 1e-9);

  double log_sin_rel = 0;
  for (int i = 0; i < 60; ++i) {
    Complex z;
    for (;;) {
      z = rng.box(-8.5, 8.5, -2.5, 2.5);
      long long n0 = std::llround(z.real() / kPi);
      double best = 1e300;
      for (long long n = n0 - 1; n <= n0 + 1; ++n) {
        double dx = z.real() - n * kPi;
        best = std::min(best, z.imag() >= 0 ? std::abs(dx) : std::hypot(dx, z.imag()));
      }
      if (best > 0.05) break;
    }
    Complex s = std::sin(z);
    log_sin_rel = std::max(log_sin_rel, std::abs(std::exp(eval_log_sin(z)) - s) / std::abs(s));
  }
  r.add_max("branches.grid.log_sin_exponentiates", log_sin_rel, 1e-10);

  double cos_rel = 0;
  for (int i = 0; i < 100; ++i) {
    Complex z, c;
    for (;;) {
      z = rng.box(-10, 10, -10, 10);
      if (std::abs(z) > 10) continue;
      c = std::cos(z);
      double scale = std::max(1.0, 0.5 * std::exp(std::abs(z.imag())));
      if (std::abs(c) > 1e-6 * scale) break;
    }
    cos_rel = std::max(cos_rel, std::abs(eval_cos_sqrt(z * z) - c) / std::abs(c));
  }
  r.add_max("branches.grid.cos_sqrt_matches_cos", cos_rel, 1e-12);
}

void parity_records(std::vector<VerificationRecord>& recs, const SuiteOptions& opts,
                    const std::string& prefix) {
  Recorder r(recs, opts);

  SlitDomain slit = make_standard_domain(StandardDomain::slit_interval, 10);
  PolyPath around;
  around.points.push_back(Complex(0, 2));
  for (int j = 1; j < 96; ++j)
    around.points.push_back(std::polar(2.0, kPi / 2 + kPi * j / 96.0));
  around.points.push_back(Complex(0, -2));
  r.add(prefix + "slit_interval",
        Complex(parity_value(parity_probe(slit, Complex(0, 2), around)), 0), Complex(-1, 0),
        0.5);

  SlitDomain dray = make_standard_domain(StandardDomain::double_ray, 10);
  PolyPath through;
  through.points = {Complex(0, 0.5), Complex(0, 0), Complex(0, -0.5)};
  r.add(prefix + "double_ray",
        Complex(parity_value(parity_probe(dray, Complex(0, 0.5), through)), 0),
        Complex(1, 0), 0.5);

  Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
  auto probe3 = [&](const SlitDomain& dom, const std::vector<PolyPath>& paths,
                    const std::string& name) {
    int v[3];
    for (int k = 0; k < 3; ++k)
      v[k] = parity_value(parity_probe(dom, Complex(0, 3), paths[k]));
    r.add(name + "path1", Complex(v[0], 0), Complex(v[0], 0), 0.5);
    r.add(name + "path2_agrees", Complex(v[1], 0), Complex(v[0], 0), 0.5);
    r.add(name + "path3_agrees", Complex(v[2], 0), Complex(v[0], 0), 0.5);
    r.add(name + "classified", Complex(v[0] != 0 && v[1] != 0 && v[2] != 0 ? 1 : 0, 0),
          Complex(1, 0), 0.5);
  };
  probe3(make_standard_domain(StandardDomain::comb, 10), comb_probe_paths(rng),
         prefix + "comb.");
  probe3(make_standard_domain(StandardDomain::double_spiral, 10), spiral_probe_paths(rng),
         prefix + "double_spiral.");
}

void continuation_records(std::vector<VerificationRecord>& recs, const SuiteOptions& opts) {
  Recorder r(recs, opts);
  Evaluator identity = [](Complex z) { return z; };
  Evaluator one_minus_z2 = [](Complex z) { return 1.0 - z * z; };
  Evaluator square = [](Complex z) { return z * z; };

  PolyPath unit_loop = circle_loop(Complex(0, 0), 1, 64);
  r.add("continuation.sqrt.identity_unit_loop",
        continue_sqrt(identity, unit_loop, Complex(1, 0)).terminal, Complex(-1, 0), 1e-9);

  PolyPath r2_loop = circle_loop(Complex(0, 0), 2, 96);
  Complex w2 = eval_f2(Complex(2, 0));
  r.add("continuation.sqrt.f2_loop_radius2",
        continue_sqrt(one_minus_z2, r2_loop, w2).terminal, w2, 1e-9);

  PolyPath half_loop = circle_loop(Complex(1, 0), 0.5, 64);
  Complex w15 = eval_f2(Complex(1.5, 0));
  r.add("continuation.sqrt.loop_around_1",
        continue_sqrt(one_minus_z2, half_loop, w15).terminal, -w15, 1e-9);

  r.add("continuation.log.identity_unit_loop",
        continue_log(identity, unit_loop, Complex(0, 0)).terminal, Complex(0, 2 * kPi),
        1e-9);
  r.add("continuation.log.sin_to_5half_pi", eval_log_sin(Complex(2.5 * kPi, 0)),
        Complex(0, 2 * kPi), 1e-9);
  r.add("continuation.log.square_unit_loop",
        continue_log(square, unit_loop, Complex(0, 0)).terminal, Complex(0, 4 * kPi), 1e-9);

  r.add("continuation.monodromy.sqrt_radius2",
        Complex(monodromy_of_loop(Equation::sqrt_of_g, one_minus_z2, r2_loop, w2), 0),
        Complex(1, 0), 0.5);
  r.add("continuation.monodromy.sqrt_around_1",
        Complex(monodromy_of_loop(Equation::sqrt_of_g, one_minus_z2, half_loop, w15), 0),
        Complex(-1, 0), 0.5);
  r.add("continuation.monodromy.log_identity",
        Complex(monodromy_of_loop(Equation::log_of_g, identity, unit_loop, Complex(0, 0)),
                0),
        Complex(1, 0), 0.5);

  Rng rng(opts.seed);
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    PolyPath loop = random_loop_avoiding_pm1(rng);
    int w_plus = winding_number(loop, Complex(1, 0), 0.05);
    int w_minus = winding_number(loop, Complex(-1, 0), 0.05);
    Complex z0 = loop.points.front();
    Complex seed = principal_sqrt(1.0 - z0 * z0);
    int sign = monodromy_of_loop(Equation::sqrt_of_g, one_minus_z2, loop, seed);
    int expected = (w_plus + w_minus) % 2 == 0 ? 1 : -1;
    if (sign != expected) ++failures;
  }
  r.add("continuation.winding_theorem.failures_of_50", Complex(failures, 0), Complex(0, 0),
        0.5);

  parity_records(recs, opts, "continuation.parity.");
}

void quadrature_records(std::vector<VerificationRecord>& recs, const SuiteOptions& opts) {
  Recorder r(recs, opts);
  const double rt3 = std::sqrt(3.0);

  QuadratureRule c2 = make_chebyshev_second(2);
  r.add("quadrature.rule.cheb2_n2_const",
        integrate_weighted(c2, [](double) { return Complex(1, 0); }), Complex(kPi / 2, 0),
        1e-14);
  r.add("quadrature.rule.cheb1_n4_const",
        integrate_weighted(make_chebyshev_first(4), [](double) { return Complex(1, 0); }),
        Complex(kPi, 0), 1e-14);
  r.add("quadrature.rule.cheb2_n2_odd",
        integrate_weighted(c2, [](double t) { return Complex(t, 0); }), Complex(0, 0),
        1e-15);

  int n_real = r.order(200);
  r.add("quadrature.crack.at_2", crack_integral(Complex(2, 0), n_real),
        Complex(2 - rt3, 0), 1e-12);
  r.add("quadrature.crack.at_minus_2", crack_integral(Complex(-2, 0), n_real),
        Complex(-(2 - rt3), 0), 1e-12);

  const Complex crack_grid[6] = {Complex(2, 0),   Complex(3, 0),        Complex(-2, 0),
                                 Complex(1.5, 0), Complex(0.5, 1.2),    Complex(-0.3, -2)};
  int n_grid = r.order(400);
  double antisym = 0;
  for (int i = 0; i < 6; ++i) {
    Complex z = crack_grid[i];
    char name[64];
    std::snprintf(name, sizeof(name), "quadrature.crack.closed_form_%d", i);
    r.add(name, crack_integral(z, n_grid), z - Complex(0, 1) * eval_f2(z), 1e-10);
    antisym = std::max(antisym,
                       std::abs(crack_integral(-z, n_grid) + crack_integral(z, n_grid)));
  }
  r.add_max("quadrature.crack.antisymmetry", antisym, 1e-15);

  ContourSpec unit_circle{ContourKind::circle, Complex(0, 0), 1, 0, 0, Orientation::ccw,
                          256};
  r.add("quadrature.contour.residue_unit_circle",
        contour_integral(unit_circle, [](Complex w) { return 1.0 / w; }),
        Complex(0, 2 * kPi), 1e-12);
  r.add("quadrature.contour.argument_principle_z2",
        contour_integral(unit_circle, [](Complex w) { return 2.0 / w; }) /
            Complex(0, 2 * kPi),
        Complex(2, 0), 1e-12);

  ContourSpec circle5{ContourKind::circle, Complex(0, 0), 5, 0, 0, Orientation::ccw, 512};
  r.add("quadrature.contour.large_circle_linear_tail",
        contour_integral(circle5,
                         [](Complex w) { return Complex(0, -1) * w / (2.0 - w); }),
        Complex(-4 * kPi, 0), 1e-10);

  Evaluator cubic = [](Complex w) { return w * w * w - 2.0 * w + 1.0; };
  ContourSpec circle2{ContourKind::circle, Complex(0, 0), 2, 0, 0, Orientation::ccw, 256};
  ContourSpec ellipse15{ContourKind::ellipse, Complex(0, 0), 0, 1.5, 0.4,
                        Orientation::ccw, 256};
  r.add("quadrature.contour.polynomial_circle", contour_integral(circle2, cubic),
        Complex(0, 0), 1e-12);
  r.add("quadrature.contour.polynomial_ellipse", contour_integral(ellipse15, cubic),
        Complex(0, 0), 1e-12);

  Evaluator pole = [](Complex w) { return 1.0 / (w - 0.3); };
  ContourSpec cw_circle = circle2;
  cw_circle.orientation = Orientation::cw;
  r.add_max("quadrature.contour.orientation_antisymmetry",
            std::abs(contour_integral(circle2, pole) + contour_integral(cw_circle, pole)),
            0.0);

  const Complex collapse_grid[3] = {Complex(2, 1), Complex(3, 0), Complex(-2, 0.5)};
  for (Complex z : collapse_grid) {
    VerificationRecord rec = verify_collapse(z, 6, 1.2, 0.2, 1024);
    rec.name = "quadrature." + rec.name;
    r.add_raw(std::move(rec));
  }
  {
    VerificationRecord rec = verify_collapse(Complex(3, 0), 8, 1.1, 0.1, 2048);
    rec.name = "quadrature." + rec.name;
    r.add_raw(std::move(rec));
  }

  int n_bessel = r.order(128);
  r.add("quadrature.bessel.at_0", bessel_j0_quadrature(Complex(0, 0), r.order(64)),
        Complex(1, 0), 1e-14);
  r.add("quadrature.bessel.at_2_vs_series", bessel_j0_quadrature(Complex(2, 0), r.order(64)),
        bessel_j0_series(Complex(2, 0)), 1e-12);
  double grid_err = 0, evenness = 0;
  for (int k = -32; k <= 32; ++k) {
    Complex z(k * 0.25, 0);
    Complex q = bessel_j0_quadrature(z, n_bessel);
    grid_err = std::max(grid_err, std::abs(q - bessel_j0_series(z)));
    evenness = std::max(evenness, std::abs(bessel_j0_quadrature(-z, n_bessel) - q));
  }
  r.add_max("quadrature.bessel.series_agreement_grid", grid_err, 1e-10);
  r.add_max("quadrature.bessel.evenness", evenness, 0.0);
}

void exercises_records(std::vector<VerificationRecord>& recs, const SuiteOptions& opts) {
  Recorder r(recs, opts);
  parity_records(recs, opts, "exercises.ex1.");

  for (int n = -3; n <= 3; ++n) {
    char name[64];
    std::snprintf(name, sizeof(name), "exercises.ex2.log_sin_n%+d", n);
    r.add(name, eval_log_sin(Complex((n + 0.5) * kPi, 0)), Complex(0, n * kPi), 1e-9);
  }

  r.add("exercises.ex3.crack_at_2", crack_integral(Complex(2, 0), r.order(200)),
        Complex(2 - std::sqrt(3.0), 0), 1e-12);
  r.add("exercises.ex3.bessel_at_2", bessel_j0_quadrature(Complex(2, 0), r.order(64)),
        bessel_j0_series(Complex(2, 0)), 1e-12);

  Rng rng(opts.seed);
  double agree = 0;
  for (int i = 0; i < 1000; ++i) {
    Complex z = sample_upper_half(rng);
    agree = std::max(agree, std::abs(eval_f2(z) - eval_f1(z)));
  }
  r.add_max("exercises.ex4.f2_equals_f1_grid", agree, 1e-13);
}

}  // namespace

Suite suite_from_string(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "branches") return Suite::branches;
  if (name == "continuation") return Suite::continuation;
  if (name == "quadrature") return Suite::quadrature;
  if (name == "exercises") return Suite::exercises;
  throw UsageError("unknown suite: " + name);
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::all: return "all";
    case Suite::branches: return "branches";
    case Suite::continuation: return "continuation";
    case Suite::quadrature: return "quadrature";
    case Suite::exercises: return "exercises";
  }
  return "unknown";
}

PolyPath random_loop_avoiding_pm1(Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    int nv = 4 + static_cast<int>(rng.unit() * 7);
    PolyPath loop;
    loop.closed = true;
    for (int i = 0; i < nv; ++i) loop.points.push_back(rng.box(-3.5, 3.5, -3.5, 3.5));
    bool ok = true;
    for (int i = 0; i < nv && ok; ++i) {
      Complex a = loop.points[i];
      Complex b = loop.points[(i + 1) % nv];
      if (std::abs(b - a) < 1e-6 ||
          point_segment_distance(Complex(1, 0), a, b) < 0.1 ||
          point_segment_distance(Complex(-1, 0), a, b) < 0.1)
        ok = false;
    }
    if (ok) return loop;
  }
  throw NumericError("random_loop_avoiding_pm1: rejection sampling failed");
}

std::vector<PolyPath> comb_probe_paths(Rng& rng) {
  std::vector<PolyPath> out;
  for (int v = 0; v < 3; ++v) {
    double mid_radius = 2.55 + 0.35 * rng.unit();
    double wobble = v == 2 ? 0.12 : 0.0;
    bool left = v == 1;
    PolyPath path;
    path.points.push_back(Complex(0, 3));
    const int N = 96;
    for (int j = 1; j < N; ++j) {
      double t = static_cast<double>(j) / N;
      double theta = left ? kPi / 2 + kPi * t : kPi / 2 - kPi * t;
      double rad = 3.0 + (mid_radius - 3.0) * std::sin(kPi * t) +
                   wobble * std::sin(5 * kPi * t);
      path.points.push_back(std::polar(rad, theta));
    }
    path.points.push_back(Complex(0, -3));
    out.push_back(std::move(path));
  }
  return out;
}

std::vector<PolyPath> spiral_probe_paths(Rng& rng) {
  std::vector<PolyPath> out;
  for (int v = 0; v < 3; ++v) {
    // Phase offset of the corridor midline from the arms; pi/2 is dead center
    // and the jitter keeps at least ~0.146 radial clearance.
    double delta = kPi / 2 + 0.22 * (rng.unit() - 0.5);
    double mouth_angle = 11.0 + delta - 4 * kPi;
    std::vector<Complex> half;
    half.push_back(Complex(0, 3));
    const int NA = 64;
    for (int j = 1; j <= NA; ++j) {
      double t = static_cast<double>(j) / NA;
      half.push_back(std::polar(3.0 + (2.1 - 3.0) * t,
                                kPi / 2 + (mouth_angle - kPi / 2) * t));
    }
    const int NC = 221;
    for (int j = 1; j <= NC; ++j) {
      double t = 11.0 * (1.0 - static_cast<double>(j) / NC);
      half.push_back(std::polar(1.0 + 0.1 * t, t + delta));
    }
    PolyPath path;
    path.points = half;
    path.points.push_back(Complex(0, 0));
    for (auto it = half.rbegin(); it != half.rend(); ++it) path.points.push_back(-*it);
    out.push_back(std::move(path));
  }
  return out;
}

VerificationReport run_suite(Suite suite, const SuiteOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  switch (suite) {
    case Suite::branches:
      branches_records(report.records, opts);
      break;
    case Suite::continuation:
      continuation_records(report.records, opts);
      break;
    case Suite::quadrature:
      quadrature_records(report.records, opts);
      break;
    case Suite::exercises:
      exercises_records(report.records, opts);
      break;
    case Suite::all:
      branches_records(report.records, opts);
      continuation_records(report.records, opts);
      quadrature_records(report.records, opts);
      exercises_records(report.records, opts);
      break;
  }
  finalize(report);
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

}  // namespace mocposite
