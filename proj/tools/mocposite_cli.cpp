#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mocposite/branches.hpp"
#include "mocposite/continuation.hpp"
#include "mocposite/errors.hpp"
#include "mocposite/io.hpp"
#include "mocposite/svg.hpp"
#include "mocposite/verify.hpp"

namespace {

using namespace mocposite;

Complex parse_point(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '[' && c != ']') s.push_back(c);
  auto parse_double = [](const std::string& part) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse number: " + part);
    }
    if (used != part.size()) throw UsageError("cannot parse number: " + part);
    return v;
  };
  std::size_t comma = s.find(',');
  if (comma == std::string::npos) return Complex(parse_double(s), 0);
  return Complex(parse_double(s.substr(0, comma)), parse_double(s.substr(comma + 1)));
}

std::string format_full(Complex z) {
  char buf[72];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
  return buf;
}

std::string format_short(Complex z) {
  char buf[56];
  std::snprintf(buf, sizeof(buf), "%.10g,%.10g", z.real(), z.imag());
  return buf;
}

SlitDomain domain_from_input(const nlohmann::json& j) {
  if (j.contains("standard")) {
    const std::string name = j.at("standard").get<std::string>();
    const double radius = j.value("truncation_radius", 10.0);
    StandardDomain kind;
    if (name == "slit_interval") kind = StandardDomain::slit_interval;
    else if (name == "double_ray") kind = StandardDomain::double_ray;
    else if (name == "comb") kind = StandardDomain::comb;
    else if (name == "double_spiral") kind = StandardDomain::double_spiral;
    else if (name == "sine_slits") kind = StandardDomain::sine_slits;
    else throw UsageError("unknown standard domain: " + name);
    return make_standard_domain(kind, radius);
  }
  if (j.contains("domain")) return domain_from_json(j.at("domain"));
  throw UsageError("input needs either \"domain\" or \"standard\"");
}

int do_verify(const std::string& suite_name, const std::string& report_path,
              const SuiteOptions& opts, const std::string& csv_path) {
  VerificationReport report = run_suite(suite_from_string(suite_name), opts);
  write_text_file(report_path, to_json(report).dump(2) + "\n");

  std::size_t width = 4;
  for (const auto& rec : report.records) width = std::max(width, rec.name.size());
  for (const auto& rec : report.records)
    std::printf("%-*s  %-26s  %-26s  %9.3e  %8.2e  %s\n", static_cast<int>(width),
                rec.name.c_str(), format_short(rec.computed).c_str(),
                format_short(rec.expected).c_str(), rec.abs_err, rec.tol,
                rec.pass ? "pass" : "FAIL");
  std::printf("%d of %d records passed in %lld ms\n", report.passed, report.total,
              static_cast<long long>(report.wall_time_ms));

  if (!csv_path.empty()) {
    std::string csv = "name,computed_re,computed_im,expected_re,expected_im,abs_err,tol,pass\n";
    for (const auto& rec : report.records) {
      char line[320];
      std::snprintf(line, sizeof(line), "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n",
                    rec.name.c_str(), rec.computed.real(), rec.computed.imag(),
                    rec.expected.real(), rec.expected.imag(), rec.abs_err, rec.tol,
                    rec.pass ? "true" : "false");
      csv += line;
    }
    write_text_file(csv_path, csv);
  }
  return report.passed == report.total ? 0 : 1;
}

int do_eval(const std::string& branch, const std::string& point) {
  Complex w = evaluate_branch(branch_from_string(branch), parse_point(point));
  std::printf("%s\n", format_full(w).c_str());
  return 0;
}

Evaluator named_evaluator(const std::string& name) {
  if (name == "identity") return [](Complex z) { return z; };
  if (name == "one_minus_z2") return [](Complex z) { return 1.0 - z * z; };
  if (name == "z_squared") return [](Complex z) { return z * z; };
  if (name == "sin") return [](Complex z) { return std::sin(z); };
  throw UsageError("unknown evaluator: " + name);
}

int do_continue(const std::string& input, const std::string& out) {
  nlohmann::json j = load_json_file(input);
  const std::string equation = j.at("equation").get<std::string>();
  Evaluator g = named_evaluator(j.at("g").get<std::string>());
  PolyPath path = path_from_json(j.at("path"));
  Complex seed = complex_from_json(j.at("seed"));
  ContinuationTrace trace;
  if (equation == "sqrt") trace = continue_sqrt(g, path, seed);
  else if (equation == "log") trace = continue_log(g, path, seed);
  else throw UsageError("equation must be sqrt or log");
  std::string dumped = to_json(trace).dump(2) + "\n";
  if (out == "-") std::fputs(dumped.c_str(), stdout);
  else write_text_file(out, dumped);
  return 0;
}

int do_parity(const std::string& input) {
  nlohmann::json j = load_json_file(input);
  SlitDomain domain = domain_from_input(j);
  Complex z0 = complex_from_json(j.at("z0"));
  PolyPath path = path_from_json(j.at("path"));
  std::printf("%s\n", to_string(parity_probe(domain, z0, path)).c_str());
  return 0;
}

int do_plot(const std::string& what, const std::string& input, const std::string& svg_out) {
  nlohmann::json j = load_json_file(input);
  std::string svg;
  if (what == "domain") {
    SlitDomain domain = j.contains("slits") ? domain_from_json(j) : domain_from_input(j);
    std::vector<PolyPath> paths;
    if (j.contains("paths"))
      for (const auto& pj : j.at("paths")) paths.push_back(path_from_json(pj));
    svg = render_domain_svg(domain, paths);
  } else if (what == "trace") {
    svg = render_trace_svg(trace_from_json(j));
  } else if (what == "contour") {
    svg = render_contours_svg(contours_from_json(j));
  } else {
    throw UsageError("unknown plot kind: " + what);
  }
  write_text_file(svg_out, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branch evaluation, analytic continuation, and contour quadrature toolkit"};
  app.require_subcommand(1);

  std::string suite = "all", report_path, csv_path, branch, point, input, out = "-";
  std::string what, svg_out;
  double tol = 0;
  int n = 0;
  std::uint64_t seed = 0;

  CLI::App* verify = app.add_subcommand("verify", "Run a suite and write a JSON report");
  verify->add_option("suite", suite, "all|branches|continuation|quadrature|exercises")
      ->capture_default_str();
  verify->add_option("report", report_path, "output JSON report path")->required();
  CLI::Option* tol_opt =
      verify->add_option("--tol", tol, "override every record tolerance")
          ->envname("MOCPOSITE_TOL");
  CLI::Option* n_opt = verify->add_option("--n", n, "override quadrature orders");
  verify->add_option("--seed", seed, "seed for pseudo-random grids")->capture_default_str();
  verify->add_option("--csv", csv_path, "also write the report as CSV");

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a named branch at a point");
  eval_cmd
      ->add_option("branch", branch,
                   "f1|f2|f3|log_z2|log_sin|cos_sqrt|joukowski|joukowski_inverse")
      ->required();
  eval_cmd->add_option("z", point, "complex point, re,im or [re,im]")->required();

  CLI::App* cont_cmd = app.add_subcommand("continue", "Continue sqrt or log of g along a path");
  cont_cmd->add_option("input", input, "continuation request JSON")->required();
  cont_cmd->add_option("--out", out, "trace output path, - for stdout")->capture_default_str();

  CLI::App* parity_cmd =
      app.add_subcommand("parity", "Classify square-root parity between z0 and -z0");
  parity_cmd->add_option("input", input, "parity request JSON")->required();

  CLI::App* plot_cmd = app.add_subcommand("plot", "Render domain, trace, or contours to SVG");
  plot_cmd->add_option("what", what, "domain|trace|contour")->required();
  plot_cmd->add_option("input", input, "input JSON path")->required();
  plot_cmd->add_option("svg", svg_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      SuiteOptions opts;
      if (tol_opt->count() > 0) opts.tol_override = tol;
      if (n_opt->count() > 0) opts.n_override = n;
      opts.seed = seed;
      return do_verify(suite, report_path, opts, csv_path);
    }
    if (eval_cmd->parsed()) return do_eval(branch, point);
    if (cont_cmd->parsed()) return do_continue(input, out);
    if (parity_cmd->parsed()) return do_parity(input);
    if (plot_cmd->parsed()) return do_plot(what, input, svg_out);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::fprintf(stderr, "error: malformed input: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
