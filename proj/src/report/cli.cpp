#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lightlike/report.hpp"

namespace lightlike {

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitPointFailures = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string tuple(const Vector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? ", " : "") + num(v(i));
  return out + ")";
}

void print_matrix(std::ostream& out, const std::string& label, const Matrix& m) {
  out << label << " =\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) out << "  " << tuple(m.row(i).transpose()) << "\n";
}

std::vector<CoordinateChart::Parameter> parse_params(const std::vector<std::string>& raw) {
  std::vector<CoordinateChart::Parameter> out;
  for (const auto& s : raw) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects NAME=VALUE, got '" + s + "'");
    char* end = nullptr;
    const std::string value = s.substr(eq + 1);
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0') throw UsageError("--param value '" + value + "' is not a number");
    out.emplace_back(s.substr(0, eq), v);
  }
  return out;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw UsageError("--point entry '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--point is empty");
  return out;
}

double default_tolerance() {
  const char* env = std::getenv("TOLERANCE");
  if (!env || !*env) return 1e-8;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0)) throw UsageError(std::string("TOLERANCE='") + env + "' is not a positive number");
  return v;
}

struct Source {
  std::string generator_path;
  std::string builtin_name;
  std::vector<std::string> params;
};

GeneratorFile resolve(const Source& src) {
  if (!src.generator_path.empty() && !src.builtin_name.empty())
    throw UsageError("pass either --generator or --builtin, not both");
  if (!src.generator_path.empty()) {
    if (!src.params.empty()) throw UsageError("--param only applies to --builtin");
    return load_generator(src.generator_path);
  }
  if (src.builtin_name.empty()) throw UsageError("one of --generator or --builtin is required");
  const auto overrides = parse_params(src.params);
  CatalogEntry entry = [&] {
    try {
      return builtin(src.builtin_name, overrides);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }();
  return {std::move(entry.generator), std::move(entry.default_samples)};
}

void add_source_options(CLI::App* cmd, Source& src) {
  cmd->add_option("--generator", src.generator_path, "generator JSON file");
  cmd->add_option("--builtin", src.builtin_name, "built-in generator name (see list-builtins)");
  cmd->add_option("--param", src.params, "override a built-in parameter, NAME=VALUE")->take_all();
}

int run_classify(const Source& src, double tol, const std::string& out_path, unsigned threads,
                 std::ostream& out, std::ostream& err) {
  const GeneratorFile file = resolve(src);
  if (!file.samples.is_grid() && file.samples.points.empty())
    throw UsageError("generator has no \"samples\" section");
  const auto points = grid_sample(file.generator, file.samples);
  AnalysisOptions options;
  options.tolerances.tol = tol;
  options.threads = threads;
  const ClassificationReport report = classify(file.generator, points, options);
  const std::string text = dump_report(report);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw FileError("cannot write report '" + out_path + "'");
    f << text;
    if (!f) throw FileError("failed writing report '" + out_path + "'");
    out << "degenerate: " << to_string(report.degenerate.state)
        << "\ntotally_geodesic: " << to_string(report.totally_geodesic.state)
        << "\ntotally_umbilical: " << to_string(report.totally_umbilical.state)
        << "\nminimal: " << to_string(report.minimal.state) << "\nreport written to " << out_path
        << "\n";
  }
  if (report.failed * 10 > static_cast<int>(report.points.size())) {
    err << report.failed << " of " << report.points.size() << " points failed\n";
    return kExitPointFailures;
  }
  return 0;
}

int run_verify(const Source& src, double tol, std::ostream& out) {
  if (src.builtin_name.empty()) throw UsageError("verify needs --builtin");
  const auto overrides = parse_params(src.params);
  const CatalogEntry entry = [&] {
    try {
      return builtin(src.builtin_name, overrides);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const MongeGenerator& gen = entry.generator;
  const auto points = grid_sample(gen, entry.default_samples);
  AnalysisOptions options;
  options.tolerances.tol = tol;
  const ClassificationReport report = classify(gen, points, options);
  const ExpectedResults& want = entry.expected;
  bool all_pass = report.failed == 0;
  if (report.failed) out << "points: FAIL (" << report.failed << " failed)\n";

  auto verdict_line = [&](const char* label, const Verdict& v, std::optional<bool> expected,
                          const std::string& detail, bool detail_ok) {
    if (!expected) return;
    const VerdictState wanted = *expected ? VerdictState::True : VerdictState::False;
    const bool ok = v.state == wanted && detail_ok;
    all_pass = all_pass && ok;
    out << label << ": " << (ok ? "PASS" : "FAIL");
    if (v.state != wanted)
      out << " (expected " << to_string(wanted) << ", got " << to_string(v.state) << ")";
    if (!detail.empty()) out << " (" << detail << ")";
    out << "\n";
  };

  // Closed-form check of a per-point quantity against an expected expression.
  auto closed_form = [&](const std::optional<std::string>& source,
                         auto extract) -> std::pair<std::string, bool> {
    if (!source) return {"", true};
    const Expr expected = parse(*source, gen.chart());
    bool ok = true;
    for (const auto& r : report.points) {
      if (!r.analysis) continue;
      const auto got = extract(*r.analysis);
      if (!got) continue;
      const double want_v = evaluate(
          expected, {r.point.base.data(), static_cast<std::size_t>(r.point.base.size())},
          gen.params());
      if (!(std::abs(*got - want_v) <= tol * (1.0 + std::abs(want_v)))) ok = false;
    }
    return {*source + " ± " + format_number(tol), ok};
  };

  verdict_line("degenerate", report.degenerate, want.degenerate, "", true);
  if (want.lightlike_defect) {
    bool ok = true;
    for (const auto& r : report.points)
      if (r.analysis && !(std::abs(r.analysis->lightlike_defect - *want.lightlike_defect) <= tol))
        ok = false;
    all_pass = all_pass && ok;
    out << "lightlike defect: " << (ok ? "PASS" : "FAIL") << " ("
        << format_number(*want.lightlike_defect) << " ± " << format_number(tol) << ")\n";
  }
  verdict_line("geodesic", report.totally_geodesic, want.totally_geodesic, "", true);
  {
    auto [detail, ok] = closed_form(want.umbilic_rho, [](const PointAnalysis& a) {
      return a.umbilic ? std::optional<double>(a.umbilic->rho) : std::nullopt;
    });
    verdict_line("umbilical", report.totally_umbilical, want.totally_umbilical,
                 detail.empty() ? "" : "ρ̂ = " + detail, ok);
  }
  {
    auto [detail, ok] = closed_form(want.minimal_defect, [](const PointAnalysis& a) {
      return a.minimal_defect;
    });
    verdict_line("minimal", report.minimal, want.minimal,
                 detail.empty() ? "" : "defect = " + detail, ok);
  }
  out << (all_pass ? "verify: PASS" : "verify: FAIL") << " (" << gen.name() << ", "
      << report.points.size() << " points)\n";
  return all_pass ? 0 : kExitComputation;
}

int run_eval(const Source& src, const std::string& point_text, const std::string& show_text,
             double tol, std::ostream& out) {
  const GeneratorFile file = resolve(src);
  const MongeGenerator& gen = file.generator;
  const auto base = parse_point(point_text);
  if (static_cast<int>(base.size()) != gen.dimension())
    throw UsageError("--point has " + std::to_string(base.size()) + " coordinates, generator has " +
                     std::to_string(gen.dimension()));
  std::vector<std::string> show;
  {
    std::stringstream ss(show_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      static const std::vector<std::string> kKnown{"xi", "nxi", "frame", "B", "screen", "weingarten"};
      if (std::find(kKnown.begin(), kKnown.end(), item) == kKnown.end())
        throw UsageError("--show: unknown item '" + item + "'");
      show.push_back(item);
    }
  }
  auto shown = [&](const char* key) {
    return std::find(show.begin(), show.end(), key) != show.end();
  };

  const SurfacePoint p = lift(gen, base);
  AnalysisOptions options;
  options.tolerances.tol = tol;
  const PointAnalysis a = analyze_point(gen, p, options);
  out << "generator: " << gen.name() << "\n";
  out << "point: " << tuple(p.base) << "\n";
  out << "x0 = " << num(p.x0) << "\n";
  out << "lightlike defect = " << num(a.lightlike_defect) << (a.lightlike ? " (lightlike)" : " (not lightlike)")
      << "\n";
  if (shown("xi")) out << "ξ = " << tuple(a.xi) << "\n";
  if (shown("nxi")) out << "N_ξ = " << tuple(a.n_xi) << "\n";
  if (shown("frame")) {
    for (std::size_t i = 0; i < a.frame_e.size(); ++i)
      out << "e" << i + 1 << " = " << tuple(a.frame_e[i]) << "\n";
    print_matrix(out, "induced g", a.induced_g);
    out << "radical rank = " << a.radical_rank << "\n";
  }
  if (shown("B")) {
    print_matrix(out, "B", a.B);
    if (a.umbilic)
      out << "ρ̂ = " << num(a.umbilic->rho) << " (residual " << num(a.umbilic->residual) << ")\n";
    if (a.minimal_defect) out << "minimal defect = " << num(*a.minimal_defect) << "\n";
  }
  if (shown("screen")) {
    if (a.screen) {
      for (std::size_t s = 0; s < a.screen->vectors.size(); ++s)
        out << "W" << s + 1 << " = " << tuple(a.screen->vectors[s]) << " (ε = "
            << a.screen->signs[s] << ")\n";
      if (a.integrability_defect)
        out << "integrability defect = " << num(*a.integrability_defect) << "\n";
    } else {
      out << "screen: not available (point is not lightlike or d = 1)\n";
    }
  }
  if (shown("weingarten")) {
    if (a.lightlike) {
      out << "τ = " << tuple(a.tau) << "\n";
      print_matrix(out, "A_N (rows: A_N e_i in the e-frame)", a.shape_op);
    } else {
      out << "weingarten: not available (point is not lightlike)\n";
    }
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "lightlike: degenerate Monge-type hypersurfaces of R x (M, g) and their induced geometry.\n"
      "Environment: TOLERANCE overrides the default --tol (1e-8)."};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Source source;
  double tol_opt = 0.0;
  std::string out_path;
  unsigned threads = 0;
  auto* classify_cmd = app.add_subcommand("classify", "classify a generator on its sample grid");
  add_source_options(classify_cmd, source);
  classify_cmd->add_option("--tol", tol_opt, "relative tolerance (default 1e-8 or $TOLERANCE)");
  classify_cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
  classify_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* verify_cmd = app.add_subcommand("verify", "check a built-in against its expected verdicts");
  verify_cmd->add_option("--builtin", source.builtin_name, "built-in generator name")->required();
  verify_cmd->add_option("--param", source.params, "override a parameter, NAME=VALUE")->take_all();
  verify_cmd->add_option("--tol", tol_opt, "relative tolerance (default 1e-8 or $TOLERANCE)");

  std::string point_text;
  std::string show_text = "xi,nxi,frame,B,screen,weingarten";
  auto* eval_cmd = app.add_subcommand("eval", "dump every induced object at one point");
  add_source_options(eval_cmd, source);
  eval_cmd->add_option("--point", point_text, "base point, comma separated")->required();
  eval_cmd->add_option("--show", show_text, "comma list of xi,nxi,frame,B,screen,weingarten");
  eval_cmd->add_option("--tol", tol_opt, "relative tolerance (default 1e-8 or $TOLERANCE)");

  auto* list_cmd = app.add_subcommand("list-builtins", "list the built-in generators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const double tol = tol_opt > 0.0 ? tol_opt : default_tolerance();
    if (tol_opt < 0.0) throw UsageError("--tol must be positive");
    if (*list_cmd) {
      for (const auto& b : list_builtins()) out << b.name << "  " << b.description << "\n";
      return 0;
    }
    if (*classify_cmd) return run_classify(source, tol, out_path, threads, out, err);
    if (*verify_cmd) return run_verify(source, tol, out);
    if (*eval_cmd) return run_eval(source, point_text, show_text, tol, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FileError& e) {
    err << "file error: " << e.what() << "\n";
    return kExitFile;
  } catch (const SchemaError& e) {
    err << "file error: " << e.what() << "\n";
    return kExitFile;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace lightlike
