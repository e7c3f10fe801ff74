#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "hmlf/analysis.hpp"
#include "hmlf/error.hpp"
#include "hmlf/integrals.hpp"
#include "hmlf/quadrature.hpp"
#include "hmlf/series.hpp"
#include "hmlf/spec_io.hpp"
#include "hmlf/verify.hpp"

namespace hmlf::cli {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNumerical = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecArgs {
  std::vector<double> upper;
  std::vector<double> lower;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string spec_file;
  double tol = 1e-13;
  std::uint64_t max_terms = 10000;
  bool allow_asymptotic = false;
  std::string out_path;
  std::string format;
};

void add_spec_flags(CLI::App* sub, SpecArgs& a) {
  auto* file = sub->add_option("--spec-file", a.spec_file, "JSON spec file");
  sub->add_option("--upper", a.upper, "upper parameters, comma separated")
      ->delimiter(',')
      ->excludes(file);
  sub->add_option("--lower", a.lower, "lower parameters, comma separated")
      ->delimiter(',')
      ->excludes(file);
  sub->add_option("--alpha", a.alpha, "alpha > 0")->excludes(file);
  sub->add_option("--beta", a.beta, "beta > 0")->excludes(file);
  sub->add_option("--tol", a.tol, "series tolerance")->capture_default_str();
  sub->add_option("--max-terms", a.max_terms, "series term budget")->capture_default_str();
  sub->add_flag("--allow-asymptotic", a.allow_asymptotic,
                "sum divergent series to their smallest term");
  sub->add_option("--out", a.out_path, "write output to FILE instead of stdout");
}

void add_format_flag(CLI::App* sub, SpecArgs& a, const std::string& fallback) {
  sub->add_option("--format", a.format, "output format (default " + fallback + ")")
      ->check(CLI::IsMember({"csv", "json"}));
}

HmlfSpec spec_of(const SpecArgs& a) {
  if (!a.spec_file.empty()) return io::load_spec_file(a.spec_file);
  if (!a.alpha || !a.beta) throw UsageError("--alpha and --beta are required without --spec-file");
  return HmlfSpec{a.upper, a.lower, *a.alpha, *a.beta};
}

EvalOptions options_of(const SpecArgs& a) {
  return EvalOptions{a.tol, a.max_terms, a.allow_asymptotic};
}

json spec_json(const HmlfSpec& s) { return json::parse(io::spec_to_json(s)); }

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json eval_json(const EvalResult& r) {
  return json{{"value", finite_or_null(r.value)},
              {"terms_used", r.terms_used},
              {"est_abs_error", finite_or_null(r.est_abs_error)},
              {"status", std::string(to_string(r.status))}};
}

json classification_json(const ValidSpec& vs) {
  const ConvergenceClass c = classify(vs);
  return json{{"classical_rule", std::string(to_string(c.classical_rule))},
              {"effective_rule", std::string(to_string(c.effective_rule.kind))},
              {"radius", finite_or_null(c.effective_rule.radius)}};
}

// Writes to --out when given, else to out.
template <class Writer>
void emit(const SpecArgs& a, std::ostream& out, Writer&& write) {
  if (a.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(a.out_path);
  if (!file) throw UsageError("cannot open " + a.out_path + " for writing");
  write(file);
}

void emit_json(const SpecArgs& a, std::ostream& out, const json& j) {
  emit(a, out, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
}

bool is_usage_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidAlphaBeta:
    case ErrorCode::LowerParamPole:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::InvalidDelta:
    case ErrorCode::InvalidS:
      return true;
    default:
      return false;
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergeometric Mittag-Leffler series: evaluation, transforms, grids and zeros",
               "hmlf"};
  app.require_subcommand(1);

  SpecArgs a;

  double u = 0.0;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate the series at one point");
  add_spec_flags(eval_cmd, a);
  add_format_flag(eval_cmd, a, "json");
  eval_cmd->add_option("--u", u, "evaluation point")->required();

  double u_min = 0.0;
  double u_max = 0.0;
  int n = 0;
  auto* grid_cmd = app.add_subcommand("grid", "evaluate on an equally spaced grid");
  add_spec_flags(grid_cmd, a);
  add_format_flag(grid_cmd, a, "csv");
  grid_cmd->add_option("--min", u_min, "first grid point")->required();
  grid_cmd->add_option("--max", u_max, "last grid point")->required();
  grid_cmd->add_option("--n", n, "number of points (>= 2)")->required();

  int scan_points = 400;
  double refine_tol = 1e-12;
  auto* zeros_cmd = app.add_subcommand("zeros", "locate real sign-change zeros");
  add_spec_flags(zeros_cmd, a);
  zeros_cmd->add_option("--min", u_min, "scan start")->required();
  zeros_cmd->add_option("--max", u_max, "scan end")->required();
  zeros_cmd->add_option("--scan-points", scan_points, "samples (>= 16)")->capture_default_str();
  zeros_cmd->add_option("--refine-tol", refine_tol, "target |f| at a zero")->capture_default_str();

  double s = 0.0;
  auto* laplace_cmd = app.add_subcommand("laplace", "Laplace transform of t -> f(-t)");
  add_spec_flags(laplace_cmd, a);
  laplace_cmd->add_option("--s", s, "transform variable (> 0)")->required();

  auto* sumudu_cmd = app.add_subcommand("sumudu", "Sumudu transform of t -> f(-t)");
  add_spec_flags(sumudu_cmd, a);
  sumudu_cmd->add_option("--u", u, "transform variable")->required();

  std::string kind;
  double delta = 0.0;
  bool check = false;
  auto* integral_cmd = app.add_subcommand("integral", "closed-form integral representations");
  add_spec_flags(integral_cmd, a);
  integral_cmd->add_option("--kind", kind, "moment | gaussian | sine | cosine")
      ->required()
      ->check(CLI::IsMember({"moment", "gaussian", "sine", "cosine"}));
  integral_cmd->add_option("--delta", delta, "exponent (moment) or Gaussian width");
  integral_cmd->add_option("--u", u, "upper limit (moment)");
  integral_cmd->add_flag("--check", check, "also report the quadrature oracle value");

  std::string suite = "all";
  std::optional<double> verify_tol;
  auto* verify_cmd = app.add_subcommand("verify", "run oracle comparisons");
  verify_cmd->add_option("--suite", suite, "series | calculus | integrals | special | all")
      ->check(CLI::IsMember(verify::suite_names()))
      ->capture_default_str();
  verify_cmd->add_option("--tol", verify_tol, "replace every check's tolerance");

  std::vector<const char*> argv{"hmlf"};
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto usage = [&](const std::string& message) {
    err << "hmlf: " << message << '\n';
    for (CLI::App* sub : app.get_subcommands()) err << sub->help();
    return kUsage;
  };

  try {
    if (*verify_cmd) {
      const auto results = verify::run_suite(suite, verify_tol);
      bool all = true;
      out << std::left << std::setw(7) << "result" << std::setw(11) << "suite" << std::setw(44)
          << "check" << std::setw(12) << "error" << "tol\n";
      for (const auto& r : results) {
        all = all && r.passed;
        out << std::setw(7) << (r.passed ? "PASS" : "FAIL") << std::setw(11) << r.suite
            << std::setw(44) << r.name << std::setw(12) << std::setprecision(3) << r.error
            << r.tolerance;
        if (!r.note.empty()) out << "  (" << r.note << ')';
        out << '\n';
      }
      out << (all ? "all checks passed\n" : "some checks FAILED\n");
      return all ? kOk : kNumerical;
    }

    const HmlfSpec spec = spec_of(a);
    const ValidSpec vs = validate_spec(spec);
    const EvalOptions opt = options_of(a);

    if (*eval_cmd) {
      if (a.format.empty()) a.format = "json";
      const EvalResult r = eval(vs, u, opt);
      if (a.format == "csv") {
        emit(a, out, [&](std::ostream& o) {
          o << "u,value,status\n"
            << io::format_double(u) << ',' << io::format_double(r.value) << ','
            << to_string(r.status) << '\n';
        });
      } else {
        json j = eval_json(r);
        j["spec"] = spec_json(spec);
        j["u"] = u;
        j["classification"] = classification_json(vs);
        emit_json(a, out, j);
      }
    } else if (*grid_cmd) {
      if (a.format.empty()) a.format = "csv";
      const auto samples = sample_grid(spec, u_min, u_max, n, opt);
      emit(a, out, [&](std::ostream& o) {
        if (a.format == "json") {
          io::write_grid_json(o, spec, samples);
        } else {
          io::write_grid_csv(o, samples);
        }
      });
    } else if (*zeros_cmd) {
      const ZeroReport report = find_real_zeros(spec, u_min, u_max, scan_points, refine_tol, opt);
      emit(a, out, [&](std::ostream& o) { io::write_zero_report_json(o, spec, report); });
    } else if (*laplace_cmd) {
      json j = eval_json(laplace_transform(vs, s, opt));
      j["spec"] = spec_json(spec);
      j["s"] = s;
      emit_json(a, out, j);
    } else if (*sumudu_cmd) {
      json j = eval_json(sumudu_transform(vs, u, opt));
      j["spec"] = spec_json(spec);
      j["u"] = u;
      emit_json(a, out, j);
    } else if (*integral_cmd) {
      json j{{"spec", spec_json(spec)}, {"kind", kind}};
      double value = 0.0;
      std::optional<quad::QuadResult> oracle;
      auto f = [&](double x) { return eval(vs, x, opt).value; };
      constexpr double kOracleTol = 1e-11;
      if (kind == "moment") {
        if (integral_cmd->count("--u") == 0) return usage("--kind moment needs --u");
        value = moment_integral(vs, delta, u, opt);
        j["delta"] = delta;
        j["u"] = u;
        if (check && u != 0.0) {
          const double lo = std::min(0.0, u);
          const double hi = std::max(0.0, u);
          oracle = quad::integrate_finite(
              [&](double t) { return std::pow(t, delta) * f(t); }, lo, hi, kOracleTol);
          if (u < 0.0) oracle->value = -oracle->value;
        }
      } else if (kind == "gaussian") {
        value = gaussian_integral(vs, delta, opt);
        j["delta"] = delta;
        if (check) oracle = quad::integrate_gaussian(f, delta, kOracleTol);
      } else {
        const bool sine = kind == "sine";
        value = sine ? sine_integral_rhs(vs, opt) : cosine_integral_rhs(vs, opt);
        if (check) {
          oracle = quad::integrate_oscillatory_halfline(
              [&](double x) { return f(-x); }, sine ? quad::Kernel::Sin : quad::Kernel::Cos,
              1e-8);
        }
      }
      j["value"] = value;
      if (oracle) {
        j["quadrature"] = {{"value", oracle->value},
                           {"est_abs_error", oracle->est_abs_error},
                           {"evaluations", oracle->evaluations},
                           {"relative_deviation",
                            finite_or_null(std::fabs(value - oracle->value) /
                                           std::fabs(oracle->value))}};
      }
      emit_json(a, out, j);
    }
    return kOk;
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const Error& e) {
    if (is_usage_code(e.code())) return usage(e.what());
    err << "hmlf: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace hmlf::cli
