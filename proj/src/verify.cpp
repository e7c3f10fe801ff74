#include "hmlf/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "hmlf/calculus.hpp"
#include "hmlf/error.hpp"
#include "hmlf/integrals.hpp"
#include "hmlf/quadrature.hpp"
#include "hmlf/series.hpp"
#include "hmlf/special_cases.hpp"

namespace hmlf::verify {
namespace {

enum class Scale { Relative, Absolute };

struct Check {
  std::string name;
  double tolerance;
  Scale scale;
  // Returns {expected, actual}.
  std::function<std::pair<double, double>()> run;
};

ValidSpec spec(std::vector<double> upper, std::vector<double> lower, double alpha, double beta) {
  return validate_spec(HmlfSpec{std::move(upper), std::move(lower), alpha, beta});
}

constexpr double kQuadTol = 1e-11;

std::vector<Check> series_checks() {
  return {
      {"geometric (1,1;1) u=0.5", 1e-13, Scale::Relative,
       [] { return std::pair{2.0, eval(spec({1, 1}, {1}, 1, 1), 0.5).value}; }},
      {"E_{1,1}(1) = e", 1e-13, Scale::Relative,
       [] { return std::pair{std::numbers::e, eval(spec({}, {}, 1, 1), 1.0).value}; }},
      {"E_{2,1}(-1) = cos 1", 1e-13, Scale::Relative,
       [] { return std::pair{std::cos(1.0), eval(spec({}, {}, 2, 1), -1.0).value}; }},
      {"E_{1,1}(-5) = exp(-5)", 1e-12, Scale::Absolute,
       [] { return std::pair{std::exp(-5.0), eval(spec({}, {}, 1, 1), -5.0).value}; }},
      {"terminating (-2,1;-5) u=2", 1e-14, Scale::Relative,
       [] {
         // 1 + (-2)(1)/(-5) u/1! + (-2)(-1)(1)(2)/((-5)(-4)) u^2/2!
         const double u = 2.0;
         return std::pair{1.0 + 0.4 * u + 0.1 * u * u, eval(spec({-2, 1}, {-5}, 1, 1), u).value};
       }},
  };
}

std::vector<Check> calculus_checks() {
  return {
      {"downshift n=1 (1,1;1) beta=3 u=0.5", 1e-11, Scale::Relative,
       [] {
         return std::pair{eval(spec({1, 1}, {1}, 1, 2), 0.5).value,
                          beta_downshift(spec({1, 1}, {1}, 1, 3), 1, 0.5)};
       }},
      {"downshift n=2 (2,1;3) alpha=1.5 u=0.3", 1e-11, Scale::Relative,
       [] {
         return std::pair{eval(spec({2, 1}, {3}, 1.5, 1), 0.3).value,
                          beta_downshift(spec({2, 1}, {3}, 1.5, 4), 2, 0.3)};
       }},
      {"derivative m=1 (1,1;1) u=0.25", 1e-6, Scale::Relative,
       [] {
         const ValidSpec s = spec({1, 1}, {1}, 1, 1);
         const DerivativeForm d = derivative_closed_form(s, 1);
         return std::pair{numerical_derivative(s, 0.25, 1),
                          d.scale * eval(d.result_spec, 0.25).value};
       }},
      {"derivative m=2 (2,3;4) alpha=2 u=0.7", 1e-4, Scale::Relative,
       [] {
         const ValidSpec s = spec({2, 3}, {4}, 2, 2);
         const DerivativeForm d = derivative_closed_form(s, 2);
         return std::pair{numerical_derivative(s, 0.7, 2),
                          d.scale * eval(d.result_spec, 0.7).value};
       }},
      {"umbral shift m=1 (1,1;1) u=0.5", 1e-13, Scale::Relative,
       [] { return std::pair{2.0, umbral_shift_rhs(spec({1, 1}, {1}, 1, 1), 1, 0.5)}; }},
  };
}

std::vector<Check> integral_checks() {
  return {
      {"moment delta=0 (1,1;1) u=0.5", 1e-8, Scale::Relative,
       [] {
         const ValidSpec s = spec({1, 1}, {1}, 1, 1);
         const auto q = quad::integrate_finite([&](double t) { return eval(s, t).value; }, 0.0,
                                               0.5, kQuadTol);
         return std::pair{q.value, moment_integral(s, 0.0, 0.5)};
       }},
      {"moment delta=2.5 (0.7,1.3;2.1) alpha=1.5", 1e-8, Scale::Relative,
       [] {
         const ValidSpec s = spec({0.7, 1.3}, {2.1}, 1.5, 1.2);
         const auto q = quad::integrate_finite(
             [&](double t) { return std::pow(t, 2.5) * eval(s, t).value; }, 0.0, 0.5, kQuadTol);
         return std::pair{q.value, moment_integral(s, 2.5, 0.5)};
       }},
      {"gaussian p-q=1 (1,2;3) alpha=2 delta=1", 1e-6, Scale::Relative,
       [] {
         const ValidSpec s = spec({1, 2}, {3}, 2, 1);
         const auto q =
             quad::integrate_gaussian([&](double u) { return eval(s, u).value; }, 1.0, kQuadTol);
         return std::pair{q.value, gaussian_integral(s, 1.0)};
       }},
      {"gaussian p-q=0 (1.5;2) alpha=1 delta=0.5", 1e-6, Scale::Relative,
       [] {
         const ValidSpec s = spec({1.5}, {2}, 1, 1);
         const auto q =
             quad::integrate_gaussian([&](double u) { return eval(s, u).value; }, 0.5, kQuadTol);
         return std::pair{q.value, gaussian_integral(s, 0.5)};
       }},
      {"gaussian p-q=-1 (;2) alpha=1 delta=4", 1e-6, Scale::Relative,
       [] {
         const ValidSpec s = spec({}, {2}, 1, 1);
         const auto q =
             quad::integrate_gaussian([&](double u) { return eval(s, u).value; }, 4.0, kQuadTol);
         return std::pair{q.value, gaussian_integral(s, 4.0)};
       }},
      {"sine integral (1,1;2) alpha=3", 1e-4, Scale::Relative,
       [] {
         const ValidSpec s = spec({1, 1}, {2}, 3, 1);
         const auto q = quad::integrate_oscillatory_halfline(
             [&](double u) { return eval(s, -u).value; }, quad::Kernel::Sin, 1e-8);
         return std::pair{q.value, sine_integral_rhs(s)};
       }},
      {"cosine integral (1,1;2) alpha=3", 1e-4, Scale::Relative,
       [] {
         const ValidSpec s = spec({1, 1}, {2}, 3, 1);
         const auto q = quad::integrate_oscillatory_halfline(
             [&](double u) { return eval(s, -u).value; }, quad::Kernel::Cos, 1e-8);
         return std::pair{q.value, cosine_integral_rhs(s)};
       }},
      {"laplace (1,1;2) alpha=3 s=2", 1e-6, Scale::Relative,
       [] {
         const ValidSpec s = spec({1, 1}, {2}, 3, 1);
         const auto q = quad::integrate_exp_halfline([&](double t) { return eval(s, -t).value; },
                                                     2.0, kQuadTol);
         return std::pair{q.value, laplace_transform(s, 2.0).value};
       }},
      {"sumudu (1,1;2) alpha=3 u=0.5", 1e-6, Scale::Relative,
       [] {
         const ValidSpec s = spec({1, 1}, {2}, 3, 1);
         const auto q = quad::integrate_exp_halfline(
             [&](double t) { return eval(s, -0.5 * t).value; }, 1.0, kQuadTol);
         return std::pair{q.value, sumudu_transform(s, 0.5).value};
       }},
  };
}

std::vector<Check> special_checks() {
  return {
      {"2F1(1,1;2;0.5) = 2 ln 2", 1e-10, Scale::Relative,
       [] { return std::pair{2.0 * std::numbers::ln2, classical_2f1(1, 1, 2, 0.5)}; }},
      {"2F1(2,b;b;0.25) = 16/9", 1e-12, Scale::Relative,
       [] { return std::pair{16.0 / 9.0, classical_2f1(2, 3.7, 3.7, 0.25)}; }},
      {"sin via series at pi/2", 1e-12, Scale::Absolute,
       [] { return std::pair{1.0, sin_via_hmlf(std::numbers::pi / 2)}; }},
      {"cos via series at 1", 1e-12, Scale::Absolute,
       [] { return std::pair{std::cos(1.0), cos_via_hmlf(1.0)}; }},
      {"HBF (1,1;1) m=0 u=0.6 = 1/sqrt(1+u^2)", 1e-13, Scale::Relative,
       [] { return std::pair{1.0 / std::sqrt(1.36), hyp_bessel(1, 1, 1, 0, 0.6)}; }},
      {"Prabhakar a1=2 u=0.5 = (1+u) e^u", 1e-13, Scale::Relative,
       [] { return std::pair{1.5 * std::exp(0.5), prabhakar(2, 1, 1, 0.5)}; }},
      {"Fox-Wright a1=a2=1 u=0.5", 1e-13, Scale::Relative,
       [] { return std::pair{2.0, fox_wright_2psi1(1, 1, 1, 1, 0.5)}; }},
      {"cos sqrt Gaussian delta=1", 1e-8, Scale::Relative,
       [] {
         auto even_cos_sqrt = [](double u) {
           return u >= 0.0 ? std::cos(std::sqrt(u)) : std::cosh(std::sqrt(-u));
         };
         const auto q = quad::integrate_gaussian(even_cos_sqrt, 1.0, 1e-12);
         return std::pair{q.value, cos_sqrt_gaussian(1.0)};
       }},
  };
}

std::vector<Check> checks_for(std::string_view suite) {
  if (suite == "series") return series_checks();
  if (suite == "calculus") return calculus_checks();
  if (suite == "integrals") return integral_checks();
  if (suite == "special") return special_checks();
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

CheckResult run_check(std::string_view suite, const Check& c, std::optional<double> tolerance) {
  CheckResult r;
  r.suite = suite;
  r.name = c.name;
  r.tolerance = tolerance.value_or(c.tolerance);
  try {
    const auto [expected, actual] = c.run();
    r.expected = expected;
    r.actual = actual;
    const double diff = std::fabs(actual - expected);
    r.error = c.scale == Scale::Absolute ? diff : diff / std::fabs(expected);
    r.passed = r.error <= r.tolerance;
  } catch (const std::exception& e) {
    r.error = std::numeric_limits<double>::quiet_NaN();
    r.note = e.what();
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"series", "calculus", "integrals", "special",
                                                 "all"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, std::optional<double> tolerance) {
  std::vector<CheckResult> out;
  if (suite == "all") {
    for (const std::string& name : suite_names()) {
      if (name == "all") continue;
      for (const Check& c : checks_for(name)) out.push_back(run_check(name, c, tolerance));
    }
    return out;
  }
  for (const Check& c : checks_for(suite)) out.push_back(run_check(suite, c, tolerance));
  return out;
}

}  // namespace hmlf::verify
