// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failing criteria, not counting those named with --known-failure N; those
// still print FAIL.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "hmlf/analysis.hpp"
#include "hmlf/calculus.hpp"
#include "hmlf/integrals.hpp"
#include "hmlf/quadrature.hpp"
#include "hmlf/special_cases.hpp"
#include "test_support.hpp"

using namespace hmlf;
using testing_support::error_code_of;
using testing_support::mixed_err;
using testing_support::rel_err;
using testing_support::Rng;

namespace {

struct Outcome {
  bool passed = true;
  double worst = 0.0;  // largest observed error, in the criterion's own measure
  std::string note;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) note = what;
    passed = passed && ok;
  }
  void bound(double err, double tol, const std::string& what) {
    if (!(err <= tol) && passed) note = what + " err=" + std::to_string(err);
    passed = passed && err <= tol;
    if (std::isfinite(err)) worst = std::max(worst, err);
  }
};

HmlfSpec random_shape(Rng& rng, int p, int q, double alpha) {
  HmlfSpec s;
  for (int i = 0; i < p; ++i) s.upper.push_back(rng.uniform(0.2, 3.0));
  for (int j = 0; j < q; ++j) s.lower.push_back(rng.uniform(0.2, 3.0));
  s.alpha = alpha;
  s.beta = rng.uniform(0.3, 3.0);
  return s;
}

Outcome reductions() {
  Outcome o;
  for (int i = 0; i <= 100; ++i) {
    const double u = -5.0 + 0.1 * i;
    o.bound(mixed_err(mittag_leffler(1, 1, u), std::exp(u)), 1e-12, "E_{1,1} vs exp");
    o.bound(mixed_err(mittag_leffler(2, 1, -u * u), std::cos(u)), 1e-12, "E_{2,1} vs cos");
  }
  return o;
}

Outcome gauss_anchor() {
  Outcome o;
  o.bound(rel_err(classical_2f1(1, 1, 2, 0.5), 2 * std::numbers::ln2), 1e-10, "2 ln 2");
  for (double b : {0.3, 1.0, 2.7}) {
    o.bound(rel_err(classical_2f1(2, b, b, 0.25), 16.0 / 9.0), 1e-12, "16/9");
  }
  return o;
}

Outcome sin_cos() {
  Outcome o;
  for (int i = 0; i <= 100; ++i) {
    const double u = -10.0 + 0.2 * i;
    o.bound(std::fabs(sin_via_hmlf(u) - std::sin(u)), 1e-11, "sin");
    o.bound(std::fabs(cos_via_hmlf(u) - std::cos(u)), 1e-11, "cos");
  }
  return o;
}

Outcome downshift() {
  Outcome o;
  Rng rng(32);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 50; ++i) {
      const double alpha = rng.uniform(1.0, 3.0);
      HmlfSpec s{{rng.uniform(0.2, 3.0), rng.uniform(0.2, 3.0)}, {rng.uniform(0.2, 3.0)}, alpha,
                 n * alpha + rng.uniform(0.05, 3.0)};
      const double radius = classify(validate_spec(s)).effective_rule.radius;
      const double u = rng.uniform(-1.0, 1.0) * std::min(0.5, 0.5 * radius);
      HmlfSpec lower_beta = s;
      lower_beta.beta -= n * alpha;
      o.bound(rel_err(beta_downshift(validate_spec(s), n, u), eval(lower_beta, u).value), 1e-9,
              "downshift n=" + std::to_string(n));
    }
  }
  return o;
}

// d/du of a general member: prod(a) / prod(b) * f(a+1, 2; b+1, 1; alpha, alpha+beta).
std::pair<double, HmlfSpec> generic_derivative(const HmlfSpec& s) {
  double scale = 1.0;
  HmlfSpec out;
  for (double a : s.upper) {
    scale *= a;
    out.upper.push_back(a + 1);
  }
  for (double b : s.lower) {
    scale /= b;
    out.lower.push_back(b + 1);
  }
  out.upper.push_back(2.0);
  out.lower.push_back(1.0);
  out.alpha = s.alpha;
  out.beta = s.alpha + s.beta;
  return {scale, out};
}

Outcome derivatives() {
  Outcome o;
  Rng rng(33);
  for (int i = 0; i < 20; ++i) {
    const double alpha = rng.uniform(1.2, 3.0);
    const ValidSpec s = validate_spec(HmlfSpec{{rng.uniform(0.2, 3.0), rng.uniform(0.2, 3.0)},
                                               {rng.uniform(0.2, 3.0)},
                                               alpha,
                                               rng.uniform(0.3, 3.0)});
    const double u = rng.uniform(-2.0, 2.0);
    const DerivativeForm d1 = derivative_closed_form(s, 1);
    const DerivativeForm d2 = derivative_closed_form(s, 2);
    const double c1 = d1.scale * eval(d1.result_spec, u).value;
    const double c2 = d2.scale * eval(d2.result_spec, u).value;
    o.bound(rel_err(numerical_derivative(s, u, 1, 1e-5), c1), 1e-6, "m=1 vs FD");
    o.bound(rel_err(numerical_derivative(s, u, 2, 1e-3), c2), 1e-4, "m=2 vs FD");
    const auto [scale2, spec2] = generic_derivative(d1.result_spec);
    o.bound(rel_err(d1.scale * scale2 * eval(spec2, u).value, c2), 1e-9, "induction step");
  }
  return o;
}

Outcome moments() {
  Outcome o;
  Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const int p = rng.integer(0, 3);
    const int q = rng.integer(0, 3);
    const ValidSpec vs =
        validate_spec(random_shape(rng, p, q, std::max(0.3, p - q + rng.uniform(0.2, 2.0))));
    for (double delta : {0.0, 1.0, 2.5}) {
      const auto qr = quad::integrate_finite(
          [&](double t) { return std::pow(t, delta) * eval(vs, t).value; }, 0.0, 0.5, 1e-12);
      o.bound(rel_err(moment_integral(vs, delta, 0.5), qr.value), 1e-8, "moment");
    }
  }
  return o;
}

Outcome gaussians() {
  Outcome o;
  Rng rng(43);
  for (int excess : {1, 0, -1}) {
    for (int i = 0; i < 4; ++i) {
      const int q = rng.integer(std::max(0, -excess), 2);
      const int p = q + excess;
      const double alpha = std::max(0.3, excess + 0.5 + rng.uniform(0.3, 1.5));
      const ValidSpec vs = validate_spec(random_shape(rng, p, q, alpha));
      for (double delta : {0.5, 1.0, 4.0}) {
        const auto qr =
            quad::integrate_gaussian([&](double u) { return eval(vs, u).value; }, delta, 1e-12);
        o.bound(rel_err(gaussian_integral(vs, delta), qr.value), 1e-6,
                "gaussian p-q=" + std::to_string(excess));
      }
    }
  }
  for (double delta : {0.5, 1.0, 3.0, 4.0, 7.0}) {
    o.require(gaussian_argument(HmlfSpec{{1, 2}, {3}, 2, 1}, delta) == 4.0 / delta, "4/delta");
    o.require(gaussian_argument(HmlfSpec{{1}, {3}, 2, 1}, delta) == 1.0 / delta, "1/delta");
    o.require(gaussian_argument(HmlfSpec{{}, {3}, 2, 1}, delta) == 1.0 / (4.0 * delta),
              "1/(4 delta)");
  }
  return o;
}

Outcome oscillatory() {
  Outcome o;
  for (double beta : {1.0, 2.0}) {
    const ValidSpec vs = validate_spec(HmlfSpec{{1, 1}, {2}, 3, beta});
    auto f = [&](double u) { return eval(vs, -u).value; };
    const auto qs = quad::integrate_oscillatory_halfline(f, quad::Kernel::Sin, 1e-8);
    const auto qc = quad::integrate_oscillatory_halfline(f, quad::Kernel::Cos, 1e-8);
    o.bound(rel_err(sine_integral_rhs(vs), qs.value), 1e-4, "sine");
    o.bound(rel_err(cosine_integral_rhs(vs), qc.value), 1e-4, "cosine");
  }
  return o;
}

Outcome transforms() {
  Outcome o;
  const ValidSpec vs = validate_spec(HmlfSpec{{1, 1}, {2}, 3, 1});
  for (double s : {1.0, 2.0, 5.0}) {
    const auto qr =
        quad::integrate_exp_halfline([&](double t) { return eval(vs, -t).value; }, s, 1e-12);
    o.bound(rel_err(laplace_transform(vs, s).value, qr.value), 1e-6, "laplace");
  }
  for (double u : {0.25, 0.5}) {
    const auto qr = quad::integrate_exp_halfline(
        [&](double t) { return eval(vs, -u * t).value; }, 1.0, 1e-12);
    const double sumudu = sumudu_transform(vs, u).value;
    o.bound(rel_err(sumudu, qr.value), 1e-6, "sumudu");
    o.bound(rel_err(sumudu, laplace_transform(vs, 1.0 / u).value / u), 1e-8, "duality");
  }
  return o;
}

Outcome cos_sqrt() {
  Outcome o;
  auto even = [](double u) { return u >= 0.0 ? std::cos(std::sqrt(u)) : std::cosh(std::sqrt(-u)); };
  const auto qr = quad::integrate_gaussian(even, 1.0, 1e-13);
  o.bound(rel_err(cos_sqrt_gaussian(1.0), qr.value), 1e-8, "delta=1");
  return o;
}

// sum r! u^r: the (1,1,1; 1) alpha=1 member, divergent for every u != 0.
// Its Borel sum at u = -1/s is s times the Laplace transform of 1/(1+t), the
// (1,1; 1) alpha=1 member at -t.
Outcome divergence_guard() {
  Outcome o;
  const HmlfSpec euler{{1, 1, 1}, {1}, 1, 1};
  o.require(error_code_of([&] { eval(euler, 0.1); }) == ErrorCode::DivergenceRejected,
            "u=0.1 not rejected without the flag");
  EvalOptions asym;
  asym.allow_asymptotic = true;
  for (double s : {10.0, 20.0}) {
    const EvalResult r = eval(euler, -1.0 / s, asym);
    o.require(r.status == EvalStatus::TruncatedAsymptotic, "status not TruncatedAsymptotic");
    const auto truth = quad::integrate_exp_halfline([](double t) { return 1.0 / (1.0 + t); }, s,
                                                    1e-14);
    const double deviation = std::fabs(r.value - s * truth.value);
    o.require(deviation <= 10.0 * r.est_abs_error,
              "deviation " + std::to_string(deviation) + " > 10 x estimate " +
                  std::to_string(r.est_abs_error));
    o.worst = std::max(o.worst, deviation / r.est_abs_error);
    // the transform route lands on the same truncated sum
    const EvalResult lt = laplace_transform(validate_spec(HmlfSpec{{1, 1}, {1}, 1, 1}), s);
    o.require(std::fabs(lt.value - truth.value) <= 10.0 * lt.est_abs_error, "laplace route");
  }
  return o;
}

bool zeros_verified(const HmlfSpec& spec, const ZeroReport& report, Outcome& o) {
  const ValidSpec vs = validate_spec(spec);
  for (const RealZero& z : report.zeros) {
    const double flo = eval(vs, z.lo).value;
    const double fhi = eval(vs, z.hi).value;
    o.require(std::signbit(flo) != std::signbit(fhi) || flo == 0.0 || fhi == 0.0,
              "bracket without a sign change");
    o.bound(std::fabs(eval(vs, z.location).value), 1e-10, "residual");
  }
  return o.passed;
}

Outcome zero_scanner() {
  Outcome o;
  const HmlfSpec fig5{{1.5, 2.0}, {1.5}, 1.0, 3.0};
  // Radius 1: the series has no value on most of [-40, -0.1], so the literal
  // scan cannot return brackets. The refusal and an in-domain scan are still
  // checked so a regression in either shows up here.
  const auto code = error_code_of([&] { find_real_zeros(fig5, -40.0, -0.1, 400, 1e-12); });
  const ZeroReport inside = find_real_zeros(fig5, -0.9, -0.1, 400, 1e-12);
  Outcome side;
  zeros_verified(fig5, inside, side);
  const ZeroReport cosine = find_real_zeros(HmlfSpec{{}, {}, 2, 1}, -40.0, -0.1, 400, 1e-12);
  zeros_verified(HmlfSpec{{}, {}, 2, 1}, cosine, side);
  side.require(cosine.zeros.size() == 2, "cos(sqrt(-u)) zero count");
  side.require(find_real_zeros(HmlfSpec{{1, 1}, {1}, 2, 1}, 0.1, 5.0, 400, 1e-12).zeros.empty(),
               "all-positive spec reported a zero");
  side.require(code == ErrorCode::DomainOutsideConvergence, "out-of-domain scan not refused");

  if (!side.passed) return side;
  o.passed = false;
  o.note = "[-40,-0.1] lies outside the radius-1 domain; scan refused with "
           "DomainOutsideConvergence, no brackets returned (in-domain [-0.9,-0.1] scan and "
           "all-positive scan verified)";
  return o;
}

Outcome identities() {
  Outcome o;
  Rng rng(15);
  for (int i = 0; i < 2000; ++i) {
    const double a = rng.uniform(-5.0, 5.0);
    const auto m = static_cast<std::uint64_t>(rng.integer(0, 20));
    const auto n = static_cast<std::uint64_t>(rng.integer(0, 20));
    o.bound(rel_err(pochhammer(a, n + m), pochhammer(a, m) * pochhammer(a + m, n)), 1e-12,
            "index split");
    const double dup = std::ldexp(1.0, static_cast<int>(2 * n)) * pochhammer(a / 2, n) *
                       pochhammer((a + 1) / 2, n);
    o.bound(rel_err(pochhammer(a, 2 * n), dup), 1e-12, "duplication");
  }
  for (std::uint64_t r = 0; r <= 30; ++r) {
    const double rhs = std::ldexp(1.0, static_cast<int>(2 * r)) * pochhammer(1.0, r) *
                       std::exp(log_gamma(r + 0.5)) / std::sqrt(std::numbers::pi);
    o.bound(rel_err(pochhammer(1.0, 2 * r), rhs), 1e-12, "(2r)!");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> known;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--known-failure") known.push_back(std::stoul(argv[++i]));
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Mittag-Leffler reductions to exp and cos on [-5,5]", reductions},
      {"Gauss 2F1 anchors 2 ln 2 and 16/9", gauss_anchor},
      {"sin/cos constructions on [-10,10]", sin_cos},
      {"beta downshift n in {1,2,3}, 150 random specs", downshift},
      {"derivative closed form vs finite differences, induction step", derivatives},
      {"moment integrals vs adaptive quadrature", moments},
      {"Gaussian integrals vs quadrature, argument constants", gaussians},
      {"sine/cosine integrals at alpha=3 vs oscillatory quadrature", oscillatory},
      {"Laplace and Sumudu vs exponential quadrature, duality", transforms},
      {"cos(sqrt u) Gaussian integral vs quadrature", cos_sqrt},
      {"divergence guard and optimal truncation", divergence_guard},
      {"zero scanner self-verification", zero_scanner},
      {"Pochhammer/Gamma identities", identities},
  };

  int failures = 0;
  int gating = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.note = std::string("exception: ") + e.what();
    }
    const bool is_known = std::find(known.begin(), known.end(), i + 1) != known.end();
    failures += o.passed ? 0 : 1;
    gating += (o.passed || is_known) ? 0 : 1;
    std::printf("%s [%zu] %s (worst %.3g)%s%s%s\n", o.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.worst, o.note.empty() ? "" : ": ", o.note.c_str(),
                !o.passed && is_known ? " [known failure]" : "");
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return gating;
}
