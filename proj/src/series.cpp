#include "hmlf/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hmlf/compensated_sum.hpp"
#include "hmlf/error.hpp"

namespace hmlf {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Terms carry a few roundings each from the recurrence; 8 eps per unit of
// sum |t_r| covers them.
constexpr double kRoundingFactor = 8.0 * kEps;

// Minimum index before the two-small-terms stopping rule may fire.
constexpr std::uint64_t kMinTermsBeforeStop = 8;

// Optimal truncation stops scanning once terms have grown this far past the
// smallest one seen.
constexpr double kAsymptoticGrowthStop = 1e8;

// Gamma(x) / Gamma(x + step), x > 0.
double gamma_step(double x, double step) {
  if (step == std::nearbyint(step) && step <= 64.0) {
    double prod = 1.0;
    for (double k = 0.0; k < step; k += 1.0) prod *= x + k;
    return 1.0 / prod;
  }
  return std::exp(-log_gamma_difference(x, step));
}

double ratio_at(const HmlfSpec& s, std::uint64_t r, double u) {
  const double rd = static_cast<double>(r);
  double ratio = u * gamma_step(s.alpha * rd + s.beta, s.alpha);
  for (double a : s.upper) ratio *= a + rd;
  for (double b : s.lower) ratio /= b + rd;
  return ratio;
}

EvalResult sum_convergent(const ValidSpec& vs, double u, const EvalOptions& opt) {
  const HmlfSpec& s = vs.spec();
  const auto degree = vs.terminating_degree();

  CompensatedSum sum;
  double term = reciprocal_gamma(s.beta);
  sum.add(term);
  int small_run = 0;

  for (std::uint64_t r = 0; r + 1 < opt.max_terms; ++r) {
    if (degree && r == *degree) {
      return {sum.value(), r + 1, kRoundingFactor * sum.abs_sum(), EvalStatus::Terminated,
              sum.abs_sum()};
    }
    const double ratio = ratio_at(s, r, u);
    const double next = term * ratio;
    if (!std::isfinite(next)) {
      return {sum.value(), r + 1, kInf, EvalStatus::DivergenceDetected, sum.abs_sum()};
    }
    sum.add(next);
    term = next;

    const double scale = opt.tol * std::max(1.0, std::fabs(sum.value()));
    small_run = (std::fabs(next) <= scale) ? small_run + 1 : 0;
    if (small_run >= 2 && r + 1 >= kMinTermsBeforeStop) {
      const double q = std::fabs(ratio);
      const double tail = (q < 1.0) ? std::fabs(next) * q / (1.0 - q) : kInf;
      if (tail <= scale) {
        return {sum.value(), r + 2, tail + kRoundingFactor * sum.abs_sum(), EvalStatus::Converged,
                sum.abs_sum()};
      }
    }
  }
  throw Error(ErrorCode::NonConvergence,
              "series not converged after " + std::to_string(opt.max_terms) + " terms at u=" +
                  std::to_string(u));
}

// Sum up to (not including) the smallest-magnitude term.
EvalResult sum_optimal_truncation(const ValidSpec& vs, double u, const EvalOptions& opt) {
  const HmlfSpec& s = vs.spec();

  CompensatedSum sum;
  CompensatedSum best_sum;
  double term = reciprocal_gamma(s.beta);
  double best_abs = std::fabs(term);
  std::uint64_t best_index = 0;

  for (std::uint64_t r = 0; r + 1 < opt.max_terms; ++r) {
    sum.add(term);
    const double next = term * ratio_at(s, r, u);
    if (!std::isfinite(next)) break;
    const double mag = std::fabs(next);
    if (mag < best_abs) {
      best_abs = mag;
      best_index = r + 1;
      best_sum = sum;
    }
    if (mag == 0.0 || mag > kAsymptoticGrowthStop * best_abs) break;
    term = next;
  }
  return {best_sum.value(), best_index, best_abs + kRoundingFactor * best_sum.abs_sum(),
          EvalStatus::TruncatedAsymptotic, best_sum.abs_sum()};
}

}  // namespace

ValidSpec validate_spec(HmlfSpec spec) {
  if (!(spec.alpha > 0.0) || !(spec.beta > 0.0) || !std::isfinite(spec.alpha) ||
      !std::isfinite(spec.beta)) {
    throw Error(ErrorCode::InvalidAlphaBeta, "alpha and beta must be finite and positive");
  }
  for (const auto* list : {&spec.upper, &spec.lower}) {
    for (double v : *list) {
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite parameter");
    }
  }

  std::optional<std::uint64_t> degree;
  for (double a : spec.upper) {
    if (is_nonpositive_integer(a)) {
      const auto d = static_cast<std::uint64_t>(-a);
      degree = degree ? std::min(*degree, d) : d;
    }
  }
  // (b)_r vanishes from r = |b| + 1 on; the last nonzero term is r = degree.
  for (double b : spec.lower) {
    if (is_nonpositive_integer(b) && !(degree && static_cast<double>(*degree) <= -b)) {
      throw Error(ErrorCode::LowerParamPole,
                  "lower parameter " + std::to_string(b) + " is a pole of the series");
    }
  }
  return ValidSpec(std::move(spec), degree);
}

ConvergenceClass classify(const ValidSpec& vs) noexcept {
  const HmlfSpec& s = vs.spec();
  const auto p = static_cast<long>(s.p());
  const auto q = static_cast<long>(s.q());

  ConvergenceClass out;
  if (p <= q) {
    out.classical_rule = ClassicalRule::AllFinite;
  } else if (p == q + 1) {
    out.classical_rule = ClassicalRule::UnitDisk;
  } else {
    out.classical_rule = ClassicalRule::DivergesNonzero;
  }

  const double excess = static_cast<double>(p - q) - s.alpha;
  if (excess < 0.0) {
    out.effective_rule = {EffectiveKind::Entire, kInf};
  } else if (excess == 0.0) {
    out.effective_rule = {EffectiveKind::FiniteRadius, std::pow(s.alpha, s.alpha)};
  } else {
    out.effective_rule = {EffectiveKind::FormalOnly, 0.0};
  }
  return out;
}

bool inside_convergence_domain(const ValidSpec& vs, double u) noexcept {
  if (u == 0.0 || vs.terminating_degree()) return true;
  const auto rule = classify(vs).effective_rule;
  switch (rule.kind) {
    case EffectiveKind::Entire: return std::isfinite(u);
    case EffectiveKind::FiniteRadius: return std::fabs(u) < rule.radius;
    case EffectiveKind::FormalOnly: return false;
  }
  return false;
}

SignedLog coefficient_signed_log(const ValidSpec& vs, std::uint64_t r) {
  const HmlfSpec& s = vs.spec();
  SignedLog c{0.0, 1};
  for (double a : s.upper) {
    c *= pochhammer_signed_log(a, r);
    if (c.is_zero()) return c;
  }
  for (double b : s.lower) c /= pochhammer_signed_log(b, r);

  const double x = s.alpha * static_cast<double>(r) + s.beta;
  c.log_abs -= log_gamma(x);
  return c;
}

double coefficient(const ValidSpec& vs, std::uint64_t r) {
  if (r == 0) return reciprocal_gamma(vs->beta);
  const double v = coefficient_signed_log(vs, r).value();
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::Overflow, "coefficient " + std::to_string(r) + " out of range");
  }
  return v;
}

double term_ratio(const ValidSpec& vs, std::uint64_t r, double u) {
  return ratio_at(vs.spec(), r, u);
}

EvalResult eval(const ValidSpec& vs, double u, const EvalOptions& options) {
  if (!(options.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  if (!std::isfinite(u)) throw Error(ErrorCode::InvalidArgument, "u must be finite");

  if (u == 0.0) {
    const double c0 = reciprocal_gamma(vs->beta);
    const auto status = vs.terminating_degree() ? EvalStatus::Terminated : EvalStatus::Converged;
    return {c0, 1, 0.0, status, std::fabs(c0)};
  }
  if (inside_convergence_domain(vs, u)) return sum_convergent(vs, u, options);
  if (!options.allow_asymptotic) {
    throw Error(ErrorCode::DivergenceRejected,
                "u=" + std::to_string(u) + " lies outside the convergence domain");
  }
  return sum_optimal_truncation(vs, u, options);
}

EvalResult eval(const HmlfSpec& spec, double u, const EvalOptions& options) {
  return eval(validate_spec(spec), u, options);
}

double eval_value(const HmlfSpec& spec, double u, const EvalOptions& options) {
  return eval(spec, u, options).value;
}

std::string_view to_string(EvalStatus status) noexcept {
  switch (status) {
    case EvalStatus::Converged: return "Converged";
    case EvalStatus::Terminated: return "Terminated";
    case EvalStatus::TruncatedAsymptotic: return "TruncatedAsymptotic";
    case EvalStatus::DivergenceDetected: return "DivergenceDetected";
  }
  return "Unknown";
}

std::string_view to_string(ClassicalRule rule) noexcept {
  switch (rule) {
    case ClassicalRule::AllFinite: return "AllFinite";
    case ClassicalRule::UnitDisk: return "UnitDisk";
    case ClassicalRule::DivergesNonzero: return "DivergesNonzero";
  }
  return "Unknown";
}

std::string_view to_string(EffectiveKind kind) noexcept {
  switch (kind) {
    case EffectiveKind::Entire: return "Entire";
    case EffectiveKind::FiniteRadius: return "FiniteRadius";
    case EffectiveKind::FormalOnly: return "FormalOnly";
  }
  return "Unknown";
}

}  // namespace hmlf
