#include "hmlf/integrals.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hmlf/error.hpp"

namespace hmlf {
namespace {

void require_2f1(const HmlfSpec& s, const char* op) {
  if (s.p() != 2 || s.q() != 1) {
    throw Error(ErrorCode::ShapeMismatch, std::string(op) + " is defined for p=2, q=1 only");
  }
}

ValidSpec require_not_formal(HmlfSpec spec, const char* op) {
  ValidSpec vs = validate_spec(std::move(spec));
  if (!vs.terminating_degree() && classify(vs).effective_rule.kind == EffectiveKind::FormalOnly) {
    throw Error(ErrorCode::FormalIdentity,
                std::string(op) + ": the closed-form series is formal only for these parameters");
  }
  return vs;
}

// The closed forms are Abel-type sums; for alpha <= 2 the doubled series is
// not entire and the classical integral is not guaranteed.
void require_oscillatory_regime(const HmlfSpec& s, const char* op) {
  if (!(s.alpha > 2.0)) {
    throw Error(ErrorCode::FormalIdentity, std::string(op) + " requires alpha > 2");
  }
}

void split_into(std::vector<double>& out, double c) {
  out.push_back(c / 2.0);
  out.push_back((c + 1.0) / 2.0);
}

}  // namespace

double moment_integral(const ValidSpec& vs, double delta, double u, const EvalOptions& options) {
  if (!std::isfinite(delta) || delta == -1.0 || is_nonpositive_integer(delta + 2.0)) {
    throw Error(ErrorCode::InvalidDelta, "moment_integral: invalid delta " + std::to_string(delta));
  }
  HmlfSpec ext = vs.spec();
  ext.upper.push_back(delta + 1.0);
  ext.lower.push_back(delta + 2.0);
  const ValidSpec valid = validate_spec(std::move(ext));
  if (u == 0.0) return 0.0;
  return std::pow(u, delta + 1.0) / (delta + 1.0) * eval(valid, u, options).value;
}

HmlfSpec gaussian_doubled_spec(const HmlfSpec& spec) {
  HmlfSpec out;
  for (double a : spec.upper) split_into(out.upper, a);
  out.upper.push_back(0.5);
  for (double b : spec.lower) split_into(out.lower, b);
  out.alpha = 2.0 * spec.alpha;
  out.beta = spec.beta;
  return out;
}

double gaussian_argument(const HmlfSpec& spec, double delta) {
  const int excess = static_cast<int>(spec.p()) - static_cast<int>(spec.q());
  // Exact power of 4 (ldexp), so the special cases come out bit-exact.
  return std::ldexp(1.0, 2 * excess) / delta;
}

double gaussian_integral(const ValidSpec& vs, double delta, const EvalOptions& options) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::InvalidDelta, "gaussian_integral requires delta > 0");
  }
  const ValidSpec doubled = require_not_formal(gaussian_doubled_spec(vs.spec()), "gaussian_integral");
  const double x = gaussian_argument(vs.spec(), delta);
  return std::sqrt(std::numbers::pi / delta) * eval(doubled, x, options).value;
}

HmlfSpec sine_integral_spec(const HmlfSpec& s) {
  require_2f1(s, "sine_integral_rhs");
  HmlfSpec out;
  split_into(out.upper, s.upper[0]);
  split_into(out.upper, s.upper[1]);
  out.upper.push_back(0.5);
  out.upper.push_back(1.0);
  split_into(out.lower, s.lower[0]);
  out.alpha = 2.0 * s.alpha;
  out.beta = s.beta;
  return out;
}

HmlfSpec cosine_integral_spec(const HmlfSpec& s) {
  require_2f1(s, "cosine_integral_rhs");
  HmlfSpec out;
  split_into(out.upper, s.upper[0] + 1.0);
  split_into(out.upper, s.upper[1] + 1.0);
  out.upper.push_back(1.5);
  out.upper.push_back(1.0);
  split_into(out.lower, s.lower[0] + 1.0);
  out.alpha = 2.0 * s.alpha;
  out.beta = s.alpha + s.beta;
  return out;
}

double sine_integral_rhs(const ValidSpec& vs, const EvalOptions& options) {
  const HmlfSpec& s = vs.spec();
  const HmlfSpec rhs = sine_integral_spec(s);
  require_oscillatory_regime(s, "sine_integral_rhs");
  return eval(require_not_formal(rhs, "sine_integral_rhs"), -16.0, options).value;
}

double cosine_integral_rhs(const ValidSpec& vs, const EvalOptions& options) {
  const HmlfSpec& s = vs.spec();
  const HmlfSpec rhs = cosine_integral_spec(s);
  require_oscillatory_regime(s, "cosine_integral_rhs");
  const double prefactor = s.upper[0] * s.upper[1] / s.lower[0];
  return prefactor * eval(require_not_formal(rhs, "cosine_integral_rhs"), -16.0, options).value;
}

HmlfSpec transform_spec(const HmlfSpec& s) {
  require_2f1(s, "transform");
  HmlfSpec out = s;
  out.upper.push_back(1.0);
  return out;
}

EvalResult laplace_transform(const ValidSpec& vs, double s, const EvalOptions& options) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::InvalidS, "laplace_transform requires finite s > 0");
  }
  const ValidSpec rhs = validate_spec(transform_spec(vs.spec()));
  EvalOptions opt = options;
  if (!(vs->alpha > 2.0)) opt.allow_asymptotic = true;
  EvalResult r = eval(rhs, -1.0 / s, opt);
  r.value /= s;
  r.est_abs_error /= s;
  r.abs_term_sum /= s;
  return r;
}

EvalResult sumudu_transform(const ValidSpec& vs, double u, const EvalOptions& options) {
  return eval(validate_spec(transform_spec(vs.spec())), -u, options);
}

}  // namespace hmlf
