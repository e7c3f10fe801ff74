#include "hmlf/calculus.hpp"

#include <cmath>
#include <string>

#include "hmlf/error.hpp"

namespace hmlf {
namespace {

void require_2f1(const HmlfSpec& s, const char* op) {
  if (s.p() != 2 || s.q() != 1) {
    throw Error(ErrorCode::ShapeMismatch, std::string(op) + " is defined for p=2, q=1 only");
  }
}

void require_positive(int k, const char* name) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be >= 1");
}

// (a1)_k (a2)_k / (b1)_k
double pochhammer_weight(const HmlfSpec& s, std::uint64_t k) {
  return pochhammer(s.upper[0], k) * pochhammer(s.upper[1], k) / pochhammer(s.lower[0], k);
}

HmlfSpec shift_all(const HmlfSpec& s, double by) {
  HmlfSpec out = s;
  for (double& a : out.upper) a += by;
  for (double& b : out.lower) b += by;
  return out;
}

}  // namespace

DownshiftExpansion downshift_expansion(const ValidSpec& vs, int n) {
  const HmlfSpec& s = vs.spec();
  require_2f1(s, "beta_downshift");
  require_positive(n, "n");
  if (!(s.beta > n * s.alpha)) {
    throw Error(ErrorCode::ConditionViolated,
                "beta_downshift requires beta > n alpha (beta=" + std::to_string(s.beta) +
                    ", n alpha=" + std::to_string(n * s.alpha) + ")");
  }

  DownshiftExpansion out;
  out.power = n;
  out.scale = pochhammer_weight(s, static_cast<std::uint64_t>(n));
  out.shifted = shift_all(s, n);
  out.correction.reserve(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r) {
    const auto k = static_cast<std::uint64_t>(n - r);
    out.correction.push_back(
        {n - r, pochhammer_weight(s, k) * reciprocal_gamma(s.beta - r * s.alpha)});
  }
  return out;
}

double beta_downshift(const ValidSpec& vs, int n, double u, const EvalOptions& options) {
  const DownshiftExpansion ex = downshift_expansion(vs, n);
  double value = 0.0;
  if (u != 0.0 && ex.scale != 0.0) {
    value = ex.scale * std::pow(u, ex.power) * eval(ex.shifted, u, options).value;
  }
  // Horner over the correction polynomial (highest power first).
  double poly = 0.0;
  for (const auto& term : ex.correction) poly = poly * u + term.coeff;
  return value + poly;
}

DerivativeForm derivative_closed_form(const ValidSpec& vs, int m) {
  const HmlfSpec& s = vs.spec();
  require_2f1(s, "derivative_closed_form");
  require_positive(m, "m");

  const auto mk = static_cast<std::uint64_t>(m);
  DerivativeForm out;
  out.scale = pochhammer(1.0, mk) * pochhammer_weight(s, mk);
  out.result_spec.upper = {s.upper[0] + m, s.upper[1] + m, m + 1.0};
  out.result_spec.lower = {s.lower[0] + m, 1.0};
  out.result_spec.alpha = s.alpha;
  out.result_spec.beta = m * s.alpha + s.beta;
  // Reject a result spec the series engine cannot handle up front.
  (void)validate_spec(out.result_spec);
  return out;
}

double umbral_shift_rhs(const ValidSpec& vs, int m, double u, const EvalOptions& options) {
  const HmlfSpec& s = vs.spec();
  require_2f1(s, "umbral_shift_rhs");
  require_positive(m, "m");
  if (u == 0.0) return 0.0;
  const double scale = pochhammer_weight(s, static_cast<std::uint64_t>(m));
  return std::pow(u, m) * scale * eval(shift_all(s, m), u, options).value;
}

double chi_shift_rhs(const ValidSpec& vs, int m, double u, const EvalOptions& options) {
  const HmlfSpec& s = vs.spec();
  require_2f1(s, "chi_shift_rhs");
  require_positive(m, "m");

  HmlfSpec result = s;
  result.upper.insert(result.upper.end(), static_cast<std::size_t>(m), 2.0);
  result.lower.insert(result.lower.end(), static_cast<std::size_t>(m), 1.0);
  result.beta = m * s.alpha + s.beta;
  const ValidSpec valid = validate_spec(std::move(result));
  if (u == 0.0) return 0.0;
  return std::pow(u, m) * eval(valid, u, options).value;
}

double numerical_derivative(const ValidSpec& vs, double u, int m, double step,
                            const EvalOptions& options) {
  auto f = [&](double x) { return eval(vs, x, options).value; };
  const double h = step;
  const double fm2 = f(u - 2 * h);
  const double fm1 = f(u - h);
  const double fp1 = f(u + h);
  const double fp2 = f(u + 2 * h);
  switch (m) {
    case 1: return (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
    case 2: return (-fm2 + 16 * fm1 - 30 * f(u) + 16 * fp1 - fp2) / (12 * h * h);
    default: throw Error(ErrorCode::InvalidArgument, "numerical_derivative supports m = 1, 2");
  }
}

}  // namespace hmlf
