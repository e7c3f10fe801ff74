#include "hmlf/special_cases.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hmlf/error.hpp"
#include "hmlf/special_core.hpp"

namespace hmlf {

double mittag_leffler(double alpha, double beta, double u, const EvalOptions& options) {
  return eval(HmlfSpec{{}, {}, alpha, beta}, u, options).value;
}

double prabhakar(double a1, double alpha, double beta, double u, const EvalOptions& options) {
  return eval(HmlfSpec{{a1}, {1.0}, alpha, beta}, u, options).value;
}

double hyp_tricomi(double a1, double a2, double b1, unsigned m, double u,
                   const EvalOptions& options) {
  return eval(HmlfSpec{{a1, a2}, {b1, 1.0}, 1.0, m + 1.0}, -u, options).value;
}

double hyp_bessel(double a1, double a2, double b1, unsigned m, double u,
                  const EvalOptions& options) {
  const HmlfSpec spec{{(a1 + m) / 2, (a1 + m + 1) / 2, (a2 + m) / 2, (a2 + m + 1) / 2},
                      {1.0, (b1 + m) / 2, (b1 + m + 1) / 2},
                      1.0,
                      m + 1.0};
  const double weight = pochhammer(a1, m) * pochhammer(a2, m) / pochhammer(b1, m);
  return std::pow(u / 2, m) * weight * eval(spec, -u * u, options).value;
}

double fox_wright_2psi1(double a1, double a2, double alpha, double beta, double u,
                        const EvalOptions& options) {
  if (is_nonpositive_integer(a1) || is_nonpositive_integer(a2)) {
    throw Error(ErrorCode::GammaPole, "fox_wright_2psi1: Gamma(a) has a pole at a=" +
                                          std::to_string(is_nonpositive_integer(a1) ? a1 : a2));
  }
  const double gammas = 1.0 / (reciprocal_gamma(a1) * reciprocal_gamma(a2));
  return gammas * eval(HmlfSpec{{a1, a2}, {1.0}, alpha, beta}, u, options).value;
}

double classical_2f1(double a1, double a2, double b1, double u, const EvalOptions& options) {
  return eval(HmlfSpec{{a1, a2}, {b1}, 1.0, 1.0}, u, options).value;
}

double sin_via_hmlf(double u) {
  if (u == 0.0) return 0.0;
  const double f = eval(HmlfSpec{{}, {1.0}, 1.0, 1.5}, -u * u / 4).value;
  return u * std::sqrt(std::numbers::pi) / 2 * f;
}

double cos_via_hmlf(double u) {
  return std::sqrt(std::numbers::pi) * eval(HmlfSpec{{}, {1.0}, 1.0, 0.5}, -u * u / 4).value;
}

double cos_sqrt_gaussian(double delta, const EvalOptions& options) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::InvalidDelta, "cos_sqrt_gaussian requires delta > 0");
  }
  const double x = 1.0 / (64.0 * delta);
  return std::numbers::pi / std::sqrt(delta) *
         eval(HmlfSpec{{}, {1.0}, 2.0, 0.5}, x, options).value;
}

}  // namespace hmlf
