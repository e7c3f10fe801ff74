#pragma once

#include <cstdint>
#include <functional>
#include <span>

namespace hmlf::quad {

// Independent numerical integration used to check the closed forms. Nothing
// in the closed-form modules calls into this namespace.

using Integrand = std::function<double(double)>;

struct QuadResult {
  double value = 0.0;
  double est_abs_error = 0.0;
  std::uint64_t evaluations = 0;
};

/// Globally adaptive 7-point Gauss / 15-point Kronrod bisection on [a, b].
/// Succeeds once est_abs_error <= tol * max(1, |value|); throws
/// Error(MaxSubdivisions) when the interval budget runs out first.
QuadResult integrate_finite(const Integrand& f, double a, double b, double tol,
                            int max_subdivisions = 4000);

/// Integral over the real line of exp(-delta u^2) f(u), truncated to [-L, L]
/// where the weighted integrand has dropped below 1e-18.
QuadResult integrate_gaussian(const Integrand& f, double delta, double tol);

/// Integral over [0, inf) of exp(-s t) f(t), truncated at T where the
/// weighted integrand has dropped below 1e-18; the tail bound is folded into
/// the error estimate.
QuadResult integrate_exp_halfline(const Integrand& f, double s, double tol);

enum class Kernel { Sin, Cos };

/// Integral over [0, inf) of f(u) sin(u) or f(u) cos(u). Integrates each
/// half period [k pi, (k+1) pi] separately and extrapolates the partial sums
/// with Wynn's epsilon algorithm. Throws Error(AccelerationFailure) when the
/// extrapolated limit does not settle.
QuadResult integrate_oscillatory_halfline(const Integrand& f, Kernel kernel, double tol);

/// Limit estimate of a sequence of partial sums from the deepest even column
/// of Wynn's epsilon table.
double wynn_epsilon(std::span<const double> partial_sums);

}  // namespace hmlf::quad
