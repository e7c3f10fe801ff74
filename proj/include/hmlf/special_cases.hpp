#pragma once

#include "hmlf/series.hpp"

namespace hmlf {

// Classical and recently introduced functions obtained as parameter
// specialisations of the family. Each one is a thin spec constructor around
// eval; errors propagate from there.

/// E_{alpha,beta}(u): the member with no upper and no lower parameters.
double mittag_leffler(double alpha, double beta, double u, const EvalOptions& options = {});

/// Three-parameter Mittag-Leffler E^{a1}_{alpha,beta}(u) = f(a1; 1; u).
double prabhakar(double a1, double alpha, double beta, double u, const EvalOptions& options = {});

/// Hypergeometric-Tricomi function: f(a1, a2; b1, 1; alpha=1, beta=m+1; -u).
double hyp_tricomi(double a1, double a2, double b1, unsigned m, double u,
                   const EvalOptions& options = {});

/// Hypergeometric-Bessel function of order m, from the 4-over-3 member at -u^2:
///   (u/2)^m (a1)_m (a2)_m / (b1)_m * f([(a1+m)/2, (a1+m+1)/2, (a2+m)/2, (a2+m+1)/2];
///                                      [1, (b1+m)/2, (b1+m+1)/2]; 1, m+1; -u^2)
double hyp_bessel(double a1, double a2, double b1, unsigned m, double u,
                  const EvalOptions& options = {});

/// Normalised Fox-Wright 2psi1: Gamma(a1) Gamma(a2) f(a1, a2; 1; alpha, beta; u).
/// Throws Error(GammaPole) when a1 or a2 is a nonpositive integer.
double fox_wright_2psi1(double a1, double a2, double alpha, double beta, double u,
                        const EvalOptions& options = {});

/// Gauss 2F1(a1, a2; b1; u) as the alpha = beta = 1 member. Outside |u| < 1
/// only terminating parameter sets evaluate; eval rejects the rest.
double classical_2f1(double a1, double a2, double b1, double u, const EvalOptions& options = {});

/// (u sqrt(pi) / 2) f(-; 1; 1, 3/2; -u^2/4), equal to sin u.
double sin_via_hmlf(double u);

/// sqrt(pi) f(-; 1; 1, 1/2; -u^2/4), equal to cos u.
double cos_via_hmlf(double u);

/// Integral over the real line of exp(-delta u^2) cos(sqrt(u)), with
/// cos(sqrt(u)) read as cosh(sqrt(-u)) for u < 0:
///   (pi / sqrt(delta)) f(-; 1; 2, 1/2; 1/(64 delta))
double cos_sqrt_gaussian(double delta, const EvalOptions& options = {});

}  // namespace hmlf
