#pragma once

#include "hmlf/series.hpp"

namespace hmlf {

/// Antiderivative of u^delta f(u) that vanishes at u = 0 (delta > -1):
///   u^(delta+1) / (delta+1) * f(upper ++ [delta+1]; lower ++ [delta+2]; u)
/// Throws Error(InvalidDelta) for delta = -1 or delta + 2 a nonpositive integer.
double moment_integral(const ValidSpec& spec, double delta, double u,
                       const EvalOptions& options = {});

/// The spec whose value at gaussian_argument gives the Gaussian-weight
/// integral: every parameter c is split into c/2, (c+1)/2, an upper 1/2 is
/// appended and alpha doubles.
HmlfSpec gaussian_doubled_spec(const HmlfSpec& spec);

/// 4^(p-q) / delta. The duplication rule (c)_2r = 4^r (c/2)_r ((c+1)/2)_r
/// contributes one factor 4^r per upper parameter and removes one per lower
/// parameter, so the familiar 4/delta, 1/delta, 1/(4 delta) cases are
/// p - q = 1, 0, -1.
double gaussian_argument(const HmlfSpec& spec, double delta);

/// Integral over the real line of exp(-delta u^2) f(u):
///   sqrt(pi/delta) * f_doubled(4^(p-q) / delta)
/// Throws Error(FormalIdentity) when the doubled series is formal only and
/// Error(InvalidDelta) unless delta > 0.
double gaussian_integral(const ValidSpec& spec, double delta, const EvalOptions& options = {});

/// Builders for the sine/cosine integral closed forms of a p=2, q=1 member
/// (argument -16, alpha doubled).
HmlfSpec sine_integral_spec(const HmlfSpec& spec);
HmlfSpec cosine_integral_spec(const HmlfSpec& spec);

/// Integral over [0, inf) of f(-u) sin(u). Throws Error(FormalIdentity) for alpha <= 2.
double sine_integral_rhs(const ValidSpec& spec, const EvalOptions& options = {});

/// Integral over [0, inf) of f(-u) cos(u). Throws Error(FormalIdentity) for alpha <= 2.
double cosine_integral_rhs(const ValidSpec& spec, const EvalOptions& options = {});

/// (a1, a2, 1; b1; alpha, beta): the series both transforms reduce to.
HmlfSpec transform_spec(const HmlfSpec& spec);

/// Laplace transform of t -> f(-t) at s > 0:
///   (1/s) * f_transform(-1/s)
/// For alpha <= 2 the result series may be asymptotic only; it is then cut
/// at its smallest term and the error estimate carries that term.
EvalResult laplace_transform(const ValidSpec& spec, double s, const EvalOptions& options = {});

/// Sumudu transform of t -> f(-t) at u: f_transform(-u).
EvalResult sumudu_transform(const ValidSpec& spec, double u, const EvalOptions& options = {});

}  // namespace hmlf
