#pragma once

#include <cstdint>
#include <vector>

#include "hmlf/series.hpp"

namespace hmlf {

/// Right-hand side of the beta-downshift identity, split into parts:
///
///   f_{alpha, beta - n alpha}(a1, a2; b1; u)
///     = scale * u^n * f_{alpha, beta}(a1+n, a2+n; b1+n; u)
///       + sum_{k} correction[k].coeff * u^correction[k].power
struct DownshiftExpansion {
  struct Term {
    int power = 0;
    double coeff = 0.0;
  };

  double scale = 1.0;  ///< (a1)_n (a2)_n / (b1)_n
  int power = 0;       ///< n
  HmlfSpec shifted;
  std::vector<Term> correction;  ///< powers n-1, n-2, ..., 0
};

/// Throws Error(ShapeMismatch) unless p = 2, q = 1 and Error(ConditionViolated)
/// unless beta > n alpha.
DownshiftExpansion downshift_expansion(const ValidSpec& spec, int n);

/// Evaluates the expansion at u. Equals eval of the spec with beta replaced
/// by beta - n alpha.
double beta_downshift(const ValidSpec& spec, int n, double u, const EvalOptions& options = {});

struct DerivativeForm {
  double scale = 1.0;
  HmlfSpec result_spec;
};

/// m-th u-derivative of a 2F1-type member as scale * f_result(u), with
///   scale  = m! (a1)_m (a2)_m / (b1)_m
///   result = (a1+m, a2+m, m+1; b1+m, 1; alpha, m alpha + beta)
DerivativeForm derivative_closed_form(const ValidSpec& spec, int m);

/// u^m (a1)_m (a2)_m / (b1)_m * f_{alpha,beta}(a1+m, a2+m; b1+m; u).
/// Only the closed-form side of the umbral shift relation is evaluable.
double umbral_shift_rhs(const ValidSpec& spec, int m, double u, const EvalOptions& options = {});

/// u^m * f_{alpha, m alpha + beta}(a1, a2, 2 (m times); b1, 1 (m times); u).
double chi_shift_rhs(const ValidSpec& spec, int m, double u, const EvalOptions& options = {});

/// Five-point central difference of the series for members without a closed
/// form. m = 1 or 2.
double numerical_derivative(const ValidSpec& spec, double u, int m, double step = 1e-5,
                            const EvalOptions& options = {});

}  // namespace hmlf
