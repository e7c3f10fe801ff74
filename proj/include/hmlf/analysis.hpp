#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "hmlf/series.hpp"

namespace hmlf {

/// Per-point outcome of a grid evaluation. The first four mirror EvalStatus;
/// the rest record the eval error that replaced a value.
enum class SampleStatus {
  Converged,
  Terminated,
  TruncatedAsymptotic,
  DivergenceDetected,
  OutsideDomain,
  NonConvergence,
  Overflow,
};

std::string_view to_string(SampleStatus status) noexcept;

/// value is NaN unless status is Converged, Terminated or TruncatedAsymptotic.
struct GridSample {
  double u = 0.0;
  double value = 0.0;
  SampleStatus status = SampleStatus::Converged;
};

/// Evaluates one point, mapping eval errors to a status instead of throwing.
GridSample sample_point(const ValidSpec& spec, double u, const EvalOptions& options = {});

/// u_i = u_min + i (u_max - u_min) / (n - 1), i = 0..n-1, with u_{n-1} = u_max
/// exactly. Reference implementation for sample_grid.
std::vector<GridSample> sample_grid_serial(const HmlfSpec& spec, double u_min, double u_max, int n,
                                           const EvalOptions& options = {});

/// Same rows as sample_grid_serial, evaluated with OpenMP. threads <= 0 reads
/// HMLF_THREADS and falls back to the OpenMP default when that is unset or 0.
/// Row i is always the i-th grid point, so output does not depend on the
/// thread count.
std::vector<GridSample> sample_grid(const HmlfSpec& spec, double u_min, double u_max, int n,
                                    const EvalOptions& options = {}, int threads = 0);

/// Thread cap from HMLF_THREADS; 0 when unset, empty, non-numeric or 0.
int threads_from_env();

struct RealZero {
  double location = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double residual = 0.0;
};

struct ZeroReport {
  std::vector<RealZero> zeros;
  double scan_min = 0.0;
  double scan_max = 0.0;
  int scan_points = 0;
};

/// Sign-change scan at scan_points equally spaced samples, then bisection of
/// each bracket until |f| <= refine_tol or the bracket cannot shrink further.
/// Zeros of even multiplicity produce no sign change and are not reported.
/// Throws Error(DomainOutsideConvergence) unless the whole range lies strictly
/// inside the convergence domain, Error(InvalidArgument) for scan_points < 16
/// or u_min >= u_max.
ZeroReport find_real_zeros(const HmlfSpec& spec, double u_min, double u_max, int scan_points,
                           double refine_tol, const EvalOptions& options = {});

}  // namespace hmlf
