#include "hmlf/analysis.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <string>

#include "hmlf/error.hpp"

namespace hmlf {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_grid(double u_min, double u_max, int n) {
  if (!(u_min < u_max) || !std::isfinite(u_min) || !std::isfinite(u_max)) {
    throw Error(ErrorCode::InvalidArgument, "grid requires finite u_min < u_max");
  }
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "grid requires n >= 2");
}

double grid_point(double u_min, double u_max, int n, int i) {
  if (i == n - 1) return u_max;
  return u_min + (u_max - u_min) * static_cast<double>(i) / static_cast<double>(n - 1);
}

SampleStatus from_eval(EvalStatus s) {
  switch (s) {
    case EvalStatus::Converged: return SampleStatus::Converged;
    case EvalStatus::Terminated: return SampleStatus::Terminated;
    case EvalStatus::TruncatedAsymptotic: return SampleStatus::TruncatedAsymptotic;
    case EvalStatus::DivergenceDetected: return SampleStatus::DivergenceDetected;
  }
  return SampleStatus::DivergenceDetected;
}

bool has_value(SampleStatus s) {
  return s == SampleStatus::Converged || s == SampleStatus::Terminated ||
         s == SampleStatus::TruncatedAsymptotic;
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// Bisection on [lo, hi] with sign(f(lo)) = s_lo != sign(f(hi)).
RealZero refine(const ValidSpec& vs, double lo, double hi, int s_lo, double refine_tol,
                const EvalOptions& options) {
  auto f = [&](double u) { return eval(vs, u, options).value; };
  double best = 0.5 * (lo + hi);
  double best_abs = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (!(lo < mid && mid < hi)) break;
    const double fm = f(mid);
    if (std::fabs(fm) < best_abs) {
      best = mid;
      best_abs = std::fabs(fm);
    }
    if (fm == 0.0 || std::fabs(fm) <= refine_tol) break;
    if (sign_of(fm) == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {best, lo, hi, f(best)};
}

}  // namespace

std::string_view to_string(SampleStatus status) noexcept {
  switch (status) {
    case SampleStatus::Converged: return "Converged";
    case SampleStatus::Terminated: return "Terminated";
    case SampleStatus::TruncatedAsymptotic: return "TruncatedAsymptotic";
    case SampleStatus::DivergenceDetected: return "DivergenceDetected";
    case SampleStatus::OutsideDomain: return "OutsideDomain";
    case SampleStatus::NonConvergence: return "NonConvergence";
    case SampleStatus::Overflow: return "Overflow";
  }
  return "Unknown";
}

GridSample sample_point(const ValidSpec& vs, double u, const EvalOptions& options) {
  try {
    const EvalResult r = eval(vs, u, options);
    const SampleStatus status = from_eval(r.status);
    return {u, has_value(status) ? r.value : kNaN, status};
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::DivergenceRejected: return {u, kNaN, SampleStatus::OutsideDomain};
      case ErrorCode::NonConvergence: return {u, kNaN, SampleStatus::NonConvergence};
      case ErrorCode::Overflow: return {u, kNaN, SampleStatus::Overflow};
      default: throw;
    }
  }
}

std::vector<GridSample> sample_grid_serial(const HmlfSpec& spec, double u_min, double u_max, int n,
                                           const EvalOptions& options) {
  require_grid(u_min, u_max, n);
  const ValidSpec vs = validate_spec(spec);
  std::vector<GridSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(sample_point(vs, grid_point(u_min, u_max, n, i), options));
  return out;
}

int threads_from_env() {
  const char* raw = std::getenv("HMLF_THREADS");
  if (raw == nullptr) return 0;
  const std::string_view text(raw);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) return 0;
  return value;
}

std::vector<GridSample> sample_grid(const HmlfSpec& spec, double u_min, double u_max, int n,
                                    const EvalOptions& options, int threads) {
  require_grid(u_min, u_max, n);
  const ValidSpec vs = validate_spec(spec);
  if (threads <= 0) threads = threads_from_env();
  if (threads <= 0) threads = omp_get_max_threads();

  std::vector<GridSample> out(static_cast<std::size_t>(n));
  std::exception_ptr failure;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 8)
  for (int i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = sample_point(vs, grid_point(u_min, u_max, n, i), options);
    } catch (...) {
#pragma omp critical(hmlf_grid_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

ZeroReport find_real_zeros(const HmlfSpec& spec, double u_min, double u_max, int scan_points,
                           double refine_tol, const EvalOptions& options) {
  if (scan_points < 16) throw Error(ErrorCode::InvalidArgument, "scan_points must be >= 16");
  require_grid(u_min, u_max, scan_points);
  if (!(refine_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "refine_tol must be positive");

  const ValidSpec vs = validate_spec(spec);
  if (!inside_convergence_domain(vs, u_min) || !inside_convergence_domain(vs, u_max)) {
    const EffectiveRule rule = classify(vs).effective_rule;
    throw Error(ErrorCode::DomainOutsideConvergence,
                "scan range [" + std::to_string(u_min) + ", " + std::to_string(u_max) +
                    "] leaves the convergence domain (" + std::string(to_string(rule.kind)) +
                    ", radius " + std::to_string(rule.radius) + ")");
  }

  ZeroReport report;
  report.scan_min = u_min;
  report.scan_max = u_max;
  report.scan_points = scan_points;

  std::vector<double> us(static_cast<std::size_t>(scan_points));
  std::vector<double> fs(us.size());
  for (int i = 0; i < scan_points; ++i) {
    us[static_cast<std::size_t>(i)] = grid_point(u_min, u_max, scan_points, i);
    fs[static_cast<std::size_t>(i)] = eval(vs, us[static_cast<std::size_t>(i)], options).value;
  }

  for (std::size_t i = 0; i + 1 < us.size(); ++i) {
    const int s0 = sign_of(fs[i]);
    const int s1 = sign_of(fs[i + 1]);
    if (s0 == 0 || s1 == 0 || s0 == s1) continue;
    report.zeros.push_back(refine(vs, us[i], us[i + 1], s0, refine_tol, options));
  }
  // A sample landing exactly on a zero: bracket it with its neighbours.
  for (std::size_t i = 1; i + 1 < us.size(); ++i) {
    if (fs[i] != 0.0) continue;
    const int sl = sign_of(fs[i - 1]);
    const int sr = sign_of(fs[i + 1]);
    if (sl != 0 && sr != 0 && sl != sr) report.zeros.push_back({us[i], us[i - 1], us[i + 1], 0.0});
  }
  std::sort(report.zeros.begin(), report.zeros.end(),
            [](const RealZero& a, const RealZero& b) { return a.location < b.location; });
  return report;
}

}  // namespace hmlf
