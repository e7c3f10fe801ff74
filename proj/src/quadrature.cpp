#include "hmlf/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "hmlf/compensated_sum.hpp"
#include "hmlf/error.hpp"

namespace hmlf::quad {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae (descending, last is the centre) and weights; the
// 7-point Gauss rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;

  bool operator<(const Segment& other) const { return error < other.error; }
};

// One G7-K15 panel; error scaled the QUADPACK way.
Segment kronrod_panel(const Integrand& f, double a, double b, std::uint64_t& evals) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(centre);
  double res_k = fc * kWgk[7];
  double res_g = fc * kWg[3];
  double res_abs = std::fabs(res_k);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(centre - dx);
    f2[j] = f(centre + dx);
    res_k += kWgk[j] * (f1[j] + f2[j]);
    res_abs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) res_g += kWg[j / 2] * (f1[j] + f2[j]);
  }
  evals += 15;

  const double mean = 0.5 * res_k;
  double res_asc = kWgk[7] * std::fabs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    res_asc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));
  }

  const double ahalf = std::fabs(half);
  double err = std::fabs((res_k - res_g) * half);
  res_asc *= ahalf;
  res_abs *= ahalf;
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * res_abs, err);
  }
  return {a, b, res_k * half, err};
}

QuadResult integrate_panels(const Integrand& f, std::span<const double> breaks, double tol,
                            int max_subdivisions) {
  std::uint64_t evals = 0;
  std::priority_queue<Segment> heap;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    Segment s = kronrod_panel(f, breaks[i], breaks[i + 1], evals);
    total += s.value;
    total_err += s.error;
    heap.push(s);
  }

  int subdivisions = static_cast<int>(heap.size());
  while (total_err > tol * std::max(1.0, std::fabs(total))) {
    if (subdivisions >= max_subdivisions) {
      throw Error(ErrorCode::MaxSubdivisions,
                  "tolerance " + std::to_string(tol) + " not reached; estimate " +
                      std::to_string(total) + " +- " + std::to_string(total_err));
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = kronrod_panel(f, worst.a, mid, evals);
    const Segment right = kronrod_panel(f, mid, worst.b, evals);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }

  // Re-sum from the final panels; the running totals drift under many
  // subtract-and-add updates.
  CompensatedSum value;
  CompensatedSum error;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {value.value(), error.value(), evals};
}

std::vector<double> uniform_breaks(double a, double b, int panels) {
  std::vector<double> out(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / panels;
  out.back() = b;
  return out;
}

constexpr double kWeightCutoff = 1e-18;
constexpr int kInitialPanels = 16;
constexpr int kMaxExtensions = 60;

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, double tol,
                            int max_subdivisions) {
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "integrate_finite requires a < b");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  const std::array<double, 2> breaks = {a, b};
  return integrate_panels(f, breaks, tol, max_subdivisions);
}

QuadResult integrate_gaussian(const Integrand& f, double delta, double tol) {
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidDelta, "integrate_gaussian requires delta > 0");
  auto weighted = [&](double u) { return std::exp(-delta * u * u) * f(u); };

  const double scale = std::max(1.0, std::fabs(f(0.0)));
  double half_width = std::sqrt(std::log(1.0 / kWeightCutoff) / delta);
  double edge = 0.0;
  for (int i = 0; i < kMaxExtensions; ++i) {
    edge = std::max(std::fabs(weighted(half_width)), std::fabs(weighted(-half_width)));
    if (edge <= kWeightCutoff * scale) break;
    half_width *= 1.25;
  }

  const auto breaks = uniform_breaks(-half_width, half_width, kInitialPanels);
  QuadResult r = integrate_panels(weighted, breaks, tol, 4000);
  // Gaussian tail beyond L is bounded by edge / (2 delta L) on each side.
  r.est_abs_error += edge / (delta * half_width);
  r.evaluations += 2;
  return r;
}

QuadResult integrate_exp_halfline(const Integrand& f, double s, double tol) {
  if (!(s > 0.0)) throw Error(ErrorCode::InvalidS, "integrate_exp_halfline requires s > 0");
  auto weighted = [&](double t) { return std::exp(-s * t) * f(t); };

  const double scale = std::max(1.0, std::fabs(f(0.0)));
  double end = std::log(1.0 / kWeightCutoff) / s;
  double edge = 0.0;
  for (int i = 0; i < kMaxExtensions; ++i) {
    edge = std::fabs(weighted(end));
    if (edge <= kWeightCutoff * scale) break;
    end *= 1.25;
  }

  const auto breaks = uniform_breaks(0.0, end, kInitialPanels);
  QuadResult r = integrate_panels(weighted, breaks, tol, 4000);
  // Tail of a sub-exponential f: roughly edge / s, doubled for slack.
  r.est_abs_error += 2.0 * edge / s;
  r.evaluations += 1;
  return r;
}

double wynn_epsilon(std::span<const double> s) {
  if (s.empty()) return 0.0;
  std::vector<double> prev(s.size() + 1, 0.0);
  std::vector<double> cur(s.begin(), s.end());
  double best = s.back();
  for (int k = 1; cur.size() > 1; ++k) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double d = cur[i + 1] - cur[i];
      if (d == 0.0 || !std::isfinite(1.0 / d)) return best;
      next[i] = prev[i + 1] + 1.0 / d;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) best = cur.back();
  }
  return best;
}

QuadResult integrate_oscillatory_halfline(const Integrand& f, Kernel kernel, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  constexpr int kMinHalfPeriods = 16;
  constexpr int kMaxHalfPeriods = 400;
  constexpr std::size_t kWindow = 20;

  auto integrand = [&](double u) {
    return f(u) * (kernel == Kernel::Sin ? std::sin(u) : std::cos(u));
  };
  // Pieces are O(1) in size; below ~45 ulp the Kronrod estimate cannot certify.
  const double piece_tol = std::clamp(tol * 1e-2, 1e-14, 1e-12);

  QuadResult out;
  CompensatedSum running;
  double piece_error = 0.0;
  std::vector<double> partial;
  std::vector<double> estimates;

  for (int k = 0; k < kMaxHalfPeriods; ++k) {
    const double a = k * std::numbers::pi;
    const QuadResult piece = integrate_finite(integrand, a, a + std::numbers::pi, piece_tol);
    running += piece.value;
    piece_error += piece.est_abs_error;
    out.evaluations += piece.evaluations;
    partial.push_back(running.value());
    if (k + 1 < kMinHalfPeriods) continue;

    const std::size_t n = std::min(kWindow, partial.size());
    estimates.push_back(wynn_epsilon(std::span(partial).last(n)));
    if (estimates.size() < 3) continue;

    const double e0 = estimates[estimates.size() - 1];
    const double e1 = estimates[estimates.size() - 2];
    const double e2 = estimates[estimates.size() - 3];
    const double spread = std::max(std::fabs(e0 - e1), std::fabs(e1 - e2));
    const double err = spread + piece_error + 50.0 * kEps * std::fabs(e0);
    if (err <= tol * std::max(1.0, std::fabs(e0))) {
      out.value = e0;
      out.est_abs_error = err;
      return out;
    }
  }
  throw Error(ErrorCode::AccelerationFailure,
              "partial sums did not stabilise within " + std::to_string(kMaxHalfPeriods) +
                  " half periods");
}

}  // namespace hmlf::quad
