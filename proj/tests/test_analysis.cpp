#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <vector>

#include "hmlf/analysis.hpp"
#include "hmlf/special_core.hpp"
#include "test_support.hpp"

using namespace hmlf;
using testing_support::error_code_of;
using testing_support::rel_err;

namespace {

bool bitwise_equal(const std::vector<GridSample>& a, const std::vector<GridSample>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::memcmp(&a[i].u, &b[i].u, sizeof(double)) != 0) return false;
    if (std::memcmp(&a[i].value, &b[i].value, sizeof(double)) != 0) return false;
    if (a[i].status != b[i].status) return false;
  }
  return true;
}

const HmlfSpec kLog{{1.0, 1.0}, {1.0}, 2.0, 1.0};

}  // namespace

TEST_CASE("grid: endpoints and spacing") {
  const auto two = sample_grid_serial(kLog, -3.0, 0.5, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].u == -3.0);
  CHECK(two[1].u == 0.5);

  const auto g = sample_grid_serial(kLog, -0.3, 0.7, 11);
  REQUIRE(g.size() == 11);
  CHECK(g.back().u == 0.7);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g[i].u == doctest::Approx(-0.3 + 0.1 * static_cast<double>(i)).epsilon(1e-15));
  }

  const auto z = sample_grid_serial(HmlfSpec{{0.4}, {2.2}, 1.5, 2.75}, -1.0, 1.0, 3);
  CHECK(z[1].u == 0.0);
  CHECK(z[1].value == reciprocal_gamma(2.75));

  CHECK(error_code_of([] { sample_grid_serial(kLog, 0.0, 1.0, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("grid: statuses across the radius") {
  // Finite radius 1: the boundary and beyond are rejected, not evaluated.
  const HmlfSpec geometric{{1.0}, {}, 1.0, 1.0};
  const auto g = sample_grid_serial(geometric, -0.5, 2.0, 6);
  CHECK(g[0].status == SampleStatus::Converged);
  CHECK(rel_err(g[0].value, 1.0 / 1.5) <= 1e-13);
  CHECK(g[1].status == SampleStatus::Converged);
  CHECK(g[3].u == 1.0);
  for (std::size_t i = 3; i < g.size(); ++i) {
    CHECK(g[i].status == SampleStatus::OutsideDomain);
    CHECK(std::isnan(g[i].value));
  }

  const auto fig = sample_grid_serial(kLog, -5.0, 0.9, 101);
  for (const auto& s : fig) CHECK(s.status == SampleStatus::Converged);

  const auto term = sample_grid_serial(HmlfSpec{{-3.0}, {}, 1.0, 1.0}, -50.0, 50.0, 5);
  for (const auto& s : term) CHECK(s.status == SampleStatus::Terminated);
  CHECK(std::string(to_string(SampleStatus::OutsideDomain)) == "OutsideDomain");
}

TEST_CASE("grid: parallel rows equal the serial reference bit for bit") {
  const HmlfSpec specs[] = {kLog, HmlfSpec{{1.0}, {}, 1.0, 1.0}, HmlfSpec{{0.3, 2.1}, {1.7}, 2.5, 0.8}};
  for (const auto& spec : specs) {
    const auto ref = sample_grid_serial(spec, -14.0, 1.4, 997);
    for (int threads : {1, 2, 3, 8}) {
      INFO("threads=" << threads);
      CHECK(bitwise_equal(sample_grid(spec, -14.0, 1.4, 997, {}, threads), ref));
    }
    CHECK(bitwise_equal(sample_grid(spec, -14.0, 1.4, 997), ref));
  }
}

TEST_CASE("HMLF_THREADS") {
  const char* saved = std::getenv("HMLF_THREADS");
  const std::string restore = saved ? saved : "";

  ::unsetenv("HMLF_THREADS");
  CHECK(threads_from_env() == 0);
  ::setenv("HMLF_THREADS", "3", 1);
  CHECK(threads_from_env() == 3);
  const auto ref = sample_grid_serial(kLog, -2.0, 0.5, 50);
  CHECK(bitwise_equal(sample_grid(kLog, -2.0, 0.5, 50), ref));
  ::setenv("HMLF_THREADS", "abc", 1);
  CHECK(threads_from_env() == 0);
  ::setenv("HMLF_THREADS", "", 1);
  CHECK(threads_from_env() == 0);
  ::setenv("HMLF_THREADS", "-4", 1);
  CHECK(threads_from_env() == 0);

  if (saved) {
    ::setenv("HMLF_THREADS", restore.c_str(), 1);
  } else {
    ::unsetenv("HMLF_THREADS");
  }
}

TEST_CASE("zeros: cos(sqrt(-u)) member") {
  // E_{2,1}(u) = cos(sqrt(-u)) for u < 0; zeros at -(pi/2 + k pi)^2.
  const HmlfSpec ml2{{}, {}, 2.0, 1.0};
  const auto report = find_real_zeros(ml2, -40.0, -0.1, 400, 1e-12);
  CHECK(report.scan_points == 400);
  CHECK(report.scan_min == -40.0);
  CHECK(report.scan_max == -0.1);
  REQUIRE(report.zeros.size() == 2);
  const double expect[] = {-std::pow(1.5 * std::numbers::pi, 2), -std::pow(0.5 * std::numbers::pi, 2)};
  const ValidSpec vs = validate_spec(ml2);
  for (std::size_t i = 0; i < 2; ++i) {
    const RealZero& z = report.zeros[i];
    CHECK(z.location == doctest::Approx(expect[i]).epsilon(1e-9));
    CHECK(z.lo <= z.location);
    CHECK(z.location <= z.hi);
    CHECK(std::fabs(z.residual) <= 1e-10);
    // Self-verification: the bracket really straddles a sign change.
    const double flo = eval(vs, z.lo).value;
    const double fhi = eval(vs, z.hi).value;
    CHECK((std::signbit(flo) != std::signbit(fhi) || flo == 0.0 || fhi == 0.0));
    CHECK(std::fabs(eval(vs, z.location).value) <= 1e-10);
  }
  CHECK(report.zeros[0].location < report.zeros[1].location);
}

TEST_CASE("zeros: none where the function keeps its sign") {
  CHECK(find_real_zeros(kLog, 0.1, 5.0, 64, 1e-12).zeros.empty());
  CHECK(find_real_zeros(HmlfSpec{{1.0}, {}, 1.0, 1.0}, -0.9, 0.9, 64, 1e-12).zeros.empty());
}

TEST_CASE("zeros: an exactly hit root is reported once") {
  // f = 1 - u (terminating); u = 1 is a grid point of the scan.
  const auto r = find_real_zeros(HmlfSpec{{-1.0}, {}, 1.0, 1.0}, 0.0, 2.0, 21, 1e-14);
  REQUIRE(r.zeros.size() == 1);
  CHECK(r.zeros[0].location == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("zeros: refusals") {
  const HmlfSpec radius_one{{1.5, 2.0}, {1.5}, 1.0, 3.0};
  CHECK(error_code_of([&] { find_real_zeros(radius_one, -40.0, -0.1, 400, 1e-12); }) ==
        ErrorCode::DomainOutsideConvergence);
  CHECK(error_code_of([&] { find_real_zeros(radius_one, -0.9, 1.0, 400, 1e-12); }) ==
        ErrorCode::DomainOutsideConvergence);
  CHECK(find_real_zeros(radius_one, -0.9, -0.1, 400, 1e-12).zeros.empty());
  CHECK(error_code_of([] { find_real_zeros(kLog, -1.0, 0.5, 15, 1e-12); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_code_of([] { find_real_zeros(kLog, -1.0, 0.5, 64, 0.0); }) ==
        ErrorCode::InvalidArgument);
  CHECK(error_code_of([] { find_real_zeros(kLog, 0.5, -1.0, 64, 1e-12); }) ==
        ErrorCode::InvalidArgument);
}
