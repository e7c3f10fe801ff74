#include "hmlf/special_core.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hmlf/error.hpp"

namespace hmlf {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// zeta(k) - 1 for k = 2, 3, ..., 45.
constexpr std::array<double, 44> kZetaMinusOne = {
    6.4493406684822643647e-1, 2.020569031595942854e-1,  8.2323233711138191516e-2,
    3.6927755143369926331e-2, 1.7343061984449139715e-2, 8.3492773819228268398e-3,
    4.0773561979443393787e-3, 2.0083928260822144179e-3, 9.9457512781808533715e-4,
    4.941886041194645587e-4,  2.4608655330804829864e-4, 1.2271334757848914675e-4,
    6.1248135058704829259e-5, 3.0588236307020493552e-5, 1.5282259408651871733e-5,
    7.6371976378997622736e-6, 3.8172932649998398565e-6, 1.9082127165539389257e-6,
    9.5396203387279611315e-7, 4.7693298678780646312e-7, 2.3845050272773299e-7,
    1.1921992596531107307e-7, 5.9608189051259479612e-8, 2.9803503514652280186e-8,
    1.4901554828365041235e-8, 7.450711789835429492e-9,  3.7253340247884570548e-9,
    1.8626597235130490064e-9, 9.3132743241966818287e-10, 4.656629065033784073e-10,
    2.328311833676505492e-10, 1.1641550172700519776e-10, 5.8207720879027008892e-11,
    2.9103850444970996869e-11, 1.4551921891041984236e-11, 7.2759598350574810145e-12,
    3.6379795473786511902e-12, 1.8189896503070659476e-12, 9.0949478402638892825e-13,
    4.5474737830421540268e-13, 2.2737368458246525152e-13, 1.1368684076802278493e-13,
    5.6843419876275856093e-14, 2.8421709768893018555e-14,
};

// ln Gamma(2 + z) for |z| <= 1/2:
//   z (1 - gamma) + sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k
// The zeta(k) - 1 coefficients decay like 2^-k, so at |z| = 1/2 the tail
// after k = 45 is below 1e-27.
double log_gamma_two_plus(double z) {
  double poly = 0.0;
  for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
    const int k = static_cast<int>(i) + 2;
    const double c = ((k % 2 == 0) ? 1.0 : -1.0) * kZetaMinusOne[i] / k;
    poly = poly * z + c;
  }
  return z * (1.0 - kEulerGamma) + poly * z * z;
}

// Remainder of the Stirling series, sum B_2k / (2k (2k-1) x^(2k-1)).
double stirling_tail(double x) {
  constexpr std::array<double, 8> c = {
      1.0 / 12.0,   -1.0 / 360.0,         1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0, -691.0 / 360360.0,    1.0 / 156.0,  -3617.0 / 122400.0,
  };
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * inv2 + c[i];
  return acc * inv;
}

constexpr double kStirlingThreshold = 12.0;

double log_gamma_stirling(double x) {
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + stirling_tail(x);
}

// sin(pi x) with exact argument reduction.
double sin_pi(double x) {
  const double n = std::nearbyint(x);
  const double f = x - n;
  const double s = std::sin(std::numbers::pi * f);
  return (std::fmod(n, 2.0) == 0.0) ? s : -s;
}

constexpr std::uint64_t kDirectProductLimit = 64;

}  // namespace

SignedLog SignedLog::from_value(double v) noexcept {
  if (v == 0.0) return zero();
  return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
}

double SignedLog::value() const noexcept {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

SignedLog& SignedLog::operator*=(const SignedLog& rhs) noexcept {
  if (sign == 0 || rhs.sign == 0) {
    *this = zero();
  } else {
    log_abs += rhs.log_abs;
    sign *= rhs.sign;
  }
  return *this;
}

SignedLog& SignedLog::operator/=(const SignedLog& rhs) noexcept {
  // Division by zero is left to the caller; the result would be meaningless.
  log_abs -= rhs.log_abs;
  sign *= rhs.sign;
  return *this;
}

SignedLog operator*(SignedLog lhs, const SignedLog& rhs) noexcept { return lhs *= rhs; }
SignedLog operator/(SignedLog lhs, const SignedLog& rhs) noexcept { return lhs /= rhs; }

bool is_nonpositive_integer(double x) noexcept {
  return x <= 0.0 && std::isfinite(x) && std::nearbyint(x) == x;
}

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw Error(ErrorCode::Domain, "log_gamma requires finite x > 0, got " + std::to_string(x));
  }
  if (x < 0.5) return log_gamma_two_plus(x) - std::log1p(x) - std::log(x);
  if (x < 1.5) {
    const double z = x - 1.0;
    return log_gamma_two_plus(z) - std::log1p(z);
  }
  if (x <= 2.5) return log_gamma_two_plus(x - 2.0);
  if (x < kStirlingThreshold) {
    // Step down into [1.5, 2.5]; the product stays well below 1e8.
    double prod = 1.0;
    double y = x;
    while (y > 2.5) {
      y -= 1.0;
      prod *= y;
    }
    return log_gamma_two_plus(y - 2.0) + std::log(prod);
  }
  return log_gamma_stirling(x);
}

double log_gamma_difference(double x, double d) {
  if (!(x > 0.0) || !(x + d > 0.0) || !std::isfinite(x) || !std::isfinite(d)) {
    throw Error(ErrorCode::Domain, "log_gamma_difference requires x > 0 and x + d > 0");
  }
  if (d == 0.0) return 0.0;
  // Shift both arguments above the Stirling threshold:
  //   lnG(x+d) - lnG(x) = [lnG(x+d+n) - lnG(x+n)] - sum_k log1p(d / (x+k)).
  double correction = 0.0;
  double lo = x;
  while (std::fmin(lo, lo + d) < kStirlingThreshold) {
    correction += std::log1p(d / lo);
    lo += 1.0;
  }
  const double hi = lo + d;
  const double main = (lo - 0.5) * std::log1p(d / lo) + d * std::log(hi) - d;
  return main + (stirling_tail(hi) - stirling_tail(lo)) - correction;
}

double reciprocal_gamma(double x) {
  if (std::isnan(x)) return x;
  if (x == std::numeric_limits<double>::infinity()) return 0.0;
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.0) {
    // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    const double s = sin_pi(x);
    const double lg = log_gamma(1.0 - x);
    const double mag = std::exp(lg + std::log(std::fabs(s) / std::numbers::pi));
    return s < 0.0 ? -mag : mag;
  }
  if (x < 1.0) return x * reciprocal_gamma(x + 1.0);
  if (x <= 2.0) return std::exp(-log_gamma(x));
  if (x < 40.0) {
    double prod = 1.0;
    double y = x;
    while (y > 2.0) {
      y -= 1.0;
      prod *= y;
    }
    return std::exp(-log_gamma(y)) / prod;
  }
  return std::exp(-log_gamma(x));
}

SignedLog pochhammer_signed_log(double a, std::uint64_t r) {
  if (r == 0) return {0.0, 1};
  if (is_nonpositive_integer(a) && -a < static_cast<double>(r)) return SignedLog::zero();

  if (r <= kDirectProductLimit) {
    SignedLog acc{0.0, 1};
    for (std::uint64_t k = 0; k < r; ++k) {
      const double f = a + static_cast<double>(k);
      acc.log_abs += std::log(std::fabs(f));
      if (f < 0.0) acc.sign = -acc.sign;
    }
    return acc;
  }

  const double rd = static_cast<double>(r);
  if (a > 0.0) return {log_gamma_difference(a, rd), 1};

  // a < 0, non-integer: the first k0 factors are negative.
  //   prod_{k<k0} |a+k| = Gamma(1-a) / Gamma(1-a-k0),  1-a-k0 in (0, 1]
  const double k0 = std::fmin(rd, std::ceil(-a));
  SignedLog out{log_gamma_difference(1.0 - a - k0, k0), std::fmod(k0, 2.0) == 0.0 ? 1 : -1};
  if (k0 < rd) out.log_abs += log_gamma_difference(a + k0, rd - k0);
  return out;
}

double pochhammer(double a, std::uint64_t r) {
  if (r == 0) return 1.0;
  if (is_nonpositive_integer(a) && -a < static_cast<double>(r)) return 0.0;
  double out;
  if (r <= kDirectProductLimit) {
    out = 1.0;
    for (std::uint64_t k = 0; k < r; ++k) out *= a + static_cast<double>(k);
  } else {
    out = pochhammer_signed_log(a, r).value();
  }
  if (!std::isfinite(out)) {
    throw Error(ErrorCode::Overflow,
                "pochhammer(" + std::to_string(a) + ", " + std::to_string(r) + ") out of range");
  }
  return out;
}

}  // namespace hmlf
