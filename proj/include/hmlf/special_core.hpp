#pragma once

#include <cstdint>
#include <limits>

namespace hmlf {

/// A real number stored as sign and natural log of its magnitude.
///
/// Zero is represented as `{-inf, 0}`; every other value has sign +1 or -1.
struct SignedLog {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static SignedLog zero() noexcept { return {}; }
  static SignedLog from_value(double v) noexcept;

  bool is_zero() const noexcept { return sign == 0; }

  /// sign * exp(log_abs); overflows to +-inf when the magnitude is not
  /// representable.
  double value() const noexcept;

  SignedLog& operator*=(const SignedLog& rhs) noexcept;
  SignedLog& operator/=(const SignedLog& rhs) noexcept;
};

SignedLog operator*(SignedLog lhs, const SignedLog& rhs) noexcept;
SignedLog operator/(SignedLog lhs, const SignedLog& rhs) noexcept;

/// ln Gamma(x) for x > 0. Throws Error(Domain) for x <= 0 or non-finite x.
double log_gamma(double x);

/// 1/Gamma(x) for any finite x. Exactly zero at the poles 0, -1, -2, ...
double reciprocal_gamma(double x);

/// ln Gamma(x + d) - ln Gamma(x) for x > 0, x + d > 0, evaluated without
/// cancellation between the two large logarithms.
double log_gamma_difference(double x, double d);

/// Rising factorial (a)_r. Throws Error(Overflow) when the result is not
/// representable; use pochhammer_signed_log for large r.
double pochhammer(double a, std::uint64_t r);

SignedLog pochhammer_signed_log(double a, std::uint64_t r);

/// True when x is 0, -1, -2, ...
bool is_nonpositive_integer(double x) noexcept;

}  // namespace hmlf
