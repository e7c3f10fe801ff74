#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hmlf/special_core.hpp"

namespace hmlf {

/// One member of the hypergeometric Mittag-Leffler family
///
///   f(u) = sum_r  prod_i (upper_i)_r / prod_j (lower_j)_r * u^r / Gamma(alpha r + beta)
struct HmlfSpec {
  std::vector<double> upper;
  std::vector<double> lower;
  double alpha = 1.0;
  double beta = 1.0;

  std::size_t p() const noexcept { return upper.size(); }
  std::size_t q() const noexcept { return lower.size(); }

  bool operator==(const HmlfSpec&) const = default;
};

/// An HmlfSpec that passed validate_spec. Immutable.
class ValidSpec {
 public:
  const HmlfSpec& spec() const noexcept { return spec_; }
  const HmlfSpec* operator->() const noexcept { return &spec_; }

  /// Index of the last nonzero term when some upper parameter is a
  /// nonpositive integer; the series is then a polynomial of this degree.
  std::optional<std::uint64_t> terminating_degree() const noexcept { return degree_; }

 private:
  friend ValidSpec validate_spec(HmlfSpec spec);
  ValidSpec(HmlfSpec spec, std::optional<std::uint64_t> degree)
      : spec_(std::move(spec)), degree_(degree) {}

  HmlfSpec spec_;
  std::optional<std::uint64_t> degree_;
};

/// Throws Error(InvalidAlphaBeta) unless alpha, beta > 0, and
/// Error(LowerParamPole) when a nonpositive-integer lower parameter is hit
/// before the series terminates.
ValidSpec validate_spec(HmlfSpec spec);

enum class ClassicalRule { AllFinite, UnitDisk, DivergesNonzero };
enum class EffectiveKind { Entire, FiniteRadius, FormalOnly };

struct EffectiveRule {
  EffectiveKind kind = EffectiveKind::Entire;
  /// alpha^alpha for FiniteRadius, +inf for Entire, 0 for FormalOnly.
  double radius = 0.0;
};

/// classical_rule follows (p, q) alone. effective_rule follows the sign of
/// p - q - alpha: Stirling's formula puts the r-th term at roughly
/// (r!)^(p-q-alpha) alpha^(-alpha r) |u|^r.
struct ConvergenceClass {
  ClassicalRule classical_rule = ClassicalRule::AllFinite;
  EffectiveRule effective_rule;
};

ConvergenceClass classify(const ValidSpec& spec) noexcept;

/// True when |u| lies strictly inside the region where the series converges.
bool inside_convergence_domain(const ValidSpec& spec, double u) noexcept;

enum class EvalStatus { Converged, Terminated, TruncatedAsymptotic, DivergenceDetected };

struct EvalResult {
  double value = 0.0;
  std::uint64_t terms_used = 0;
  double est_abs_error = 0.0;
  EvalStatus status = EvalStatus::Converged;
  /// Sum of |t_r| over the terms used; the scale rounding error is measured against.
  double abs_term_sum = 0.0;
};

struct EvalOptions {
  double tol = 1e-13;
  std::uint64_t max_terms = 10000;
  bool allow_asymptotic = false;
};

/// r-th series coefficient (everything but u^r), computed in the log domain.
/// Throws Error(Overflow) when the magnitude is not representable.
double coefficient(const ValidSpec& spec, std::uint64_t r);
SignedLog coefficient_signed_log(const ValidSpec& spec, std::uint64_t r);

/// t_{r+1} / t_r of the series at u.
double term_ratio(const ValidSpec& spec, std::uint64_t r, double u);

/// Sums the series at u.
///
/// Converging series stop once two consecutive terms with r >= 8 fall below
/// tol * max(1, |S|) and the geometric tail bound agrees. Series with a
/// nonpositive-integer upper parameter stop at their exact length.
///
/// Outside the convergence domain the call throws Error(DivergenceRejected)
/// unless options.allow_asymptotic is set, in which case the sum is cut at
/// the smallest term and that term's magnitude is reported as the error.
///
/// Throws Error(NonConvergence) when max_terms is exhausted.
EvalResult eval(const ValidSpec& spec, double u, const EvalOptions& options = {});
EvalResult eval(const HmlfSpec& spec, double u, const EvalOptions& options = {});

/// Shorthand for eval(...).value.
double eval_value(const HmlfSpec& spec, double u, const EvalOptions& options = {});

std::string_view to_string(EvalStatus status) noexcept;
std::string_view to_string(ClassicalRule rule) noexcept;
std::string_view to_string(EffectiveKind kind) noexcept;

}  // namespace hmlf
