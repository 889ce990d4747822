#pragma once

// Catalog of two-sided bounds for Gamma(x+1), grid verification, pairwise
// comparison of envelopes and the trigamma-corrected asymptotic series.

#include "burnside/expression.hpp"
#include "burnside/gamma_ref.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace burnside {

/// The bounded quantity. Every target is a positive multiple m_T(x) of the
/// Burnside ratio R(x) = e^{b(x)}, which is how bounds are normalized.
enum class BoundTarget {
  stirling_ratio,  ///< e^x Gamma(x+1) / (x^x sqrt(2 pi x))
  burnside_ratio,  ///< Gamma(x+1) / sqrt(2 pi) (e / (x+1/2))^{x+1/2}
  H,               ///< e^{x + 1/(24(x+1/2))} Gamma(x+1) / (x+1/2)^{x+1/2}
  gamma,           ///< Gamma(x+1)
  trigamma_ratio,  ///< stirling_ratio / exp(psi'(x+1/2)/12)
};

const char* to_string(BoundTarget target);
/// Throws std::invalid_argument.
BoundTarget bound_target_from_string(const std::string& name);

Real target_value(BoundTarget target, const Real& x, const EvalPrecision& prec = {});
/// ln m_T(x) = ln(target / R).
Real log_target_factor(BoundTarget target, const Real& x, const EvalPrecision& prec = {});

enum class BoundSide { lower, upper };
const char* to_string(BoundSide side);

struct ParameterRange {
  Real min;
  Real max;
  bool integer = false;
};

struct BoundSpec {
  std::string name;
  BoundTarget target = BoundTarget::burnside_ratio;
  std::optional<Expression> lower;
  std::optional<Expression> upper;
  Interval domain;
  bool lower_strict = true;
  bool upper_strict = true;
  /// Claimed at integer x only.
  bool integers_only = false;
  std::string description;
  std::map<std::string, Real> parameters;
  std::map<std::string, ParameterRange> parameter_ranges;

  /// Throws std::invalid_argument when no side is present, the domain is
  /// empty, a parameter is out of range or lower > upper at an interior
  /// point.
  void validate(const EvalPrecision& prec = {}) const;
  const std::optional<Expression>& side(BoundSide s) const {
    return s == BoundSide::lower ? lower : upper;
  }
  bool strict(BoundSide s) const { return s == BoundSide::lower ? lower_strict : upper_strict; }
};

struct BoundEvaluation {
  Real x;
  std::optional<Real> lower;
  Real target;
  std::optional<Real> upper;
  /// target - lower and upper - target.
  std::optional<Real> lower_margin;
  std::optional<Real> upper_margin;
};

/// Throws std::domain_error for x outside the domain.
BoundEvaluation evaluate_bound(const BoundSpec& spec, const Real& x,
                               const EvalPrecision& prec = {});
/// A side normalized to a bound for the Burnside ratio.
Real normalized_side(const BoundSpec& spec, BoundSide side, const Real& x,
                     const EvalPrecision& prec = {});

struct BoundVerifyOptions {
  /// Margins within budget = 10^-digits * max(|target|, 1) are undecided.
  unsigned digits = 35;
  EvalPrecision precision{};
};

struct Violation {
  Real x;
  BoundSide side;
  Real bound;
  Real target;
  Real margin;
  /// true: margin < -budget; false: a strict side is not resolved.
  bool fails = true;
};

std::vector<Violation> verify_bound_on_grid(const BoundSpec& spec, const std::vector<Real>& xs,
                                            const BoundVerifyOptions& options = {});

/// Smallest grid point from which the side holds at every later grid point,
/// or nothing when it fails at the last point.
std::optional<Real> empirical_threshold(const BoundSpec& spec, BoundSide side,
                                        const std::vector<Real>& xs,
                                        const BoundVerifyOptions& options = {});

// ------------------------------------------------------------------ catalog

/// Embedded catalog entries (see bound_catalog_json()):
///   trigamma-envelope, shifted-root, h-constants, trigamma-integer,
///   half-shift (k), stirling-k (k = 1..5), stirling-k-reversed (k >= 6),
///   remainder-envelope.
const nlohmann::ordered_json& bound_catalog_json();
/// Parses a manifest: an array of {name, target, lower?, upper?, domain:
/// {lo, lo_open, hi?, hi_open?}, strict: {lower, upper}, integers_only?,
/// description?, parameters?}. Throws std::invalid_argument.
std::vector<BoundSpec> load_bound_catalog(const nlohmann::ordered_json& manifest);
nlohmann::ordered_json to_json(const BoundSpec& spec);

/// Throws std::out_of_range for unknown names. Parameter overrides must name
/// existing parameters.
BoundSpec bound_spec(const std::string& name, const std::map<std::string, Real>& overrides = {});
std::vector<std::string> bound_names();

// ------------------------------------------------------------------ grids

/// lo + (hi - lo) i / n for i = 1..n (left end excluded).
std::vector<Real> linear_points(const Real& lo, const Real& hi, unsigned n);
/// n log-spaced points from lo to hi inclusive; 0 < lo < hi.
std::vector<Real> log_points(const Real& lo, const Real& hi, unsigned n);
std::vector<Real> integer_points(long first, long last);
/// The default 200-point verification grid of a catalog entry: integers 1..20
/// for integer claims, otherwise linear_points over (lo, lo + 50].
std::vector<Real> default_grid(const BoundSpec& spec);

// ------------------------------------------------------------------ compare

struct Crossover {
  /// Bracket of width <= 1e-6 around a sign change of the gap.
  Real lo, hi;
  Real gap_lo, gap_hi;
};

struct WinnerInterval {
  Real from, to;
  /// Name of the tighter spec, or "tie".
  std::string winner;
};

struct ComparisonResult {
  std::string spec_a, spec_b;
  BoundSide side;
  std::vector<Crossover> crossovers;
  std::vector<WinnerInterval> winners;
  /// Tighter spec at the right end of the range.
  std::string asymptotic_winner;
  /// Normalized side of a over that of b at the right end.
  Real right_ratio;
};

struct CompareOptions {
  unsigned scan_points = 512;
  Real bracket_width = Real("1e-6");
  EvalPrecision precision{};
};

/// Gap = normalized side of a minus that of b on [lo, hi] (log-spaced scan
/// when lo > 0, linear otherwise), sign changes refined by bisection.
/// Throws std::invalid_argument when a side is missing or the range leaves
/// either domain.
ComparisonResult compare_bounds(const BoundSpec& a, const BoundSpec& b, BoundSide side,
                                const Real& lo, const Real& hi, const CompareOptions& options = {});

nlohmann::ordered_json to_json(const ComparisonResult& result);

// ------------------------------------------------------------------ asymptotics

/// 1/240, -11/6720, 107/80640, -2911/1520640: coefficients of x^-3, ..., x^-9.
const std::vector<Rational>& asymptotic_coefficients();
/// psi'(x+1/2)/12 plus the first `terms` corrections, 0 <= terms <= 4.
Real asymptotic_exponent(const Real& x, unsigned terms, const EvalPrecision& prec = {});
/// ln of sqrt(2 pi) x^{x+1/2} e^{-x} e^{asymptotic_exponent}.
Real log_gamma1_asymptotic(const Real& x, unsigned terms, const EvalPrecision& prec = {});

/// ln of n^n e^-n sqrt(2 pi n) exp(psi'(n+a)/12).
Real log_factorial_shifted(const Real& n, const Real& a, const EvalPrecision& prec = {});
/// The shift among `shifts` minimizing |ln n! - log_factorial_shifted(n, a)|.
Real best_shift(unsigned n, const std::vector<Real>& shifts, const EvalPrecision& prec = {});

/// CSV rows "spec,x,lower,target,upper,margin" (margin = smaller side margin).
std::string bound_csv_header();
std::string bound_csv_row(const BoundSpec& spec, const BoundEvaluation& e);

}  // namespace burnside
