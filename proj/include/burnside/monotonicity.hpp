#pragma once

// Finite-difference evidence for complete monotonicity (CM), logarithmic
// complete monotonicity (LCM) and the sign/monotonicity regions of
// Lambda_{p,q} and Phi_{p,q}.

#include "burnside/gamma_ref.hpp"
#include "burnside/numeric.hpp"

#include "json.hpp"

#include <functional>
#include <string>
#include <vector>

namespace burnside {

using RealFunction = std::function<Real(const Real&)>;

struct Grid {
  Real start;
  Real step;
  unsigned count = 0;
  Real open_left_margin = 0;

  Real point(unsigned i) const { return start + step * i; }
  /// Last abscissa touched by differences of order `max_order`.
  Real last_point(unsigned max_order) const { return point(count - 1 + max_order); }

  /// start = domain.lo + margin. Throws std::invalid_argument if the domain
  /// has no finite left end.
  static Grid for_domain(const Interval& domain, const Real& step, unsigned count,
                         const Real& margin = Real("0.01"));
  /// Throws std::invalid_argument unless step > 0, count > 0 and every
  /// point up to last_point(max_order) lies in the domain with the margin.
  void validate(const Interval& domain, unsigned max_order) const;
};

struct MonotonicityOptions {
  /// epsilon = 10^-digits in the tolerance model; 25 <= digits <= 50.
  unsigned digits = 40;
  /// tolerance(n) = safety * 2^n * epsilon * max|f| on the stencil.
  double safety = 8;
  /// A failure below -counterexample_factor * tolerance is flagged.
  double counterexample_factor = 10;
  EvalPrecision precision{};
};

inline constexpr unsigned kMaxOrder = 10;

/// rows[k][i] = Delta_h^k f(x_i) for k <= n, i < grid.count, by the binomial
/// alternating sum; scale[i] = max |f| on the stencil of x_i.
struct DifferenceTable {
  std::vector<std::vector<Real>> rows;
  std::vector<Real> stencil_max;
};

DifferenceTable finite_difference_table(const RealFunction& f, const Grid& grid, unsigned n);
/// Same, from precomputed samples f(x_0), ..., f(x_{count-1+n}).
DifferenceTable finite_difference_table(const std::vector<Real>& samples, unsigned count,
                                        unsigned n);

Real difference_tolerance(unsigned order, const Real& stencil_max,
                          const MonotonicityOptions& options = {});

struct OrderVerdict {
  unsigned order = 0;
  /// min over the grid of (-1)^n Delta^n (sign f), or of (-1)^n Delta^n ln f.
  Real minimum;
  Real argmin;
  Real tolerance;
  bool pass = false;
  bool counterexample_candidate = false;
};

enum class EvidenceKind { cm, lcm };

struct CMReport {
  std::string function;
  EvidenceKind kind = EvidenceKind::cm;
  int sign = 1;
  Grid grid;
  unsigned max_order = 0;
  std::vector<OrderVerdict> orders;

  bool pass() const;
  bool counterexample_candidate() const;
  /// Lowest failing order, or -1.
  int first_failure() const;
};

/// (-1)^n Delta^n (sign * f) >= -tolerance(n) for n = 0..max_order.
/// Throws std::invalid_argument for max_order > 10 or sign not +-1.
CMReport check_cm(const std::string& name, const RealFunction& f, const Grid& grid,
                  unsigned max_order, int sign = 1, const MonotonicityOptions& options = {});

/// LCM evidence for a positive f: (-1)^k Delta^k ln f >= -tolerance(k),
/// k = 1..max_order. Throws std::domain_error on a nonpositive value.
CMReport check_lcm(const std::string& name, const RealFunction& f, const Grid& grid,
                   unsigned max_order, const MonotonicityOptions& options = {});
/// Same, given ln f directly (no rounding from exp/log).
CMReport check_lcm_log(const std::string& name, const RealFunction& log_f, const Grid& grid,
                       unsigned max_order, const MonotonicityOptions& options = {});

nlohmann::ordered_json to_json(const CMReport& report);
/// Rows "order,min,argmin,tolerance,pass".
std::string to_csv(const CMReport& report);

// ---------------------------------------------------------------- claims

/// A (logarithmically) completely monotonic claim with its stated domain.
struct MonotonicityClaim {
  std::string key;
  std::string statement;
  EvidenceKind kind;
  Interval domain;
  /// The CM function itself (kind cm) or ln of the LCM function (kind lcm).
  RealFunction function;
};

/// theorem1-item1 .. theorem1-item8 (CM).
const std::vector<MonotonicityClaim>& theorem1_claims();
/// theorem2-item1 .. theorem2-item8 (LCM, given by logarithms).
const std::vector<MonotonicityClaim>& theorem2_claims();
/// Throws std::out_of_range.
const MonotonicityClaim& claim(const std::string& key);

/// The stated claim evaluated on the default grid: start = domain.lo + 0.01,
/// count 64.
CMReport check_claim(const MonotonicityClaim& claim, const Real& step, unsigned max_order,
                     const MonotonicityOptions& options = {});

// ---------------------------------------------------------------- regions

enum class RegionFamily { Lambda, Phi };
enum class RegionClaim { positive_decreasing, negative_increasing, unclassified };

const char* to_string(RegionFamily family);
const char* to_string(RegionClaim claim);

struct RegionClassification {
  /// "1a", "1b", "1c", "2a", "2b" for Lambda; "3a".."3d", "4a", "4b" for Phi;
  /// empty when unclassified. The first matching subregion wins.
  std::string region;
  RegionClaim claim = RegionClaim::unclassified;
};

/// Throws std::invalid_argument for p <= 0.
RegionClassification classify_region(RegionFamily family, const Real& p, const Real& q);

struct RegionReport {
  RegionFamily family;
  Real p, q;
  RegionClassification classification;
  Grid grid;
  Real min_value, max_value;
  /// max over the grid of Delta f (decreasing claims) or -Delta f.
  Real worst_monotone_step;
  bool sign_ok = false;
  bool monotone_ok = false;
  /// sign_ok && monotone_ok; false when unclassified (nothing is asserted).
  bool pass = false;
};

RegionReport check_region_claims(RegionFamily family, const Real& p, const Real& q,
                                 const Grid& grid, const MonotonicityOptions& options = {});

/// One (p, q) representative per subregion, in region-label order.
struct RegionRepresentative {
  RegionFamily family;
  std::string region;
  Real p, q;
};
const std::vector<RegionRepresentative>& region_representatives();

nlohmann::ordered_json to_json(const RegionReport& report);

// ---------------------------------------------------------------- H_lambda

inline const std::vector<double> kHLambdaScan = {0, 0.25, 0.5, 0.75, 1, 2};

/// LCM evidence for H_lambda on (0, inf) for each lambda in kHLambdaScan.
/// Verdicts are reported, never asserted.
std::vector<CMReport> h_lambda_scan(const Real& step, unsigned max_order,
                                    const MonotonicityOptions& options = {});

}  // namespace burnside
