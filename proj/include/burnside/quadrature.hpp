#pragma once

// Semi-infinite integrals  int_0^inf K(t) w(x, t) dt  for the Laplace-type
// representations of theta, b and the Theorem 1 functions, and for the
// Gradshteyn-Ryzhik / Magnus integrals lambda(x), phi(x).

#include "burnside/expoly.hpp"
#include "burnside/gamma_ref.hpp"
#include "burnside/numeric.hpp"

#include "json.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

enum class KernelFamily {
  binet_theta,
  burnside_b,
  entry46,
  lambda_gr,
  phi_magnus,
  expoly_over_sinhpow,
};

const char* to_string(KernelFamily family);
std::optional<KernelFamily> kernel_family_from_string(const std::string& name);

/// K(t) = prefactor * N(t) e^{-shift t} / (t^t_power (e^{sinh_rate t} - 1)^sinh_power)
/// integrated against e^{-(weight_scale x + weight_shift) t}.
struct SinhPowParams {
  ExpPoly numerator;
  unsigned t_power = 0;
  unsigned sinh_power = 0;
  unsigned sinh_rate = 2;
  unsigned shift = 0;
  Rational prefactor = 1;
  Rational weight_scale = 1;
  Rational weight_shift = 0;
};

/// Thrown by tail_bound() when the envelope does not yet apply at T; the
/// caller should enlarge T.
class EnvelopeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

class Kernel {
 public:
  /// The fixed families (everything but expoly_over_sinhpow).
  static Kernel standard(KernelFamily family);
  /// Throws std::invalid_argument if K has a pole at t = 0.
  static Kernel sinhpow(std::string name, SinhPowParams params);

  KernelFamily family() const { return family_; }
  const std::string& name() const { return name_; }
  /// Laplace families carry their SinhPowParams; lambda_gr / phi_magnus do not.
  bool is_laplace() const { return family_ != KernelFamily::lambda_gr && family_ != KernelFamily::phi_magnus; }
  const SinhPowParams& params() const { return params_; }

  const Real& near_zero_cutoff() const { return t0_; }
  /// Maclaurin coefficients of K used below the cutoff.
  const std::vector<Real>& near_zero_series() const { return series_; }
  /// Exact coefficients (Laplace families only).
  const std::vector<Rational>& near_zero_series_exact() const { return exact_series_; }

  /// K(t) by the closed formula, whatever t.
  Real direct_value(const Real& t) const;
  /// Series for t < cutoff, closed formula otherwise. Throws for t <= 0.
  Real value(const Real& t) const;
  /// value(t) times the x-dependent factor of the integrand.
  Real integrand(const Real& x, const Real& t) const;

  /// Integrals converge for x > domain_lower().
  Real domain_lower() const;

 private:
  Kernel() = default;
  void build_series();

  KernelFamily family_ = KernelFamily::expoly_over_sinhpow;
  std::string name_;
  SinhPowParams params_;
  Real t0_ = Real(1) / 32;
  std::vector<Real> series_;
  std::vector<Rational> exact_series_;
};

/// Number of near-zero series terms.
inline constexpr unsigned kSeriesTerms = 12;

struct QuadratureResult {
  Real value;
  Real error_estimate;
  Real tail_truncation;
  /// Right end of the integrated range.
  Real cutoff;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct QuadratureOptions {
  std::size_t max_evaluations = 600000;
  /// First truncation point tried; doubled until the tail is small enough.
  double initial_cutoff = 16;
};

/// Throws std::domain_error if x <= kernel.domain_lower() (or x <= 0 for
/// lambda_gr / phi_magnus) and std::invalid_argument if tol <= 0. When the
/// evaluation budget runs out the best value is returned with converged =
/// false.
QuadratureResult integrate_semiinfinite(const Kernel& kernel, const Real& x, const Real& tol,
                                        const QuadratureOptions& options = {});

/// Upper bound on |int_T^inf integrand dt|, nonincreasing in T. Throws
/// EnvelopeError if T < 1 or the bound does not yet apply at T, and
/// std::domain_error if the integral diverges at x.
Real tail_bound(const Kernel& kernel, const Real& x, const Real& T);

/// x^2 ln(1 + 1/x) - x + 1/2, the closed form of the entry46 integral.
Real entry46_closed_form(const Real& x);

/// A stated integral representation: lhs(x) = int kernel for x in domain.
struct Representation {
  std::string name;
  std::string statement;
  Kernel kernel;
  std::function<Real(const Real&)> lhs;
  Interval domain;
};

/// theorem1-item1 .. theorem1-item8.
const std::vector<Representation>& theorem1_representations();
/// theorem1-item1..8 plus "binet" and "entry46".
const Representation& representation(const std::string& name);

/// Manifest: {"kernels": [{"name": .., "family": .., ...}]}. Laplace families
/// other than expoly_over_sinhpow need only name and family; the generic
/// family takes numerator (expoly grammar), t_power, sinh_power, sinh_rate,
/// shift, prefactor, weight_scale, weight_shift (rationals as strings).
/// Throws std::invalid_argument on malformed entries.
std::vector<Kernel> load_kernel_manifest(const nlohmann::json& manifest);
nlohmann::ordered_json to_json(const Kernel& kernel);

std::string csv_header();
std::string csv_row(const Kernel& kernel, const Real& x, const QuadratureResult& result);

}  // namespace burnside
