#pragma once

// Reference values of ln Gamma, psi, psi' and the remainder/catalog functions,
// computed from the Stirling series only (never from integral representations).

#include "burnside/numeric.hpp"

#include <optional>
#include <string>
#include <utility>

namespace burnside {

struct EvalPrecision {
  /// Digits the Stirling-series truncation targets; 25 <= digits <= 50.
  unsigned working_digits = 45;
  /// Recurrence shifts the argument to at least this value.
  double shift_threshold = 20.0;

  /// Throws std::invalid_argument on an out-of-range configuration.
  void validate() const;
};

struct BoundedValue {
  Real value;
  /// Bound on the truncation error of the asymptotic series.
  Real error_bound;
};

/// Exact Bernoulli number B_n (B_1 = -1/2).
const Rational& bernoulli(unsigned n);

BoundedValue log_gamma_bounded(const Real& x, const EvalPrecision& prec = {});
Real log_gamma(const Real& x, const EvalPrecision& prec = {});
double log_gamma(double x);

/// (psi(x), psi'(x)).
std::pair<Real, Real> digamma_trigamma(const Real& x, const EvalPrecision& prec = {});
Real digamma(const Real& x, const EvalPrecision& prec = {});
Real trigamma(const Real& x, const EvalPrecision& prec = {});

/// Binet remainder theta, its variant 12x theta, Burnside remainder b and its
/// variant w = 12x b.
enum class Remainder { theta, vartheta, b, w };

Real remainder(Remainder which, const Real& x, const EvalPrecision& prec = {});
double remainder(Remainder which, double x);

std::optional<Remainder> remainder_from_name(const std::string& name);
const char* to_string(Remainder which);

/// Interval with independently open/closed ends; infinite ends are open.
struct Interval {
  Real lo;
  Real hi;
  bool lo_open = true;
  bool hi_open = true;
  bool lo_infinite = false;
  bool hi_infinite = true;

  static Interval open_right_unbounded(const Real& lo) { return {lo, 0, true, true, false, true}; }
  bool contains(const Real& x) const;
  std::string str() const;
};

enum class CatalogName {
  theta,
  vartheta,
  b,
  w,
  H,
  H_lambda,
  F_alpha,
  g_alpha,
  BigF,
  BigG,
  Lambda_pq,
  Phi_pq,
  f_pqr,
  vartheta_hat,
};

/// A named function of x with its parameters and domain.
struct CatalogFunction {
  CatalogName name;
  Real alpha = 0;
  Real lambda = 0;
  Real p = 1;
  Real q = 0;
  Real r = 1;
  Interval domain;

  static CatalogFunction theta();
  static CatalogFunction vartheta();
  static CatalogFunction b();
  static CatalogFunction w();
  /// H = H_{1/2}.
  static CatalogFunction H();
  static CatalogFunction H_lambda(const Real& lambda);
  static CatalogFunction F_alpha(const Real& alpha);
  static CatalogFunction g_alpha(const Real& alpha);
  static CatalogFunction BigF();
  static CatalogFunction BigG();
  static CatalogFunction Lambda(const Real& p, const Real& q);
  static CatalogFunction Phi(const Real& p, const Real& q);
  static CatalogFunction f_pqr(const Real& p, const Real& q, const Real& r);
  /// 12x [ln Gamma(x+1) - x ln x + x - ln sqrt(2 pi)], the function whose
  /// stationary point is beta (see vartheta_minimum()).
  static CatalogFunction vartheta_hat();

  std::string label() const;
};

std::optional<CatalogName> catalog_name_from_string(const std::string& name);
const char* to_string(CatalogName name);

/// Throws std::domain_error outside f.domain and std::invalid_argument on bad
/// parameters (p <= 0, r == 0, lambda < 0).
Real catalog_eval(const CatalogFunction& f, const Real& x,
                  const EvalPrecision& prec = {});

/// lambda(x) and phi(x) through their psi identities.
Real lambda_gr(const Real& x, const EvalPrecision& prec = {});
Real phi_magnus(const Real& x, const EvalPrecision& prec = {});

/// Root of ln Gamma(b+1) + b psi(b+1) - ln sqrt(2 pi) - 2 b ln b + b = 0,
/// bracketed in [0.1, 0.9]; bisection then secant polish.
Real vartheta_minimum(const EvalPrecision& prec = {});

/// ln sqrt(2 pi)
const Real& log_sqrt_two_pi();

}  // namespace burnside
