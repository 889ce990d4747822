#include "burnside/gamma_ref.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace burnside {

namespace {

constexpr unsigned kMaxBernoulli = 240;

std::vector<Rational> compute_bernoulli() {
  std::vector<Rational> B(kMaxBernoulli + 1);
  // binomial row C(m+1, k), updated in place
  std::vector<BigInt> row = {1, 1};
  B[0] = 1;
  for (unsigned m = 1; m <= kMaxBernoulli; ++m) {
    // row currently holds C(m, .); advance to C(m+1, .)
    std::vector<BigInt> next(m + 2);
    next[0] = 1;
    next[m + 1] = 1;
    for (unsigned k = 1; k <= m; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
    if (m > 1 && m % 2 == 1) {
      B[m] = 0;
      continue;
    }
    Rational acc = 0;
    for (unsigned k = 0; k < m; ++k)
      if (B[k] != 0) acc += Rational(row[k]) * B[k];
    B[m] = -acc / Rational(m + 1);
  }
  return B;
}

Real ten_to_minus(unsigned digits) { return pow(Real(10), -static_cast<int>(digits)); }

/// Shift point so that the smallest Stirling term is below 10^-digits.
Real shift_point(const EvalPrecision& prec) {
  prec.validate();
  const double needed = prec.working_digits * std::log(10.0) / (2 * M_PI) + 2.0;
  return Real(std::max(prec.shift_threshold, needed));
}

struct Shift {
  Real z;             // x + n >= threshold
  unsigned n = 0;
};

Shift shift_up(const Real& x, const Real& threshold) {
  Shift s{x, 0};
  while (s.z < threshold) {
    s.z += 1;
    ++s.n;
  }
  return s;
}

/// sum_{k>=1} B_{2k} / (2k (2k-1) z^{2k-1}) with the first omitted term as
/// error bound; valid for z at or beyond the shift point.
BoundedValue binet_series(const Real& z, const EvalPrecision& prec) {
  const Real target = ten_to_minus(prec.working_digits);
  const Real z2 = z * z;
  Real zpow = z;  // z^{2k-1}
  Real sum = 0;
  Real last = 0;
  for (unsigned k = 1; 2 * k <= kMaxBernoulli; ++k) {
    const Real term = to_real(bernoulli(2 * k)) / (Real(2 * k) * Real(2 * k - 1) * zpow);
    if (abs(term) < target) return {sum, abs(term)};
    if (k > 1 && abs(term) > abs(last)) return {sum, abs(last)};
    sum += term;
    last = term;
    zpow *= z2;
  }
  throw std::runtime_error("binet_series: Bernoulli table exhausted");
}

void require_positive(const Real& x, const char* what) {
  if (!(x > 0)) throw std::domain_error(std::string(what) + ": argument must be > 0");
}

Real log1p_real(const Real& x) { return boost::multiprecision::log1p(x); }

}  // namespace

void EvalPrecision::validate() const {
  if (working_digits < 25 || working_digits > kRealDigits)
    throw std::invalid_argument("EvalPrecision: working_digits must be in [25, 50]");
  if (!(shift_threshold >= 10))
    throw std::invalid_argument("EvalPrecision: shift_threshold must be >= 10");
}

const Rational& bernoulli(unsigned n) {
  static const std::vector<Rational> table = compute_bernoulli();
  if (n > kMaxBernoulli) throw std::out_of_range("bernoulli: index too large");
  return table[n];
}

const Real& log_sqrt_two_pi() {
  static const Real value = log(2 * boost::math::constants::pi<Real>()) / 2;
  return value;
}

BoundedValue log_gamma_bounded(const Real& x, const EvalPrecision& prec) {
  require_positive(x, "log_gamma");
  const Shift s = shift_up(x, shift_point(prec));
  const BoundedValue tail = binet_series(s.z, prec);
  Real value = (s.z - Real(0.5)) * log(s.z) - s.z + log_sqrt_two_pi() + tail.value;
  if (s.n > 0) {
    Real product = 1;
    for (unsigned k = 0; k < s.n; ++k) product *= x + k;
    value -= log(product);
  }
  const Real rounding = 16 * std::numeric_limits<Real>::epsilon() *
                        (abs(value) + s.z * log(s.z));
  return {value, tail.error_bound + rounding};
}

Real log_gamma(const Real& x, const EvalPrecision& prec) {
  return log_gamma_bounded(x, prec).value;
}

double log_gamma(double x) { return to_double(log_gamma(Real(x))); }

std::pair<Real, Real> digamma_trigamma(const Real& x, const EvalPrecision& prec) {
  require_positive(x, "digamma_trigamma");
  const Shift s = shift_up(x, shift_point(prec));
  const Real target = ten_to_minus(prec.working_digits);
  const Real& z = s.z;
  const Real z2 = z * z;
  Real psi = log(z) - 1 / (2 * z);
  Real psi1 = 1 / z + 1 / (2 * z2);
  Real zpow = z2;  // z^{2k}
  for (unsigned k = 1; 2 * k <= kMaxBernoulli; ++k) {
    const Real b = to_real(bernoulli(2 * k));
    const Real t0 = b / (Real(2 * k) * zpow);
    const Real t1 = b / (zpow * z);
    if (abs(t0) < target && abs(t1) < target) break;
    psi -= t0;
    psi1 += t1;
    zpow *= z2;
  }
  for (unsigned k = 0; k < s.n; ++k) {
    const Real y = x + k;
    psi -= 1 / y;
    psi1 += 1 / (y * y);
  }
  return {psi, psi1};
}

Real digamma(const Real& x, const EvalPrecision& prec) {
  return digamma_trigamma(x, prec).first;
}

Real trigamma(const Real& x, const EvalPrecision& prec) {
  return digamma_trigamma(x, prec).second;
}

// ------------------------------------------------------------- remainders

namespace {

Real theta_impl(const Real& x, const EvalPrecision& prec) {
  require_positive(x, "theta");
  if (x >= shift_point(prec)) return binet_series(x, prec).value;
  return log_gamma(x, prec) - (x - Real(0.5)) * log(x) + x - log_sqrt_two_pi();
}

Real burnside_impl(const Real& x, const EvalPrecision& prec) {
  if (!(x > Real(-0.5))) throw std::domain_error("b: argument must be > -1/2");
  const Real h = x + Real(0.5);
  return log_gamma(x + 1, prec) - log_sqrt_two_pi() - h * log(h) + h;
}

}  // namespace

Real remainder(Remainder which, const Real& x, const EvalPrecision& prec) {
  switch (which) {
    case Remainder::theta:
      return theta_impl(x, prec);
    case Remainder::vartheta:
      return 12 * x * theta_impl(x, prec);
    case Remainder::b:
      return burnside_impl(x, prec);
    case Remainder::w:
      return 12 * x * burnside_impl(x, prec);
  }
  throw std::logic_error("remainder: unknown kind");
}

double remainder(Remainder which, double x) { return to_double(remainder(which, Real(x))); }

std::optional<Remainder> remainder_from_name(const std::string& name) {
  if (name == "theta") return Remainder::theta;
  if (name == "vartheta") return Remainder::vartheta;
  if (name == "b") return Remainder::b;
  if (name == "w") return Remainder::w;
  return std::nullopt;
}

const char* to_string(Remainder which) {
  switch (which) {
    case Remainder::theta:
      return "theta";
    case Remainder::vartheta:
      return "vartheta";
    case Remainder::b:
      return "b";
    case Remainder::w:
      return "w";
  }
  return "?";
}

// ------------------------------------------------------------- intervals

bool Interval::contains(const Real& x) const {
  if (!lo_infinite && (lo_open ? !(x > lo) : !(x >= lo))) return false;
  if (!hi_infinite && (hi_open ? !(x < hi) : !(x <= hi))) return false;
  return true;
}

std::string Interval::str() const {
  std::ostringstream os;
  os << (lo_open ? "(" : "[") << (lo_infinite ? "-inf" : to_string(lo, 6)) << ", "
     << (hi_infinite ? "inf" : to_string(hi, 6)) << (hi_open ? ")" : "]");
  return os.str();
}

// ------------------------------------------------------------- catalog

namespace {

Interval positive_axis() { return Interval::open_right_unbounded(0); }
Interval burnside_axis() { return Interval::open_right_unbounded(Real(-0.5)); }
Interval shifted_axis(const Real& alpha) {
  return Interval::open_right_unbounded(alpha < 0 ? Real(-alpha) : Real(0));
}

}  // namespace

CatalogFunction CatalogFunction::theta() { return {CatalogName::theta, 0, 0, 1, 0, 1, positive_axis()}; }
CatalogFunction CatalogFunction::vartheta() {
  return {CatalogName::vartheta, 0, 0, 1, 0, 1, positive_axis()};
}
CatalogFunction CatalogFunction::b() { return {CatalogName::b, 0, 0, 1, 0, 1, burnside_axis()}; }
CatalogFunction CatalogFunction::w() { return {CatalogName::w, 0, 0, 1, 0, 1, burnside_axis()}; }
CatalogFunction CatalogFunction::H() {
  return {CatalogName::H, 0, Real(0.5), 1, 0, 1, positive_axis()};
}
CatalogFunction CatalogFunction::H_lambda(const Real& lambda) {
  return {CatalogName::H_lambda, 0, lambda, 1, 0, 1, positive_axis()};
}
CatalogFunction CatalogFunction::F_alpha(const Real& alpha) {
  return {CatalogName::F_alpha, alpha, 0, 1, 0, 1, shifted_axis(alpha)};
}
CatalogFunction CatalogFunction::g_alpha(const Real& alpha) {
  return {CatalogName::g_alpha, alpha, 0, 1, 0, 1, shifted_axis(alpha)};
}
CatalogFunction CatalogFunction::BigF() { return {CatalogName::BigF, 0, 0, 1, 0, 1, positive_axis()}; }
CatalogFunction CatalogFunction::BigG() { return {CatalogName::BigG, 0, 0, 1, 0, 1, positive_axis()}; }
CatalogFunction CatalogFunction::Lambda(const Real& p, const Real& q) {
  return {CatalogName::Lambda_pq, 0, 0, p, q, 1, positive_axis()};
}
CatalogFunction CatalogFunction::Phi(const Real& p, const Real& q) {
  return {CatalogName::Phi_pq, 0, 0, p, q, 1, positive_axis()};
}
CatalogFunction CatalogFunction::f_pqr(const Real& p, const Real& q, const Real& r) {
  return {CatalogName::f_pqr, 0, 0, p, q, r, positive_axis()};
}
CatalogFunction CatalogFunction::vartheta_hat() {
  return {CatalogName::vartheta_hat, 0, 0, 1, 0, 1, positive_axis()};
}

std::string CatalogFunction::label() const {
  std::ostringstream os;
  os << to_string(name);
  switch (name) {
    case CatalogName::H_lambda:
      os << "[lambda=" << to_string(lambda, 6) << "]";
      break;
    case CatalogName::F_alpha:
    case CatalogName::g_alpha:
      os << "[alpha=" << to_string(alpha, 6) << "]";
      break;
    case CatalogName::Lambda_pq:
    case CatalogName::Phi_pq:
      os << "[p=" << to_string(p, 6) << ",q=" << to_string(q, 6) << "]";
      break;
    case CatalogName::f_pqr:
      os << "[p=" << to_string(p, 6) << ",q=" << to_string(q, 6)
         << ",r=" << to_string(r, 6) << "]";
      break;
    default:
      break;
  }
  return os.str();
}

namespace {

struct NameEntry {
  CatalogName name;
  const char* text;
};

constexpr NameEntry kNames[] = {
    {CatalogName::theta, "theta"},       {CatalogName::vartheta, "vartheta"},
    {CatalogName::b, "b"},               {CatalogName::w, "w"},
    {CatalogName::H, "H"},               {CatalogName::H_lambda, "H_lambda"},
    {CatalogName::F_alpha, "F_alpha"},   {CatalogName::g_alpha, "g_alpha"},
    {CatalogName::BigF, "BigF"},         {CatalogName::BigG, "BigG"},
    {CatalogName::Lambda_pq, "Lambda"},  {CatalogName::Phi_pq, "Phi"},
    {CatalogName::f_pqr, "f_pqr"},       {CatalogName::vartheta_hat, "vartheta_hat"},
};

}  // namespace

std::optional<CatalogName> catalog_name_from_string(const std::string& name) {
  for (const auto& e : kNames)
    if (name == e.text) return e.name;
  if (name == "Lambda_pq") return CatalogName::Lambda_pq;
  if (name == "Phi_pq") return CatalogName::Phi_pq;
  return std::nullopt;
}

const char* to_string(CatalogName name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.text;
  return "?";
}

Real lambda_gr(const Real& x, const EvalPrecision& prec) {
  require_positive(x, "lambda");
  return (log(x) - 1 / (2 * x) - digamma(x, prec)) / 2;
}

Real phi_magnus(const Real& x, const EvalPrecision& prec) {
  require_positive(x, "phi");
  return (digamma(x + Real(0.5), prec) - log(x)) / 2;
}

Real catalog_eval(const CatalogFunction& f, const Real& x, const EvalPrecision& prec) {
  if (!f.domain.contains(x))
    throw std::domain_error(f.label() + ": x = " + to_string(x, 10) + " outside " +
                            f.domain.str());
  switch (f.name) {
    case CatalogName::theta:
      return remainder(Remainder::theta, x, prec);
    case CatalogName::vartheta:
      return remainder(Remainder::vartheta, x, prec);
    case CatalogName::b:
      return remainder(Remainder::b, x, prec);
    case CatalogName::w:
      return remainder(Remainder::w, x, prec);
    case CatalogName::H:
    case CatalogName::H_lambda: {
      if (f.lambda < 0) throw std::invalid_argument("H_lambda: lambda must be >= 0");
      const Real h = x + Real(0.5);
      return exp(x + 1 / (24 * (x + f.lambda)) + log_gamma(x + 1, prec) - h * log(h));
    }
    case CatalogName::F_alpha:
      return exp(remainder(Remainder::theta, x, prec) - trigamma(x + f.alpha, prec) / 12);
    case CatalogName::g_alpha: {
      const Real s = x + f.alpha;
      return exp(x + log_gamma(x + 1, prec) - s * log(s));
    }
    case CatalogName::BigF:
      return 1 + 4 * x - 8 * x * (x + Real(0.5)) * log1p_real(1 / (2 * x));
    case CatalogName::BigG:
      return (x + Real(0.5)) * log1p_real(1 / (2 * x)) - Real(0.5);
    case CatalogName::Lambda_pq:
      if (!(f.p > 0)) throw std::invalid_argument("Lambda: p must be > 0");
      return lambda_gr(f.p * x, prec) - f.q * lambda_gr(x, prec);
    case CatalogName::Phi_pq:
      if (!(f.p > 0)) throw std::invalid_argument("Phi: p must be > 0");
      return phi_magnus(f.p * x, prec) - f.q * phi_magnus(x, prec);
    case CatalogName::f_pqr:
      if (!(f.p > 0)) throw std::invalid_argument("f_pqr: p must be > 0");
      if (f.r == 0) throw std::invalid_argument("f_pqr: r must be nonzero");
      return f.r * (remainder(Remainder::theta, f.p * x, prec) -
                    f.q * remainder(Remainder::theta, x, prec));
    case CatalogName::vartheta_hat:
      return 12 * x * (log_gamma(x + 1, prec) - x * log(x) + x - log_sqrt_two_pi());
  }
  throw std::logic_error("catalog_eval: unknown function");
}

Real vartheta_minimum(const EvalPrecision& prec) {
  auto equation = [&](const Real& beta) {
    const Real y = beta + 1;
    return log_gamma(y, prec) + beta * digamma(y, prec) - log_sqrt_two_pi() -
           2 * beta * log(beta) + beta;
  };
  Real lo = Real(0.1), hi = Real(0.9);
  Real f_lo = equation(lo), f_hi = equation(hi);
  if (f_lo * f_hi > 0)
    throw std::runtime_error("vartheta_minimum: [0.1, 0.9] does not bracket a root");
  for (int i = 0; i < 45; ++i) {
    const Real mid = (lo + hi) / 2;
    const Real f_mid = equation(mid);
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  Real x0 = lo, x1 = hi, f0 = f_lo, f1 = f_hi;
  const Real stop = ten_to_minus(prec.working_digits);
  for (int i = 0; i < 40 && f1 != f0; ++i) {
    const Real x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = equation(x1);
    if (abs(x1 - x0) < stop) break;
  }
  return x1;
}

}  // namespace burnside
