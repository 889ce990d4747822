#include "burnside/quadrature.hpp"

#include "burnside/certificate_functions.hpp"
#include "burnside/expoly_parser.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <sstream>

namespace burnside {

namespace {

struct FamilyName {
  KernelFamily family;
  const char* text;
};

constexpr FamilyName kFamilies[] = {
    {KernelFamily::binet_theta, "binet_theta"},
    {KernelFamily::burnside_b, "burnside_b"},
    {KernelFamily::entry46, "entry46"},
    {KernelFamily::lambda_gr, "lambda_gr"},
    {KernelFamily::phi_magnus, "phi_magnus"},
    {KernelFamily::expoly_over_sinhpow, "expoly_over_sinhpow"},
};

using Series = std::vector<Rational>;

Series multiply(const Series& a, const Series& b, std::size_t n) {
  Series out(n);
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series inverse(const Series& a, std::size_t n) {
  Series out(n);
  out[0] = 1 / a[0];
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= m && j < a.size(); ++j) acc += a[j] * out[m - j];
    out[m] = -acc / a[0];
  }
  return out;
}

/// Maclaurin series of N(t) e^{-s t}; exponents k - s may be negative.
Series shifted_taylor(const ExpPoly& numerator, unsigned shift, std::size_t n) {
  Series inv_fact(n);
  inv_fact[0] = 1;
  for (std::size_t m = 1; m < n; ++m) inv_fact[m] = inv_fact[m - 1] / m;
  Series out(n);
  for (const auto& [k, p] : numerator.terms()) {
    const long j = static_cast<long>(k) - static_cast<long>(shift);
    Series e(n);
    Rational jp = 1;
    for (std::size_t m = 0; m < n; ++m) {
      e[m] = jp * inv_fact[m];
      jp *= j;
    }
    Series poly(p.coefficients().begin(), p.coefficients().end());
    const Series prod = multiply(poly, e, n);
    for (std::size_t m = 0; m < n; ++m) out[m] += prod[m];
  }
  return out;
}

Real horner(const std::vector<Real>& c, const Real& t) {
  Real acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Real rel_gap(const Real& a, const Real& b) {
  const Real scale = std::max(abs(a), abs(b));
  return scale == 0 ? Real(0) : abs(a - b) / scale;
}

SinhPowParams laplace_params(KernelFamily family) {
  SinhPowParams p;
  switch (family) {
    case KernelFamily::binet_theta:
      // (1/(e^t - 1) - 1/t + 1/2) / t
      p.numerator = parse_expoly("t*E^t + t - 2*E^t + 2");
      p.t_power = 2;
      p.sinh_power = 1;
      p.sinh_rate = 1;
      p.prefactor = make_rational(1, 2);
      p.weight_scale = 1;
      p.weight_shift = 0;
      break;
    case KernelFamily::burnside_b:
      // (1 - e^t/(2t) + 1/(e^{2t} - 1)) / t against e^{-2(x+1)t}
      p.numerator = parse_expoly("-E^(3t) + 2*t*E^(2t) + E^t");
      p.t_power = 2;
      p.sinh_power = 1;
      p.sinh_rate = 2;
      p.prefactor = make_rational(1, 2);
      p.weight_scale = 2;
      p.weight_shift = 2;
      break;
    case KernelFamily::entry46:
      // (2 - (t^2 + 2t + 2) e^{-t}) / t^3
      p.numerator = parse_expoly("2*E^t - t^2 - 2*t - 2");
      p.shift = 1;
      p.t_power = 3;
      p.sinh_power = 0;
      p.weight_scale = 1;
      p.weight_shift = 0;
      break;
    default:
      throw std::invalid_argument("not a fixed Laplace family");
  }
  return p;
}

const Real& two_pi() {
  static const Real v = 2 * pi_real();
  return v;
}

}  // namespace

const char* to_string(KernelFamily family) {
  for (const auto& f : kFamilies)
    if (f.family == family) return f.text;
  return "?";
}

std::optional<KernelFamily> kernel_family_from_string(const std::string& name) {
  for (const auto& f : kFamilies)
    if (name == f.text) return f.family;
  return std::nullopt;
}

// ---------------------------------------------------------------- Kernel

Kernel Kernel::standard(KernelFamily family) {
  Kernel k;
  k.family_ = family;
  k.name_ = to_string(family);
  switch (family) {
    case KernelFamily::lambda_gr:
    case KernelFamily::phi_magnus:
      break;
    case KernelFamily::expoly_over_sinhpow:
      throw std::invalid_argument("Kernel::standard: expoly_over_sinhpow needs parameters");
    default:
      k.params_ = laplace_params(family);
  }
  k.build_series();
  return k;
}

Kernel Kernel::sinhpow(std::string name, SinhPowParams params) {
  if (params.sinh_power > 0 && params.sinh_rate == 0)
    throw std::invalid_argument("sinhpow: sinh_rate must be positive");
  if (params.weight_scale <= 0)
    throw std::invalid_argument("sinhpow: weight_scale must be positive");
  if (params.numerator.is_zero()) throw std::invalid_argument("sinhpow: zero numerator");
  Kernel k;
  k.family_ = KernelFamily::expoly_over_sinhpow;
  k.name_ = std::move(name);
  k.params_ = std::move(params);
  k.build_series();
  return k;
}

void Kernel::build_series() {
  series_.clear();
  exact_series_.clear();
  if (family_ == KernelFamily::lambda_gr || family_ == KernelFamily::phi_magnus) {
    // t/(e^{ct} - 1) = sum B_n c^{n-1} t^n / n!;  t/(e^{ct} + 1) uses (1 - 2^n) B_n
    const bool plus = family_ == KernelFamily::phi_magnus;
    const Real c = plus ? pi_real() : two_pi();
    Real fact = 1;
    for (unsigned n = 0; n < kSeriesTerms; ++n) {
      if (n > 0) fact *= n;
      Real coef = to_real(bernoulli(n)) * pow(c, static_cast<int>(n) - 1) / fact;
      if (plus) coef *= 1 - pow(Real(2), static_cast<int>(n));
      series_.push_back(coef);
    }
  } else {
    const SinhPowParams& p = params_;
    const std::size_t order = p.t_power + p.sinh_power;
    const std::size_t n = order + kSeriesTerms;
    const Series num = shifted_taylor(p.numerator, p.shift, n);
    for (std::size_t i = 0; i < order; ++i)
      if (num[i] != 0)
        throw std::invalid_argument("kernel " + name_ + " has a pole at t = 0 (order " +
                                    std::to_string(order - i) + ")");
    Series head(num.begin() + order, num.end());
    if (p.sinh_power > 0) {
      // t / (e^{ct} - 1) = 1 / sum c^{m+1} t^m / (m+1)!
      Series u(kSeriesTerms);
      Rational cp = p.sinh_rate, fact = 1;
      for (unsigned m = 0; m < kSeriesTerms; ++m) {
        fact *= m + 1;
        u[m] = cp / fact;
        cp *= p.sinh_rate;
      }
      const Series v = inverse(u, kSeriesTerms);
      Series vb(kSeriesTerms);
      vb[0] = 1;
      for (unsigned i = 0; i < p.sinh_power; ++i) vb = multiply(vb, v, kSeriesTerms);
      head = multiply(head, vb, kSeriesTerms);
    }
    for (auto& c : head) c *= p.prefactor;
    exact_series_ = head;
    for (const auto& c : head) series_.push_back(to_real(c));
  }
  const Real probe = 2 * t0_;
  if (rel_gap(horner(series_, probe), direct_value(probe)) > Real("1e-13"))
    throw std::logic_error("kernel " + name_ + ": near-zero series disagrees with direct value");
}

Real Kernel::direct_value(const Real& t) const {
  switch (family_) {
    case KernelFamily::lambda_gr:
      return t / expm1(two_pi() * t);
    case KernelFamily::phi_magnus:
      return t / (exp(pi_real() * t) + 1);
    default:
      break;
  }
  const SinhPowParams& p = params_;
  Real v = eval(p.numerator, t) * to_real(p.prefactor);
  if (p.shift) v *= exp(-Real(p.shift) * t);
  if (p.t_power) v /= pow(t, static_cast<int>(p.t_power));
  if (p.sinh_power) v /= pow(expm1(Real(p.sinh_rate) * t), static_cast<int>(p.sinh_power));
  return v;
}

Real Kernel::value(const Real& t) const {
  if (!(t > 0)) throw std::domain_error("kernel_value: t must be > 0");
  return t < t0_ ? horner(series_, t) : direct_value(t);
}

Real Kernel::integrand(const Real& x, const Real& t) const {
  const Real k = value(t);
  switch (family_) {
    case KernelFamily::lambda_gr:
      return k / (t * t + x * x);
    case KernelFamily::phi_magnus:
      return k / (t * t + 4 * x * x);
    default:
      return k * exp(-(to_real(params_.weight_scale) * x + to_real(params_.weight_shift)) * t);
  }
}

Real Kernel::domain_lower() const {
  if (!is_laplace()) return 0;
  // largest growth rate of K at infinity
  const SinhPowParams& p = params_;
  long growth = std::numeric_limits<long>::min();
  for (const auto& [k, poly] : p.numerator.terms())
    growth = std::max(growth, static_cast<long>(k) - static_cast<long>(p.shift) -
                                  static_cast<long>(p.sinh_power * p.sinh_rate));
  return (Real(growth) - to_real(p.weight_shift)) / to_real(p.weight_scale);
}

// ---------------------------------------------------------------- tails

Real tail_bound(const Kernel& kernel, const Real& x, const Real& T) {
  if (!(x > kernel.domain_lower()))
    throw std::domain_error(kernel.name() + ": integral diverges at x = " + to_string(x, 10));
  if (T < 1) throw EnvelopeError("tail_bound: T must be >= 1");
  if (!kernel.is_laplace()) {
    // t/((t^2 + x^2)(e^{ct} -/+ 1)) <= e^{-ct} / (t (1 - e^{-cT}))
    const bool plus = kernel.family() == KernelFamily::phi_magnus;
    const Real c = plus ? pi_real() : two_pi();
    Real bound = exp(-c * T) / (c * T);
    if (!plus) bound /= -expm1(-c * T);
    return bound;
  }
  const SinhPowParams& p = kernel.params();
  const Real gamma = to_real(p.weight_scale) * x + to_real(p.weight_shift);
  Real total = 0;
  for (const auto& [k, poly] : p.numerator.terms()) {
    Rational c_k = 0;
    for (const auto& c : poly.coefficients()) c_k += abs(c);
    const long m = poly.degree() - static_cast<long>(p.t_power);
    const long rate = static_cast<long>(k) - static_cast<long>(p.shift) -
                      static_cast<long>(p.sinh_power * p.sinh_rate);
    const Real mu = gamma - rate;
    Real piece = to_real(c_k) * pow(T, m) * exp(-mu * T);
    if (m <= 0) {
      piece /= mu;
    } else {
      // int_T^inf t^m e^{-mu t} <= T^m e^{-mu T} / (mu - m/T)
      const Real denom = mu - Real(m) / T;
      if (!(denom > 0))
        throw EnvelopeError("tail_bound: envelope not yet decreasing at T = " + to_string(T, 6));
      piece /= denom;
    }
    total += piece;
  }
  total *= abs(to_real(p.prefactor));
  if (p.sinh_power)
    total /= pow(-expm1(-Real(p.sinh_rate) * T), static_cast<int>(p.sinh_power));
  return total;
}

// ---------------------------------------------------------------- integration

namespace {

struct Panel {
  Real a, b, value, error;
};

struct Rule {
  std::vector<Real> nodes;     // Kronrod abscissae >= 0
  std::vector<Real> kronrod;   // weights for nodes
  std::vector<Real> gauss;     // Gauss weights at the even-index nodes
};

const Rule& gk15() {
  static const Rule rule = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    Rule r;
    const auto& xk = gauss_kronrod<Real, 15>::abscissa();
    const auto& wk = gauss_kronrod<Real, 15>::weights();
    const auto& xg = gauss<Real, 7>::abscissa();
    const auto& wg = gauss<Real, 7>::weights();
    r.nodes.assign(xk.begin(), xk.end());
    r.kronrod.assign(wk.begin(), wk.end());
    for (std::size_t i = 0; i < xg.size(); ++i) {
      if (abs(xg[i] - xk[2 * i]) > Real("1e-40"))
        throw std::logic_error("gk15: Gauss nodes are not the even Kronrod nodes");
      r.gauss.push_back(wg[i]);
    }
    return r;
  }();
  return rule;
}

template <class F>
Panel integrate_panel(const F& f, const Real& a, const Real& b, std::size_t& evals) {
  const Rule& rule = gk15();
  const Real mid = (a + b) / 2;
  const Real half = (b - a) / 2;
  Real k = 0, g = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    Real fx;
    if (i == 0) {
      fx = f(mid);
      ++evals;
    } else {
      const Real d = half * rule.nodes[i];
      fx = f(mid - d) + f(mid + d);
      evals += 2;
    }
    k += rule.kronrod[i] * fx;
    if (i % 2 == 0) g += rule.gauss[i / 2] * fx;
  }
  return {a, b, k * half, abs((k - g) * half)};
}

}  // namespace

QuadratureResult integrate_semiinfinite(const Kernel& kernel, const Real& x, const Real& tol,
                                        const QuadratureOptions& options) {
  if (!(tol > 0)) throw std::invalid_argument("integrate: tol must be > 0");
  if (!(x > kernel.domain_lower()))
    throw std::domain_error(kernel.name() + ": x = " + to_string(x, 10) +
                            " outside the domain of the representation");

  QuadratureResult out;
  Real T = options.initial_cutoff;
  for (;;) {
    try {
      out.tail_truncation = tail_bound(kernel, x, T);
      if (out.tail_truncation <= tol / 4) break;
    } catch (const EnvelopeError&) {
    }
    T *= 2;
    if (T > Real(1e7)) throw std::runtime_error("integrate: no usable truncation point");
  }
  out.cutoff = T;

  auto f = [&](const Real& t) { return kernel.integrand(x, t); };
  std::vector<Panel> panels;
  // geometric breakpoints resolve both fast (large x) and slow decay
  Real lo = 0, hi = Real(1) / 64;
  while (lo < T) {
    panels.push_back(integrate_panel(f, lo, std::min(hi, T), out.evaluations));
    lo = hi;
    hi *= 2;
  }

  const Real target = tol / 2;
  auto total_error = [&] {
    Real e = 0;
    for (const auto& p : panels) e += p.error;
    return e;
  };
  Real err = total_error();
  while (err > target && out.evaluations < options.max_evaluations) {
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& a, const Panel& b) { return a.error < b.error; });
    const Real a = worst->a, b = worst->b, m = (a + b) / 2;
    *worst = integrate_panel(f, a, m, out.evaluations);
    panels.push_back(integrate_panel(f, m, b, out.evaluations));
    err = total_error();
  }

  std::sort(panels.begin(), panels.end(), [](const Panel& a, const Panel& b) { return a.a < b.a; });
  out.value = 0;
  out.error_estimate = 0;
  for (const auto& p : panels) {
    out.value += p.value;
    out.error_estimate += p.error;
  }
  out.converged = out.error_estimate + out.tail_truncation <= tol;
  return out;
}

// ---------------------------------------------------------------- representations

Real entry46_closed_form(const Real& x) {
  if (!(x > 0)) throw std::domain_error("entry46: x must be > 0");
  return x * x * log1p(1 / x) - x + Real(0.5);
}

namespace {

Kernel theorem_kernel(const std::string& name, const std::string& fn, unsigned a, unsigned b,
                      const Rational& prefactor) {
  SinhPowParams p;
  p.numerator = certificate_function(fn);
  p.t_power = a;
  p.sinh_power = b;
  p.sinh_rate = 2;
  p.prefactor = prefactor;
  p.weight_scale = 2;
  p.weight_shift = 1;
  return Kernel::sinhpow(name, std::move(p));
}

Real b_of(const Real& x) { return remainder(Remainder::b, x); }

std::vector<Representation> build_representations() {
  const Interval half_line = Interval::open_right_unbounded(Real(-0.5));
  const Interval positive = Interval::open_right_unbounded(0);
  std::vector<Representation> r;
  r.push_back({"theorem1-item1", "b(x) = int (1 - e^t/(2t) + 1/(e^{2t}-1)) e^{-2(x+1)t}/t dt",
               Kernel::standard(KernelFamily::burnside_b), b_of, half_line});
  r.push_back({"theorem1-item2", "x b(x) + 1/24 = 1/4 int f1(t)/(t^3 (e^{2t}-1)^2) e^{-(2x+1)t} dt",
               theorem_kernel("theorem1-item2", "f1", 3, 2, make_rational(1, 4)),
               [](const Real& x) { return x * b_of(x) + Real(1) / 24; }, positive});
  r.push_back({"theorem1-item3",
               "1/6 - x/3 - 8x^2 b(x) = int f2(t)/(t^4 (e^{2t}-1)^3) e^{-(2x+1)t} dt",
               theorem_kernel("theorem1-item3", "f2", 4, 3, 1),
               [](const Real& x) { return Real(1) / 6 - x / 3 - 8 * x * x * b_of(x); }, positive});
  r.push_back({"theorem1-item4",
               "16x^3 b(x) + 2x^2/3 - x/3 + 23/180 = int f3(t)/(t^5 (e^{2t}-1)^4) e^{-(2x+1)t} dt",
               theorem_kernel("theorem1-item4", "f3", 5, 4, 1),
               [](const Real& x) {
                 return 16 * x * x * x * b_of(x) + 2 * x * x / 3 - x / 3 + Real(23) / 180;
               },
               positive});
  r.push_back({"theorem1-item5", "(2x+1) b(x) + 1/12 = int h1(t)/(t^3 (e^{2t}-1)^2) e^{-(2x+1)t} dt",
               theorem_kernel("theorem1-item5", "h1", 3, 2, 1),
               [](const Real& x) { return (2 * x + 1) * b_of(x) + Real(1) / 12; }, half_line});
  r.push_back({"theorem1-item6",
               "-(x+1) b(x) - 1/24 = 1/4 int h2(t)/(t^3 (e^{2t}-1)^2) e^{-(2x+1)t} dt",
               theorem_kernel("theorem1-item6", "h2", 3, 2, make_rational(1, 4)),
               [](const Real& x) { return -(x + 1) * b_of(x) - Real(1) / 24; }, half_line});
  r.push_back({"theorem1-item7",
               "-(x+1)^2 b(x) - x/24 - 1/16 = 1/8 int h3(t)/(t^4 (e^{2t}-1)^3) e^{-(2x+1)t} dt",
               theorem_kernel("theorem1-item7", "h3", 4, 3, make_rational(1, 8)),
               [](const Real& x) {
                 return -(x + 1) * (x + 1) * b_of(x) - x / 24 - Real(1) / 16;
               },
               half_line});
  r.push_back({"theorem1-item8",
               "-(x+1)^3 b(x) - x^2/24 - 5x/48 - 203/2880 = 1/16 int h4(t)/(t^5 (e^{2t}-1)^4) e^{-(2x+1)t} dt",
               theorem_kernel("theorem1-item8", "h4", 5, 4, make_rational(1, 16)),
               [](const Real& x) {
                 const Real y = x + 1;
                 return -y * y * y * b_of(x) - x * x / 24 - 5 * x / 48 - Real(203) / 2880;
               },
               half_line});
  return r;
}

}  // namespace

const std::vector<Representation>& theorem1_representations() {
  static const std::vector<Representation> table = build_representations();
  return table;
}

const Representation& representation(const std::string& name) {
  static const std::vector<Representation> extra = [] {
    std::vector<Representation> r;
    r.push_back({"binet", "theta(x) = int (1/(e^t-1) - 1/t + 1/2) e^{-xt}/t dt",
                 Kernel::standard(KernelFamily::binet_theta),
                 [](const Real& x) { return remainder(Remainder::theta, x); },
                 Interval::open_right_unbounded(0)});
    r.push_back({"entry46", "x^2 ln(1+1/x) - x + 1/2 = int (2 - (t^2+2t+2)e^{-t})/t^3 e^{-xt} dt",
                 Kernel::standard(KernelFamily::entry46), entry46_closed_form,
                 Interval::open_right_unbounded(0)});
    return r;
  }();
  for (const auto& r : theorem1_representations())
    if (r.name == name) return r;
  for (const auto& r : extra)
    if (r.name == name) return r;
  throw std::out_of_range("unknown representation: " + name);
}

// ---------------------------------------------------------------- manifest / csv

namespace {

Rational rational_field(const nlohmann::json& j, const char* key, const Rational& fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument(std::string("manifest: '") + key +
                              "' must be an integer or a rational string");
}

unsigned unsigned_field(const nlohmann::json& j, const char* key, unsigned fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw std::invalid_argument(std::string("manifest: '") + key +
                                "' must be a nonnegative integer");
  return v.get<unsigned>();
}

}  // namespace

std::vector<Kernel> load_kernel_manifest(const nlohmann::json& manifest) {
  if (!manifest.is_object() || !manifest.contains("kernels") || !manifest["kernels"].is_array())
    throw std::invalid_argument("manifest: expected an object with a 'kernels' array");
  std::vector<Kernel> out;
  for (const auto& entry : manifest["kernels"]) {
    if (!entry.is_object() || !entry.contains("family") || !entry["family"].is_string())
      throw std::invalid_argument("manifest: each kernel needs a 'family' string");
    const auto family = kernel_family_from_string(entry["family"].get<std::string>());
    if (!family)
      throw std::invalid_argument("manifest: unknown family '" +
                                  entry["family"].get<std::string>() + "'");
    std::string name = entry.value("name", std::string(to_string(*family)));
    if (*family != KernelFamily::expoly_over_sinhpow) {
      Kernel k = Kernel::standard(*family);
      out.push_back(std::move(k));
      continue;
    }
    if (!entry.contains("numerator") || !entry["numerator"].is_string())
      throw std::invalid_argument("manifest: '" + name + "' needs a numerator string");
    SinhPowParams p;
    p.numerator = parse_expoly(entry["numerator"].get<std::string>());
    p.t_power = unsigned_field(entry, "t_power", 0);
    p.sinh_power = unsigned_field(entry, "sinh_power", 0);
    p.sinh_rate = unsigned_field(entry, "sinh_rate", 2);
    p.shift = unsigned_field(entry, "shift", 0);
    p.prefactor = rational_field(entry, "prefactor", 1);
    p.weight_scale = rational_field(entry, "weight_scale", 1);
    p.weight_shift = rational_field(entry, "weight_shift", 0);
    out.push_back(Kernel::sinhpow(std::move(name), std::move(p)));
  }
  return out;
}

nlohmann::ordered_json to_json(const Kernel& kernel) {
  nlohmann::ordered_json j;
  j["name"] = kernel.name();
  j["family"] = to_string(kernel.family());
  if (kernel.is_laplace()) {
    const SinhPowParams& p = kernel.params();
    j["numerator"] = render(p.numerator);
    j["t_power"] = p.t_power;
    j["sinh_power"] = p.sinh_power;
    j["sinh_rate"] = p.sinh_rate;
    j["shift"] = p.shift;
    j["prefactor"] = to_string(p.prefactor);
    j["weight_scale"] = to_string(p.weight_scale);
    j["weight_shift"] = to_string(p.weight_shift);
  }
  return j;
}

std::string csv_header() { return "kernel,x,value,error_estimate,evaluations"; }

std::string csv_row(const Kernel& kernel, const Real& x, const QuadratureResult& result) {
  std::ostringstream os;
  os << kernel.name() << ',' << to_string(x, 17) << ',' << to_string(result.value, 20) << ','
     << to_string(result.error_estimate + result.tail_truncation, 6) << ','
     << result.evaluations;
  return os.str();
}

}  // namespace burnside
