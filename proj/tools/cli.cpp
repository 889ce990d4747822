#include "cli.hpp"

#include "burnside/acceptance.hpp"
#include "burnside/am_certificate.hpp"
#include "burnside/bounds.hpp"
#include "burnside/certificate_functions.hpp"
#include "burnside/monotonicity.hpp"
#include "burnside/quadrature.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

namespace burnside::cli {

namespace {

struct Raw {
  std::string step, start, lo, hi;
  unsigned count = 0, max_order = 0;
  std::map<std::string, std::string> params;
};

void add_output_options(CLI::App* sub, Command& c) {
  sub->add_option("--format", c.format, "Output format: csv or json (default csv, json when --out ends in .json)")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Write the payload to this file instead of standard output");
  sub->add_flag("--no-header", c.no_header, "Omit the generation-time header line");
}

void add_param_options(CLI::App* sub, Raw& raw, std::initializer_list<const char*> names) {
  for (const char* n : names)
    sub->add_option(std::string("--") + n, raw.params[n], std::string("Parameter ") + n);
}

void add_grid_options(CLI::App* sub, Raw& raw) {
  sub->add_option("--step", raw.step, "Grid step (default 0.125)");
  sub->add_option("--count", raw.count, "Grid points (default 64)");
  sub->add_option("--start", raw.start, "First grid point (default: left end of the domain + 0.01)");
  sub->add_option("--max-order", raw.max_order, "Highest difference order, at most 10 (default 8 for CM, 6 for LCM)");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void check_real(const std::string& text, const std::string& what) {
  try {
    const Real v(text);
    (void)v;
  } catch (const std::exception&) {
    throw UsageError(what + ": not a number: '" + text + "'");
  }
}

void validate(Command& c, const Raw& raw) {
  for (const auto& [k, v] : raw.params)
    if (!v.empty()) {
      check_real(v, "--" + k);
      c.params[k] = v;
    }
  if (!raw.step.empty()) {
    check_real(raw.step, "--step");
    c.step = raw.step;
  }
  if (!raw.start.empty()) {
    check_real(raw.start, "--start");
    c.start = raw.start;
  }
  if (!raw.lo.empty()) {
    check_real(raw.lo, "--lo");
    c.lo = raw.lo;
  }
  if (!raw.hi.empty()) {
    check_real(raw.hi, "--hi");
    c.hi = raw.hi;
  }
  if (raw.count) c.count = raw.count;
  c.max_order = raw.max_order;
  for (const auto& x : c.xs) check_real(x, "--x");
  if (c.format.empty()) {
    const std::string ext = ".json";
    c.format = c.out.size() >= ext.size() && c.out.compare(c.out.size() - ext.size(), ext.size(), ext) == 0
                   ? "json"
                   : "csv";
  }

  const std::string& v = c.verb;
  if (v == "eval") {
    require(c.function.empty() != c.kernel.empty(), "eval needs exactly one of --function or --kernel");
    require(!c.xs.empty(), "eval needs --x");
  } else if (v == "certify-am") {
    require(c.all != !c.function.empty(), "certify-am needs --function or --all");
    require(c.max_depth >= 1, "--max-depth must be positive");
  } else if (v == "verify-cm" || v == "verify-lcm") {
    const bool cm = v == "verify-cm";
    require(!(cm ? c.theorem2 : c.theorem1),
            cm ? "--theorem2 claims are LCM claims; use verify-lcm" : "--theorem1 claims are CM claims; use verify-cm");
    const bool theorem = c.theorem1 || c.theorem2;
    const int selectors = theorem + !c.claim.empty() + !c.function.empty();
    require(selectors == 1, v + " needs exactly one of --claim, --function, " +
                                (cm ? "--theorem1" : "--theorem2"));
    if (theorem) require(c.all != (c.item != 0), "--theorem1/--theorem2 need --all or --item N");
    require(c.item <= 8, "--item must be 1..8");
    require(c.digits >= 25 && c.digits <= 50, "--digits must be in 25..50");
    require(c.max_order <= kMaxOrder, "--max-order must be at most 10");
    require(c.sign == 1 || c.sign == -1, "--sign must be 1 or -1");
    require(!c.count || *c.count >= 1, "--count must be positive");
  } else if (v == "regions") {
    require(c.all != !c.family.empty(), "regions needs --family with --p and --q, or --all");
    if (!c.all) require(c.params.count("p") && c.params.count("q"), "regions needs --p and --q");
  } else if (v == "bounds") {
    require(c.all != !c.specs.empty(), "bounds needs --spec or --all");
  } else if (v == "compare") {
    require(c.specs.size() == 2, "compare needs two --spec options");
  }
}

std::string timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string num(const Real& x) { return to_string(x, 20); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Real param(const Command& c, const std::string& name, const Real& fallback) {
  auto it = c.params.find(name);
  return it == c.params.end() ? fallback : Real(it->second);
}

CatalogFunction catalog_function(const Command& c) {
  const auto name = catalog_name_from_string(c.function);
  if (!name) throw std::invalid_argument("unknown function '" + c.function + "'");
  switch (*name) {
    case CatalogName::theta: return CatalogFunction::theta();
    case CatalogName::vartheta: return CatalogFunction::vartheta();
    case CatalogName::b: return CatalogFunction::b();
    case CatalogName::w: return CatalogFunction::w();
    case CatalogName::H: return CatalogFunction::H();
    case CatalogName::H_lambda: return CatalogFunction::H_lambda(param(c, "lambda", Real(0.5)));
    case CatalogName::F_alpha: return CatalogFunction::F_alpha(param(c, "alpha", Real(0.5)));
    case CatalogName::g_alpha: return CatalogFunction::g_alpha(param(c, "alpha", Real(1)));
    case CatalogName::BigF: return CatalogFunction::BigF();
    case CatalogName::BigG: return CatalogFunction::BigG();
    case CatalogName::Lambda_pq: return CatalogFunction::Lambda(param(c, "p", 1), param(c, "q", 0));
    case CatalogName::Phi_pq: return CatalogFunction::Phi(param(c, "p", 1), param(c, "q", 0));
    case CatalogName::f_pqr:
      return CatalogFunction::f_pqr(param(c, "p", 1), param(c, "q", 0), param(c, "r", 1));
    case CatalogName::vartheta_hat: return CatalogFunction::vartheta_hat();
  }
  throw std::logic_error("bad catalog name");
}

Kernel kernel_by_name(const std::string& name) {
  if (auto f = kernel_family_from_string(name)) return Kernel::standard(*f);
  return representation(name).kernel;
}

/// "name" or "name:k=2,m=3"
BoundSpec spec_ref(const std::string& ref, const Command& c) {
  const auto colon = ref.find(':');
  const std::string name = ref.substr(0, colon);
  std::map<std::string, Real> overrides;
  if (colon != std::string::npos) {
    std::stringstream ss(ref.substr(colon + 1));
    std::string kv;
    while (std::getline(ss, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad parameter '" + kv + "' in " + ref);
      overrides[kv.substr(0, eq)] = Real(kv.substr(eq + 1));
    }
  }
  BoundSpec base = bound_spec(name);
  if (auto it = c.params.find("k"); it != c.params.end() && base.parameters.count("k") &&
                                    !overrides.count("k"))
    overrides["k"] = Real(it->second);
  return bound_spec(name, overrides);
}

void emit_csv_header(const Command& c, std::ostream& os) {
  if (!c.no_header) os << "# burnside " << c.verb << " generated " << timestamp() << "\n";
}

void finish_json(const Command& c, nlohmann::ordered_json& j, std::ostream& os) {
  if (!c.no_header) j["generated"] = timestamp();
  os << j.dump(2) << "\n";
}

// ---------------------------------------------------------------- verbs

int do_eval(const Command& c, std::ostream& os) {
  int code = kExitOk;
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  if (!c.function.empty()) {
    const CatalogFunction f = catalog_function(c);
    j["function"] = f.label();
    auto& rows = j["values"] = nlohmann::ordered_json::array();
    if (c.format == "csv") {
      emit_csv_header(c, os);
      os << "function,x,value\n";
    }
    for (const auto& xs : c.xs) {
      const Real x(xs);
      const Real v = catalog_eval(f, x);
      if (c.format == "csv")
        os << f.label() << "," << xs << "," << num(v) << "\n";
      else
        rows.push_back({{"x", xs}, {"value", num(v)}});
    }
  } else {
    const Kernel k = kernel_by_name(c.kernel);
    j["kernel"] = c.kernel;
    auto& rows = j["results"] = nlohmann::ordered_json::array();
    if (c.format == "csv") {
      emit_csv_header(c, os);
      os << csv_header() << "\n";
    }
    for (const auto& xs : c.xs) {
      const QuadratureResult r = integrate_semiinfinite(k, Real(xs), Real(c.tol));
      if (!r.converged) code = kExitCheckFailed;
      if (c.format == "csv")
        os << csv_row(k, Real(xs), r) << "\n";
      else
        rows.push_back({{"x", xs},
                        {"value", num(r.value)},
                        {"error_estimate", to_string(r.error_estimate, 6)},
                        {"evaluations", r.evaluations},
                        {"converged", r.converged}});
    }
  }
  if (c.format == "json") finish_json(c, j, os);
  return code;
}

int do_certify(const Command& c, std::ostream& os, std::ostream& err) {
  std::vector<std::string> names;
  if (c.all)
    for (const auto& nf : certificate_functions()) names.push_back(nf.name);
  else
    names.push_back(c.function);
  int code = kExitOk;
  nlohmann::ordered_json docs = nlohmann::ordered_json::array();
  std::ostringstream rows;
  for (const auto& name : names) {
    const AMResult r = certify_absolutely_monotonic(certificate_function(name), c.max_depth);
    if (const auto* cert = std::get_if<AMCertificate>(&r)) {
      auto doc = to_json(*cert);
      docs.push_back({{"function", name}, {"certified", true}, {"certificate", doc}});
      std::string limits;
      for (const auto& l : cert->limits()) limits += (limits.empty() ? "" : ";") + to_string(l);
      rows << name << ",true," << cert->depth() << "," << limits << "\n";
    } else {
      const auto& f = std::get<AMFailure>(r);
      err << name << ": " << f.message << "\n";
      docs.push_back({{"function", name}, {"certified", false}, {"failure", to_json(f)}});
      rows << name << ",false," << f.depth << ",\n";
      code = kExitCertification;
    }
  }
  if (c.format == "csv") {
    emit_csv_header(c, os);
    os << "function,certified,depth,limits\n" << rows.str();
  } else {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["results"] = docs;
    finish_json(c, j, os);
  }
  return code;
}

int do_verify(const Command& c, std::ostream& os) {
  const bool cm = c.verb == "verify-cm";
  const unsigned order = c.max_order ? c.max_order : (cm ? 8 : 6);
  const Real step(c.step);
  const unsigned count = c.count.value_or(64);
  MonotonicityOptions opt;
  opt.digits = c.digits;

  std::vector<MonotonicityClaim> claims;
  if (c.theorem1 || c.theorem2) {
    const auto& all = c.theorem1 ? theorem1_claims() : theorem2_claims();
    for (const auto& cl : all)
      if (c.all || cl.key == (c.theorem1 ? "theorem1-item" : "theorem2-item") + std::to_string(c.item))
        claims.push_back(cl);
  } else if (!c.claim.empty()) {
    const MonotonicityClaim& cl = claim(c.claim);
    if ((cl.kind == EvidenceKind::cm) != cm)
      throw UsageError(c.claim + (cm ? " is an LCM claim; use verify-lcm" : " is a CM claim; use verify-cm"));
    claims.push_back(cl);
  }

  auto grid_for = [&](const Interval& domain) {
    Grid g = Grid::for_domain(domain, step, count);
    if (c.start) g.start = Real(*c.start);
    return g;
  };

  std::vector<std::pair<std::string, CMReport>> reports;
  for (const auto& cl : claims) {
    const Grid g = grid_for(cl.domain);
    reports.emplace_back(cl.key, cl.kind == EvidenceKind::cm
                                     ? check_cm(cl.key, cl.function, g, order, 1, opt)
                                     : check_lcm_log(cl.key, cl.function, g, order, opt));
  }
  if (!c.function.empty()) {
    const CatalogFunction f = catalog_function(c);
    const Grid g = grid_for(f.domain);
    std::string label = f.label();
    if (cm) {
      reports.emplace_back(label, check_cm(label, [&](const Real& x) { return catalog_eval(f, x); }, g,
                                           order, c.sign, opt));
    } else {
      const int s = c.reciprocal ? -1 : 1;
      if (c.reciprocal) label = "1/" + label;
      reports.emplace_back(label, check_lcm(label, [&](const Real& x) {
        const Real v = catalog_eval(f, x);
        return s > 0 ? v : 1 / v;
      }, g, order, opt));
    }
  }

  bool pass = true;
  for (const auto& [key, r] : reports) pass = pass && r.pass();
  if (c.format == "csv") {
    emit_csv_header(c, os);
    os << "claim,kind,step,count,max_order,pass,first_failure,counterexample_candidate\n";
    for (const auto& [key, r] : reports)
      os << key << "," << (r.kind == EvidenceKind::cm ? "cm" : "lcm") << "," << c.step << ","
         << r.grid.count << "," << r.max_order << "," << (r.pass() ? "true" : "false") << ","
         << r.first_failure() << "," << (r.counterexample_candidate() ? "true" : "false") << "\n";
  } else {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    auto& arr = j["reports"] = nlohmann::ordered_json::array();
    for (const auto& [key, r] : reports) arr.push_back(to_json(r));
    j["pass"] = pass;
    finish_json(c, j, os);
  }
  return pass ? kExitOk : kExitCheckFailed;
}

int do_regions(const Command& c, std::ostream& os) {
  const Real lo(c.lo.value_or("0.1")), hi(c.hi.value_or("20"));
  const unsigned count = c.count.value_or(200);
  if (count < 2 || !(hi > lo)) throw std::invalid_argument("regions needs --lo < --hi and --count >= 2");
  const Grid g{lo, (hi - lo) / (count - 1), count};
  std::vector<RegionReport> reports;
  if (c.all) {
    for (const auto& rep : region_representatives())
      reports.push_back(check_region_claims(rep.family, rep.p, rep.q, g));
  } else {
    RegionFamily fam;
    if (c.family == "Lambda")
      fam = RegionFamily::Lambda;
    else if (c.family == "Phi")
      fam = RegionFamily::Phi;
    else
      throw UsageError("--family must be Lambda or Phi");
    reports.push_back(check_region_claims(fam, Real(c.params.at("p")), Real(c.params.at("q")), g));
  }
  bool pass = true;
  for (const auto& r : reports)
    if (r.classification.claim != RegionClaim::unclassified) pass = pass && r.pass;
  if (c.format == "csv") {
    emit_csv_header(c, os);
    os << "family,p,q,region,claim,min,max,worst_monotone_step,sign_ok,monotone_ok,pass\n";
    for (const auto& r : reports)
      os << to_string(r.family) << "," << to_string(r.p, 10) << "," << to_string(r.q, 10) << ","
         << r.classification.region << "," << to_string(r.classification.claim) << ","
         << to_string(r.min_value, 12) << "," << to_string(r.max_value, 12) << ","
         << to_string(r.worst_monotone_step, 6) << "," << (r.sign_ok ? "true" : "false") << ","
         << (r.monotone_ok ? "true" : "false") << "," << (r.pass ? "true" : "false") << "\n";
  } else {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    auto& arr = j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["pass"] = pass;
    finish_json(c, j, os);
  }
  return pass ? kExitOk : kExitCheckFailed;
}

int do_bounds(const Command& c, std::ostream& os) {
  std::vector<BoundSpec> specs;
  if (c.all)
    for (const auto& n : bound_names()) specs.push_back(bound_spec(n));
  else
    for (const auto& ref : c.specs) specs.push_back(spec_ref(ref, c));

  bool pass = true;
  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  std::ostringstream rows;
  for (const auto& s : specs) {
    std::vector<Real> xs;
    if (!c.xs.empty())
      for (const auto& x : c.xs) xs.push_back(Real(x));
    else if (c.lo || c.hi)
      xs = linear_points(Real(c.lo.value_or("0")), Real(c.hi.value_or("50")), c.count.value_or(200));
    else
      xs = default_grid(s);
    const auto violations = verify_bound_on_grid(s, xs);
    pass = pass && violations.empty();
    for (const auto& x : xs) rows << bound_csv_row(s, evaluate_bound(s, x)) << "\n";
    nlohmann::ordered_json v = nlohmann::ordered_json::array();
    for (const auto& viol : violations)
      v.push_back({{"x", num(viol.x)},
                   {"side", to_string(viol.side)},
                   {"margin", to_string(viol.margin, 6)},
                   {"fails", viol.fails}});
    summary.push_back({{"spec", s.name},
                       {"points", xs.size()},
                       {"violations", v},
                       {"pass", violations.empty()}});
  }
  if (c.format == "csv") {
    emit_csv_header(c, os);
    os << bound_csv_header() << "\n" << rows.str();
  } else {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["bounds"] = summary;
    j["pass"] = pass;
    finish_json(c, j, os);
  }
  return pass ? kExitOk : kExitCheckFailed;
}

int do_compare(const Command& c, std::ostream& os) {
  BoundSide side;
  if (c.side == "upper")
    side = BoundSide::upper;
  else if (c.side == "lower")
    side = BoundSide::lower;
  else
    throw UsageError("--side must be upper or lower");
  const ComparisonResult r = compare_bounds(spec_ref(c.specs[0], c), spec_ref(c.specs[1], c), side,
                                            Real(c.lo.value_or("1")), Real(c.hi.value_or("10000")));
  if (c.format == "csv") {
    emit_csv_header(c, os);
    os << "kind,lo,hi,detail\n";
    for (const auto& x : r.crossovers)
      os << "crossover," << to_string(x.lo, 17) << "," << to_string(x.hi, 17) << ",\n";
    for (const auto& w : r.winners)
      os << "winner," << to_string(w.from, 17) << "," << to_string(w.to, 17) << "," << w.winner << "\n";
    os << "asymptotic,,," << r.asymptotic_winner << "\n";
    os << "right_ratio,,," << to_string(r.right_ratio, 17) << "\n";
  } else {
    auto j = to_json(r);
    finish_json(c, j, os);
  }
  return kExitOk;
}

int do_report(const Command& c, std::ostream& os, std::ostream& err) {
  std::vector<CriterionResult> results;
  for (unsigned id = 1; id <= kCriteriaCount; ++id) {
    results.push_back(run_criterion(id));
    err << format_line(results.back()) << "\n";
  }
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  if (c.format == "csv") {
    emit_csv_header(c, os);
    os << "id,name,pass,detail\n";
    for (const auto& r : results)
      os << r.id << "," << r.name << "," << (r.pass ? "true" : "false") << "," << csv_quote(r.detail) << "\n";
  } else {
    auto j = to_json(results);
    finish_json(c, j, os);
  }
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  Command c;
  Raw raw;
  CLI::App app{"Burnside remainder toolkit: evaluation, certificates, monotonicity evidence, bounds", "burnside"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Help for every command");

  auto* eval = app.add_subcommand("eval", "Evaluate a catalog function or a kernel integral");
  eval->add_option("--function", c.function, "theta, vartheta, b, w, H, H_lambda, F_alpha, g_alpha, BigF, BigG, Lambda, Phi, f_pqr, vartheta_hat");
  eval->add_option("--kernel", c.kernel, "binet_theta, burnside_b, entry46, lambda_gr, phi_magnus, binet, theorem1-item1..8");
  eval->add_option("--x", c.xs, "Abscissae (repeatable)");
  eval->add_option("--tol", c.tol, "Quadrature tolerance (default 1e-12)");
  add_param_options(eval, raw, {"alpha", "lambda", "p", "q", "r"});
  add_output_options(eval, c);

  auto* cert = app.add_subcommand("certify-am", "Search an absolute-monotonicity certificate");
  cert->add_option("--function", c.function, "f1, f2, f3, h1, h2, h3, h4");
  cert->add_flag("--all", c.all, "All seven functions");
  cert->add_option("--max-depth", c.max_depth, "Differentiation budget (default 64)");
  add_output_options(cert, c);

  for (const char* verb : {"verify-cm", "verify-lcm"}) {
    const bool cm = std::string(verb) == "verify-cm";
    auto* v = app.add_subcommand(verb, cm ? "Finite-difference evidence of complete monotonicity"
                                          : "Finite-difference evidence of logarithmic complete monotonicity");
    if (cm)
      v->add_flag("--theorem1", c.theorem1, "Theorem 1 claims (theorem1-item1..8)");
    else
      v->add_flag("--theorem2", c.theorem2, "Theorem 2 claims (theorem2-item1..8)");
    v->add_option("--item", c.item, "Single item 1..8");
    v->add_flag("--all", c.all, "All eight items");
    v->add_option("--claim", c.claim, "Claim key such as theorem1-item5");
    v->add_option("--function", c.function, "Catalog function");
    if (cm)
      v->add_option("--sign", c.sign, "Test sign * f (1 or -1)");
    else
      v->add_flag("--reciprocal", c.reciprocal, "Test 1/f");
    v->add_option("--digits", c.digits, "Tolerance digits, 25..50 (default 40)");
    add_param_options(v, raw, {"alpha", "lambda", "p", "q", "r"});
    add_grid_options(v, raw);
    add_output_options(v, c);
  }

  auto* regions = app.add_subcommand("regions", "Sign and monotonicity claims for Lambda_{p,q} and Phi_{p,q}");
  regions->add_option("--family", c.family, "Lambda or Phi");
  regions->add_flag("--all", c.all, "One representative per subregion");
  regions->add_option("--lo", raw.lo, "Grid start (default 0.1)");
  regions->add_option("--hi", raw.hi, "Grid end (default 20)");
  regions->add_option("--count", raw.count, "Grid points (default 200)");
  add_param_options(regions, raw, {"p", "q"});
  add_output_options(regions, c);

  auto* bounds = app.add_subcommand("bounds", "Verify catalog bounds on a grid");
  bounds->add_option("--spec", c.specs, "Catalog entry, optionally name:k=2 (repeatable)");
  bounds->add_flag("--all", c.all, "Every catalog entry on its default grid");
  bounds->add_option("--x", c.xs, "Explicit abscissae");
  bounds->add_option("--lo", raw.lo, "Linear grid start");
  bounds->add_option("--hi", raw.hi, "Linear grid end");
  bounds->add_option("--count", raw.count, "Linear grid points (default 200)");
  add_param_options(bounds, raw, {"k"});
  add_output_options(bounds, c);

  auto* compare = app.add_subcommand("compare", "Compare one side of two catalog bounds");
  compare->add_option("--spec", c.specs, "Exactly two catalog entries");
  compare->add_option("--side", c.side, "upper or lower (default upper)");
  compare->add_option("--lo", raw.lo, "Range start (default 1)");
  compare->add_option("--hi", raw.hi, "Range end (default 10000)");
  add_param_options(compare, raw, {"k"});
  add_output_options(compare, c);

  auto* report = app.add_subcommand("report", "Run the acceptance suite");
  add_output_options(report, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    c.verb = "help";
    const auto subs = app.get_subcommands();
    c.help_text = subs.empty() ? app.help() : subs.front()->help();
    return c;
  } catch (const CLI::CallForAllHelp&) {
    c.verb = "help";
    c.help_text = app.help("", CLI::AppFormatMode::All);
    return c;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  c.verb = app.get_subcommands().front()->get_name();
  validate(c, raw);
  return c;
}

int execute(const Command& c, std::ostream& out, std::ostream& err) {
  if (c.verb == "help") {
    out << c.help_text;
    return kExitOk;
  }
  std::ostringstream payload;
  int code;
  try {
    if (c.verb == "eval")
      code = do_eval(c, payload);
    else if (c.verb == "certify-am")
      code = do_certify(c, payload, err);
    else if (c.verb == "verify-cm" || c.verb == "verify-lcm")
      code = do_verify(c, payload);
    else if (c.verb == "regions")
      code = do_regions(c, payload);
    else if (c.verb == "bounds")
      code = do_bounds(c, payload);
    else if (c.verb == "compare")
      code = do_compare(c, payload);
    else if (c.verb == "report")
      code = do_report(c, payload, err);
    else
      throw UsageError("unknown verb '" + c.verb + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (c.out.empty()) {
    out << payload.str();
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << c.out << "\n";
      return kExitError;
    }
    f << payload.str();
  }
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command c;
  try {
    c = parse_args(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }
  return execute(c, out, err);
}

}  // namespace burnside::cli
