// partzeta: command-line front end to the library.
//
// Exit codes: 0 success, 1 a requested check failed, 2 invalid parameters,
// 3 numerical failure, 4 internal defect.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "partzeta/acceptance.hpp"
#include "partzeta/fixedlen.hpp"
#include "partzeta/modular.hpp"
#include "partzeta/padic.hpp"
#include "partzeta/profile_io.hpp"
#include "partzeta/pzeta.hpp"
#include "partzeta/special.hpp"

using nlohmann::json;
using namespace pz;

namespace {

struct RunConfig {
  unsigned precision_bits = kDefaultPrecisionBits;
  std::string tolerance_text = "2^-200";
  HPReal tolerance;
  std::string format = "json";
  std::string out;
  std::string command;
  std::map<std::string, std::string> params;

  unsigned digits() const { return decimal_digits_for_bits(precision_bits); }

  json to_json() const {
    json p = json::object();
    for (const auto& [k, v] : params) p[k] = v;
    return {{"precision_bits", precision_bits}, {"tolerance", tolerance_text}, {"format", format},
            {"out", out.empty() ? "-" : out}, {"command", command}, {"params", p}};
  }
};

HPReal parse_tolerance(const std::string& text) {
  const auto caret = text.find("^");
  if (caret != std::string::npos) {
    if (text.substr(0, caret) != "2") throw DomainError("tolerance powers must be written 2^-b");
    const long e = std::stol(text.substr(caret + 1));
    if (e >= 0) throw DomainError("tolerance must be below 1");
    return pow2_neg(static_cast<unsigned>(-e));
  }
  return parse_hp(text);
}

std::string dec(const HPReal& x, const RunConfig& cfg) { return format_decimal(x, cfg.digits()); }

json complex_json(const HPComplex& z, const RunConfig& cfg) { return {{"re", dec(z.re, cfg)}, {"im", dec(z.im, cfg)}}; }

json roots_json(const RootResult& r, const RunConfig& cfg) {
  json arr = json::array();
  for (std::size_t i = 0; i < r.roots.size(); ++i)
    arr.push_back({{"re", dec(r.roots[i].re, cfg)}, {"im", dec(r.roots[i].im, cfg)},
                   {"residual", format_decimal(r.residuals[i], 6)}});
  return arr;
}

std::string pi_multiple_text(const PiMultiple& p) {
  std::string s = to_string(p.coefficient);
  if (p.pi_power != 0) s += " \xC2\xB7 \xCF\x80^" + std::to_string(p.pi_power);
  return s;
}

// Flattens a report into "key,value" rows for --format csv.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const RunConfig& cfg, json body) {
  json report = {{"program", "partzeta"}, {"build", PARTZETA_BUILD_ID}, {"config", cfg.to_json()}, {"result", std::move(body)}};
  std::ostringstream text;
  if (cfg.format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    text << "key,value\n";
    for (const auto& [k, v] : rows) text << csv_quote(k) << "," << csv_quote(v) << "\n";
  } else {
    text << report.dump(2) << "\n";
  }
  if (cfg.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw DomainError("cannot write output file " + cfg.out);
    f << text.str();
  }
}

// ------------------------------------------------------------------ pzeta

struct PzetaArgs {
  std::string spec;
  std::string s = "2";
  std::string t = "0";
  std::string routes = "all";
};

std::optional<std::pair<unsigned long, unsigned long>> single_class(const PartSet& p) {
  if (p.classes.size() != 1 || !p.explicit_parts.empty() || p.min_part != 1 || p.distinct || p.max_ones) return std::nullopt;
  return p.classes.front();
}

std::optional<unsigned> integer_point(const HPComplex& s) {
  if (s.im != 0 || s.re < 2 || s.re > 1000 || floor(s.re) != s.re) return std::nullopt;
  return s.re.convert_to<unsigned>();
}

int cmd_pzeta(RunConfig& cfg, const PzetaArgs& a) {
  cfg.params = {{"spec", a.spec}, {"s", a.s}, {"t", a.t}, {"routes", a.routes}};
  const PartSet spec = PartSet::parse(a.spec);
  if (spec.divergent()) throw DomainError("divergent spec '" + a.spec + "': part 1 is allowed with unbounded multiplicity");
  const HPComplex s(parse_hp(a.s), parse_hp(a.t));
  std::vector<std::string> wanted;
  if (a.routes == "all") {
    wanted = {"euler", "gamma", "multiples"};
  } else {
    std::stringstream ss(a.routes);
    for (std::string r; std::getline(ss, r, ',');) wanted.push_back(r);
  }
  const auto cls = single_class(spec);
  const auto n = integer_point(s);
  json values = json::object();
  json skipped = json::object();
  std::map<std::string, HPComplex> got;
  for (const auto& r : wanted) {
    if (r == "euler") {
      const auto v = euler_product(spec, s, cfg.tolerance);
      got[r] = v.value;
      values[r] = {{"value", complex_json(v.value, cfg)}, {"tail_bound", format_decimal(v.tail_bound, 6)}, {"route", v.route}};
    } else if (r == "gamma") {
      if (!cls || !n) {
        skipped[r] = "needs a single class a+mN and an integer s >= 2";
        continue;
      }
      const HPReal v = closed_form_gamma(cls->first, cls->second, *n);
      got[r] = HPComplex(v);
      values[r] = {{"value", complex_json(HPComplex(v), cfg)}, {"tail_bound", "0"}, {"route", "closed_form_gamma"}};
    } else if (r == "multiples") {
      if (!cls || cls->first != 0) {
        skipped[r] = "needs the multiples mN of a single modulus";
        continue;
      }
      const auto v = log_eval_multiples(cls->second, s, cfg.tolerance);
      if (v.is_pole()) {
        values[r] = {{"pole", true}, {"pole_at_k", std::get<PoleReport>(v.value).pole_at_k}, {"route", "log_eval_multiples"}};
        continue;
      }
      const HPComplex z = exp(std::get<HPComplex>(v.value));
      got[r] = z;
      values[r] = {{"value", complex_json(z, cfg)}, {"tail_bound", format_decimal(v.remainder_bound, 6)},
                   {"terms", v.terms}, {"route", "log_eval_multiples"}};
    } else if (r == "general") {
      if (!cls || !n) {
        skipped[r] = "needs a single class a+mN and an integer s >= 2";
        continue;
      }
      const HPReal v = exp(log_eval_general(cls->first, cls->second, *n, cfg.tolerance));
      got[r] = HPComplex(v);
      values[r] = {{"value", complex_json(HPComplex(v), cfg)}, {"route", "log_eval_general"}};
    } else {
      throw DomainError("unknown route '" + r + "' (expected euler, gamma, multiples, general or all)");
    }
  }
  json dev = json::object();
  for (auto i = got.begin(); i != got.end(); ++i)
    for (auto j = std::next(i); j != got.end(); ++j)
      dev[i->first + "-" + j->first] = format_decimal(abs(i->second - j->second), 6);
  emit(cfg, {{"spec", spec.to_string()}, {"values", values}, {"deviations", dev}, {"skipped", skipped}});
  return 0;
}

// --------------------------------------------------------- fixedlen / mzv

int cmd_fixedlen(RunConfig& cfg, unsigned m, unsigned k, bool exact) {
  cfg.params = {{"m", std::to_string(m)}, {"k", std::to_string(k)}, {"exact", exact ? "true" : "false"}};
  json body = {{"m", m}, {"k", k}, {"value", dec(fixedlen_zeta(m, k), cfg)}};
  if (exact) {
    const auto det = fixedlen_zeta_exact(m, k);
    const auto ser = fixedlen_zeta_series_exact(m, k);
    body["exact"] = pi_multiple_text(det);
    body["exact_routes_agree"] = det == ser;
    body["routes"] = {{"determinant", pi_multiple_text(det)}, {"series", pi_multiple_text(ser)}};
  }
  emit(cfg, body);
  return 0;
}

int cmd_mzv(RunConfig& cfg, unsigned n, unsigned k, bool exact, const std::vector<unsigned>& index, unsigned long bound) {
  if (!index.empty()) {
    std::string idx;
    for (auto e : index) idx += (idx.empty() ? "" : ",") + std::to_string(e);
    cfg.params = {{"index", idx}, {"bound", std::to_string(bound)}};
    const auto r = mzv_bruteforce(index, bound);
    emit(cfg, {{"index", index}, {"bound", bound}, {"value", dec(r.value, cfg)},
               {"tail_estimate", format_decimal(r.tail_estimate, 6)}, {"note", r.note}, {"route", "mzv_bruteforce"}});
    return 0;
  }
  cfg.params = {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"exact", exact ? "true" : "false"}};
  json body = {{"n", n}, {"k", k}, {"value", dec(mzv_equal_args(n, k), cfg)}, {"route", "mzv_equal_args"}};
  if (exact) {
    const auto ser = mzv_equal_args_exact(n, k);
    const auto det = mzv_equal_args_determinant(n, k);
    body["exact"] = pi_multiple_text(ser);
    body["exact_routes_agree"] = det == ser;
  }
  emit(cfg, body);
  return 0;
}

// ------------------------------------------------------------------ padic

struct PadicArgs {
  unsigned long p = 5;
  unsigned a = 0;
  unsigned k = 1;
  unsigned long m1 = 2;
  unsigned long m2 = 0;  // 0: suggest
  std::vector<unsigned long> kummer;
};

std::string valuation_text(const std::optional<long>& v) { return v ? std::to_string(*v) : "inf"; }

int cmd_padic(RunConfig& cfg, const PadicArgs& a) {
  if (a.kummer.size() == 2) {
    cfg.params = {{"p", std::to_string(a.p)}, {"a", std::to_string(a.a)},
                  {"kummer", std::to_string(a.kummer[0]) + "," + std::to_string(a.kummer[1])}};
    const bool ok = kummer_check(a.p, a.a, a.kummer[0], a.kummer[1]);
    const Rational d = zeta_star_neg(a.p, a.kummer[0]) - zeta_star_neg(a.p, a.kummer[1]);
    emit(cfg, {{"check", "kummer"}, {"pass", ok}, {"valuation", valuation_text(padic_valuation(d, a.p))},
               {"required", a.a + 1}});
    return ok ? 0 : 1;
  }
  if (!a.kummer.empty()) throw DomainError("--kummer takes exactly two exponents k1,k2");
  const unsigned long m2 = a.m2 ? a.m2 : suggest_m2(a.p, a.a, a.m1);
  cfg.params = {{"p", std::to_string(a.p)}, {"a", std::to_string(a.a)}, {"k", std::to_string(a.k)},
                {"m1", std::to_string(a.m1)}, {"m2", std::to_string(m2)}};
  const PadicContext ctx{a.p, a.a, a.k};
  const auto v = interpolation_valuation(a.p, a.a, a.k, a.m1, m2);
  const bool ok = !v || *v >= static_cast<long>(a.a) + 1;
  emit(cfg, {{"check", "interpolation"}, {"pass", ok}, {"m2", m2}, {"valuation", valuation_text(v)},
             {"required", a.a + 1}, {"value_m1", to_string(padic_fixedlen(ctx, a.m1))},
             {"value_m2", to_string(padic_fixedlen(ctx, m2))}});
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- modular

struct ModularArgs {
  std::string action;
  bool report = false;
  std::string roots_csv;
  std::string file;
  std::string figures_dir;
  unsigned k = 6;
  int sign = -1;
  unsigned long m = 0;
  unsigned n = 30;
};

void write_roots_csv(const std::string& path, const std::vector<std::pair<std::string, const RootResult*>>& sets,
                     const RunConfig& cfg) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  f << "set,re,im,residual\n";
  for (const auto& [name, r] : sets)
    for (std::size_t i = 0; i < r->roots.size(); ++i)
      f << name << "," << dec(r->roots[i].re, cfg) << "," << dec(r->roots[i].im, cfg) << ","
        << format_decimal(r->residuals[i], 6) << "\n";
}

json profile_checks(const LProfile& prof, const RunConfig& cfg, RootResult& r_roots, RootResult& z_roots) {
  prof.validate(cfg.tolerance);
  const PolyC r = period_polynomial(prof);
  r_roots = poly_roots(r);
  HPReal circle = 0;
  for (const auto& z : r_roots.roots) circle = std::max(circle, HPReal(abs(abs(z) - 1)));
  const auto zp = zeta_polynomial(prof);
  const auto fe = functional_eq_check(zp.poly, prof.sign);
  const auto rh = rh_check(zp.poly);
  z_roots = rh.roots;
  json coeffs_r = json::array(), coeffs_z = json::array();
  for (const auto& c : r.coefficients()) coeffs_r.push_back(dec(c.re, cfg));
  for (const auto& c : zp.poly.coefficients()) coeffs_z.push_back(dec(c.re, cfg));
  json lam = json::array();
  for (const auto& v : prof.lambda) lam.push_back(dec(v, cfg));
  json body = {
      {"profile", {{"weight", prof.weight}, {"level", prof.level}, {"sign", prof.sign}, {"lambda", lam}, {"source", prof.source}}},
      {"period_polynomial", {{"coefficients", coeffs_r}, {"roots", roots_json(r_roots, cfg)},
                             {"max_unit_circle_deviation", format_decimal(circle, 6)}, {"route", "period_polynomial"}}},
      {"zeta_polynomial", {{"coefficients", coeffs_z}, {"roots", roots_json(z_roots, cfg)},
                           {"functional_equation_residual", format_decimal(fe.residual, 6)},
                           {"coefficient_norm", format_decimal(fe.norm, 6)},
                           {"max_critical_line_deviation", format_decimal(rh.max_deviation, 6)},
                           {"route", "zeta_polynomial"}}},
      {"generating_function_mismatch", format_decimal(generating_check(prof, 12), 6)},
      {"moments", json::array()}};
  for (unsigned m = 0; m <= prof.weight - 2; ++m) body["moments"].push_back(dec(moments(prof, m), cfg));
  if (prof.weight == 4) {
    const auto w = weight4_inequality_check(prof, cfg.tolerance);
    body["weight4"] = {{"inequality", w.inequality}, {"unit_circle", w.unit_circle}, {"consistent", w.consistent()},
                       {"lhs", dec(w.lhs, cfg)}, {"rhs", dec(w.rhs, cfg)}};
  }
  return body;
}

int cmd_modular(RunConfig& cfg, const ModularArgs& a) {
  if (a.action == "delta") {
    cfg.params = {{"action", "delta"}, {"report", a.report ? "true" : "false"}, {"roots_csv", a.roots_csv}};
    const auto tau = tau_recursive(std::max(30u, lambda_delta_terms(cfg.tolerance)));
    const auto prof = build_LProfile_delta(cfg.tolerance);
    RootResult r_roots, z_roots;
    json body = profile_checks(prof, cfg, r_roots, z_roots);
    const auto d = delta_decomposition(prof);
    body["decomposition"] = {{"even_constant", dec(d.even_constant, cfg)}, {"odd_constant", dec(d.odd_constant, cfg)},
                             {"pattern_deviation", format_decimal(d.pattern_deviation, 6)}};
    json t = json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(tau.size(), 12); ++i) t.push_back(tau[i].str());
    body["tau"] = t;
    body["pipeline"] = {"tau_recursive", "lambda_delta", "period_polynomial", "zeta_polynomial", "checks"};
    if (!a.report) body.erase("moments");
    if (!a.roots_csv.empty()) write_roots_csv(a.roots_csv, {{"R_Delta", &r_roots}, {"Z_Delta", &z_roots}}, cfg);
    emit(cfg, body);
    return 0;
  }
  if (a.action == "profile") {
    cfg.params = {{"action", "profile"}, {"file", a.file}, {"roots_csv", a.roots_csv}};
    const auto prof = load_profile(a.file);
    RootResult r_roots, z_roots;
    json body = profile_checks(prof, cfg, r_roots, z_roots);
    if (!a.roots_csv.empty()) write_roots_csv(a.roots_csv, {{"R_f", &r_roots}, {"Z_f", &z_roots}}, cfg);
    emit(cfg, body);
    return 0;
  }
  if (a.action == "tau") {
    cfg.params = {{"action", "tau"}, {"n", std::to_string(a.n)}};
    const auto rec = tau_recursive(a.n);
    const auto eta = tau_eta_oracle(a.n);
    json t = json::array();
    for (const auto& v : rec) t.push_back(v.str());
    emit(cfg, {{"tau", t}, {"matches_eta_product", rec == eta}, {"route", "tau_recursive"}});
    return rec == eta ? 0 : 1;
  }
  if (a.action == "hk") {
    cfg.params = {{"action", "hk"}, {"k", std::to_string(a.k)}, {"sign", std::to_string(a.sign)}};
    const auto t = hk_zero_solver(a.k, a.sign);
    const PolyQ h = a.sign < 0 ? H_minus(a.k) : H_plus(a.k);
    json ords = json::array(), coeffs = json::array();
    for (const auto& v : t) ords.push_back(dec(v, cfg));
    for (const auto& c : h.coefficients()) coeffs.push_back(to_string(c));
    emit(cfg, {{"k", a.k}, {"sign", a.sign}, {"ordinates", ords}, {"H_coefficients", coeffs}, {"route", "hk_zero_solver"}});
    return 0;
  }
  if (a.action == "ehrhart") {
    cfg.params = {{"action", "ehrhart"}, {"k", std::to_string(a.k)}, {"m", std::to_string(a.m)}};
    const BigInt c = ehrhart_simplex_count(a.k, a.m);
    const Rational h = H_minus(a.k)(Rational(a.m));
    emit(cfg, {{"k", a.k}, {"m", a.m}, {"count", c.str()}, {"H_minus", to_string(h)}, {"match", Rational(c) == h}});
    return Rational(c) == h ? 0 : 1;
  }
  if (a.action == "figures") {
    cfg.params = {{"action", "figures"}, {"dir", a.figures_dir}};
    std::filesystem::create_directories(a.figures_dir);
    const auto prof = build_LProfile_delta(cfg.tolerance);
    const auto r_roots = poly_roots(period_polynomial(prof));
    const auto z_roots = poly_roots(zeta_polynomial(prof).poly);
    const std::string d = a.figures_dir + "/";
    write_roots_csv(d + "r_delta_roots.csv", {{"R_Delta", &r_roots}}, cfg);
    write_roots_csv(d + "z_delta_roots.csv", {{"Z_Delta", &z_roots}}, cfg);
    std::ofstream tet(d + "tetrahedron_vertices.csv");
    tet << "x,y,z\n1,0,0\n0,1,0\n0,0,1\n-1,-1,-1\n";
    emit(cfg, {{"files", {"r_delta_roots.csv", "z_delta_roots.csv", "tetrahedron_vertices.csv"}}});
    return 0;
  }
  throw DomainError("unknown modular action '" + a.action + "' (delta, profile, tau, hk, ehrhart, figures)");
}

int cmd_selftest(RunConfig& cfg, const std::vector<std::string>& only) {
  cfg.params = {{"only", ""}};
  for (const auto& o : only) cfg.params["only"] += (cfg.params["only"].empty() ? "" : ",") + o;
  const auto results = run_acceptance(only);
  unsigned failed = 0;
  for (const auto& r : results) {
    std::cout << format_result(r) << "\n";
    failed += r.pass ? 0 : 1;
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partzeta: partition zeta values, MZVs, p-adic congruences and zeta polynomials"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--prec", cfg.precision_bits, "working precision in bits (>= 64)")->check(CLI::Range(64u, 1u << 20));
  app.add_option("--tol", cfg.tolerance_text, "tolerance, decimal or 2^-b");
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  PzetaArgs pz_args;
  auto* pzeta = app.add_subcommand("pzeta", "partition zeta value over a part set");
  pzeta->add_option("--spec", pz_args.spec, "part set, e.g. 2N, geq:2, 1+3N|distinct")->required();
  pzeta->add_option("--s", pz_args.s, "real part of s");
  pzeta->add_option("--t", pz_args.t, "imaginary part of s");
  pzeta->add_option("--routes", pz_args.routes, "all, or a list from euler,gamma,multiples,general");

  unsigned fl_m = 2, fl_k = 1;
  bool fl_exact = false;
  auto* fixedlen = app.add_subcommand("fixedlen", "fixed-length partition zeta value");
  fixedlen->add_option("--m", fl_m)->required();
  fixedlen->add_option("--k", fl_k)->required();
  fixedlen->add_flag("--exact", fl_exact, "also print the exact rational multiple of a power of pi");

  unsigned mz_n = 2, mz_k = 1;
  bool mz_exact = false;
  std::vector<unsigned> mz_index;
  unsigned long mz_bound = 1000;
  auto* mzv = app.add_subcommand("mzv", "multiple zeta values");
  mzv->add_option("--n", mz_n, "common argument of zeta({n}^k)");
  mzv->add_option("--k", mz_k, "depth of zeta({n}^k)");
  mzv->add_flag("--exact", mz_exact);
  mzv->add_option("--index", mz_index, "explicit index for a truncated nested sum")->delimiter(',');
  mzv->add_option("--bound", mz_bound, "truncation bound for --index");

  PadicArgs pa;
  auto* padic = app.add_subcommand("padic", "p-adic interpolation and Kummer congruences");
  padic->add_option("--p", pa.p)->required();
  padic->add_option("--a", pa.a);
  padic->add_option("--k", pa.k);
  padic->add_option("--m1", pa.m1);
  padic->add_option("--m2", pa.m2, "default: smallest admissible m2 > m1");
  padic->add_option("--kummer", pa.kummer, "k1,k2: check a Kummer congruence instead")->delimiter(',');

  ModularArgs ma;
  auto* modular = app.add_subcommand("modular", "modular-form pipeline and zeta polynomials");
  modular->add_option("action", ma.action, "delta | profile | tau | hk | ehrhart | figures")->required();
  modular->add_flag("--report", ma.report, "full pipeline report");
  modular->add_option("--roots-csv", ma.roots_csv, "write root scatter data (set,re,im,residual)");
  modular->add_option("--file", ma.file, "LProfile JSON for 'profile'");
  modular->add_option("--dir", ma.figures_dir, "output directory for 'figures'");
  modular->add_option("--k", ma.k);
  modular->add_option("--sign", ma.sign);
  modular->add_option("--m", ma.m);
  modular->add_option("--n", ma.n);

  std::vector<std::string> only;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--only", only, "criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.tolerance = parse_tolerance(cfg.tolerance_text);
    if (!(cfg.tolerance > 0)) throw DomainError("tolerance must be positive");
    WorkingPrecision wp(cfg.precision_bits);
    cfg.tolerance = rounded(cfg.tolerance);
    if (*pzeta) {
      cfg.command = "pzeta";
      return cmd_pzeta(cfg, pz_args);
    }
    if (*fixedlen) {
      cfg.command = "fixedlen";
      return cmd_fixedlen(cfg, fl_m, fl_k, fl_exact);
    }
    if (*mzv) {
      cfg.command = "mzv";
      return cmd_mzv(cfg, mz_n, mz_k, mz_exact, mz_index, mz_bound);
    }
    if (*padic) {
      cfg.command = "padic";
      return cmd_padic(cfg, pa);
    }
    if (*modular) {
      cfg.command = "modular";
      if (ma.action == "figures" && ma.figures_dir.empty()) throw DomainError("figures needs --dir");
      if (ma.action == "profile" && ma.file.empty()) throw DomainError("profile needs --file");
      return cmd_modular(cfg, ma);
    }
    if (*selftest) {
      cfg.command = "selftest";
      return cmd_selftest(cfg, only);
    }
  } catch (const DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const NumericFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const InternalDefect& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
