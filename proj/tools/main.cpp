#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "calabi/bundles.hpp"
#include "calabi/instantons.hpp"

using json = nlohmann::ordered_json;
using namespace calabi;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Accepts integers, fractions like -3/2, and finite decimals like 0.25.
Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty constant");
  const auto slash = text.find('/');
  if (slash != std::string::npos)
    return Rational(text.substr(0, slash)) / Rational(text.substr(slash + 1));
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(text);
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  Rational scale = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) scale *= 10;
  return Rational(digits) / scale;
}

GaugeAlgebra parse_gauge(const std::string& name) {
  if (name == "u1") return GaugeAlgebra::u1;
  if (name == "so3") return GaugeAlgebra::so3;
  throw std::invalid_argument("unknown gauge algebra: " + name);
}

std::pair<ConditionKind, ComplexStructure> parse_family_tag(const std::string& tag) {
  if (tag == "sp2") return {ConditionKind::sp2, ComplexStructure::I};
  const auto dash = tag.find('-');
  if (dash != std::string::npos) {
    const std::string head = tag.substr(0, dash);
    const ComplexStructure L = structure_from_name(tag.substr(dash + 1));
    if (head == "spin7") return {ConditionKind::spin7, L};
    if (head == "su4") return {ConditionKind::su4, L};
  }
  throw std::invalid_argument("unknown family tag: " + tag);
}

const CalabiStructure& space() {
  static const CalabiStructure X = build_calabi();
  return X;
}

json check_entry(const std::string& name, bool pass, double max_abs) {
  json j;
  j["name"] = name;
  j["pass"] = pass;
  j["max_abs"] = max_abs;
  return j;
}

int emit(const json& report, const std::string& out_path) {
  const std::string payload = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output path: " + out_path);
    file << payload;
  }
  return report.value("pass", true) ? 0 : 1;
}

int emit_text(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output path: " + out_path);
    file << payload;
  }
  return 0;
}

/// Shared flag bundle; each subcommand registers the subset it uses.
struct Flags {
  std::string gauge = "u1";
  long n = 2;
  std::string family;
  std::array<std::string, 4> C{"0", "0", "0", "0"};
  double r_eval = 2.0;
  double r_target = 5.0;
  std::uint64_t seed = 0x5eed;
  std::string format = "csv";
  std::string out;
  double tol = 1e-10;
  double endpoint_tol = 1e-6;
  double slope_eps = 0.1;
};

std::array<Rational, 4> parse_constants(const Flags& f) {
  return {parse_rational(f.C[0]), parse_rational(f.C[1]), parse_rational(f.C[2]),
          parse_rational(f.C[3])};
}

SolutionFamily family_from_flags(const Flags& f) {
  const auto [kind, L] = parse_family_tag(f.family);
  return closed_form(kind, L, parse_gauge(f.gauge), f.n, parse_constants(f));
}

IsZeroOptions zero_options(const Flags& f) {
  IsZeroOptions opts;
  opts.tolerance = f.tol;
  opts.seed = static_cast<unsigned>(f.seed);
  return opts;
}

json constants_json(const std::array<Rational, 4>& C) {
  json j = json::array();
  for (const Rational& c : C) j.push_back(c.str());
  return j;
}

// --- geometry -------------------------------------------------------------

bool coframe_closure_exact() {
  using QForm = Form<Rational>;
  for (int s = 0; s < kCoframeSlots; ++s)
    if (!exterior_derivative(exterior_derivative(QForm::basis({s}))).is_empty()) return false;
  return true;
}

int run_geometry(const Flags& f) {
  const auto start = Clock::now();
  json report;
  report["schema"] = 1;
  report["command"] = "geometry";
  report["tolerance"] = f.tol;
  report["seed"] = f.seed;
  json checks = json::array();
  bool pass = true;

  const bool exact = coframe_closure_exact();
  checks.push_back(check_entry("coframe differential squares to zero (exact)", exact, 0.0));
  pass = pass && exact;

  for (const IdentityCheck& c : certify_calabi(space(), zero_options(f))) {
    checks.push_back(check_entry(c.name, c.pass, c.max_abs));
    pass = pass && c.pass;
  }
  for (const InstantonCondition& cond : InstantonCondition::all(space())) {
    const IdentityCheck c = certify_condition_closed(space(), cond, zero_options(f));
    checks.push_back(check_entry(c.name, c.pass, c.max_abs));
    pass = pass && c.pass;
  }
  report["checks"] = std::move(checks);
  report["pass"] = pass;
  report["elapsed_ms"] = elapsed_ms(start);
  return emit(report, f.out);
}

// --- bundles ----------------------------------------------------------------

json extension_candidates_json(GaugeAlgebra gauge, long n) {
  json out = json::array();
  for (const ExtensionHom& h : extension_candidates(gauge, n)) {
    json c;
    c["kind"] = h.adjoint ? "adjoint" : "determinant_power";
    if (!h.adjoint) c["k"] = h.k;
    out.push_back(std::move(c));
  }
  return out;
}

int run_bundles(const Flags& f) {
  const auto start = Clock::now();
  json report;
  report["schema"] = 1;
  report["command"] = "bundles";
  bool pass = true;

  json circle = json::array();
  for (long n = -4; n <= 4; ++n) {
    const json candidates = extension_candidates_json(GaugeAlgebra::u1, n);
    const bool extends = !candidates.empty();
    pass = pass && (extends == (n % 2 == 0));
    json row;
    row["n"] = n;
    row["extends"] = extends;
    row["candidates"] = candidates;
    circle.push_back(std::move(row));
  }
  report["circle_bundle"] = std::move(circle);

  json rotation = json::array();
  for (long n = -4; n <= 4; ++n) {
    const json candidates = extension_candidates_json(GaugeAlgebra::so3, n);
    json row;
    row["n"] = n;
    row["extends"] = !candidates.empty();
    row["candidates"] = candidates;
    rotation.push_back(std::move(row));
    if (n == 0) pass = pass && candidates.size() == 2;
    if (n % 2 == 0 && n != 0) pass = pass && candidates.size() == 2;
    if (n % 2 != 0) pass = pass && candidates.empty();
  }
  report["rotation_bundle"] = std::move(rotation);

  json dims = json::array();
  for (const GaugeAlgebra gauge : {GaugeAlgebra::u1, GaugeAlgebra::so3})
    for (long n = -4; n <= 4; ++n) {
      const int dim = equivariant_map_space(n, gauge).dimension();
      const bool diagnostic = gauge == GaugeAlgebra::so3 && (n == 3 || n == -3);
      json row;
      row["gauge"] = gauge_name(gauge);
      row["n"] = n;
      row["dimension"] = dim;
      if (diagnostic) {
        row["diagnostic"] = true;
      } else if (gauge == GaugeAlgebra::u1) {
        pass = pass && dim == 3;
      } else {
        pass = pass && dim == (n == 0 ? 9 : 3);
      }
      dims.push_back(std::move(row));
    }
  report["equivariant_dimensions"] = std::move(dims);
  report["pass"] = pass;
  report["elapsed_ms"] = elapsed_ms(start);
  return emit(report, f.out);
}

// --- curvature --------------------------------------------------------------

json form_terms_json(const InvariantForm& form) {
  json out;
  for (const auto& [key, c] : form.terms()) out[InvariantForm::basis_label(key)] = c.serialize();
  return out;
}

json eform_terms_json(const OrthoForm& form) {
  json out;
  for (const auto& [key, c] : form.terms()) out[OrthoForm::basis_label(key)] = c.serialize();
  return out;
}

int run_curvature(const Flags& f) {
  const auto start = Clock::now();
  const ConnectionAnsatz A = f.family.empty()
                                 ? ConnectionAnsatz::canonical(parse_gauge(f.gauge), f.n)
                                 : family_from_flags(f).ansatz;
  const CurvatureForm F = curvature(A, space().g);

  json report;
  report["schema"] = 1;
  report["command"] = "curvature";
  report["gauge"] = f.gauge;
  report["n"] = f.n;
  if (!f.family.empty()) {
    report["family"] = f.family;
    report["constants"] = constants_json(parse_constants(f));
  }
  json gens = json::array();
  for (int i = 0; i < F.mc.generators(); ++i) {
    json g;
    g["generator"] = i;
    g["invariant_coframe"] = form_terms_json(F.mc.comp[i]);
    g["orthonormal_coframe"] = eform_terms_json(F.e.comp[i]);
    gens.push_back(std::move(g));
  }
  report["curvature"] = std::move(gens);
  const ScalarField norm = curvature_norm_sq(F);
  report["norm_sq"] = norm.serialize();
  report["norm_sq_at_r"] = json::object({{"r", f.r_eval}, {"value", norm.evaluate(f.r_eval)}});

  const bool horizontal = is_horizontal(F, zero_options(f));
  bool bianchi = true;
  for (const InvariantForm& comp : bianchi_residual(A, F).comp)
    for (const auto& [key, c] : comp.terms()) bianchi = bianchi && is_zero(c, zero_options(f));
  report["horizontal"] = horizontal;
  report["bianchi_zero"] = bianchi;
  report["pass"] = horizontal && bianchi;
  report["elapsed_ms"] = elapsed_ms(start);
  return emit(report, f.out);
}

// --- derive-ode -------------------------------------------------------------

json ode_system_json(const ODESystem& sys) {
  json j;
  j["condition"] = sys.condition;
  j["gauge"] = gauge_name(sys.gauge);
  j["n"] = sys.n;
  j["unknowns"] = sys.unknowns;
  json constraints = json::array();
  for (const auto& [name, value] : sys.constraints) {
    json c;
    c["name"] = name;
    c["value"] = value.serialize();
    constraints.push_back(std::move(c));
  }
  j["constraints"] = std::move(constraints);
  json matrix = json::array();
  for (const auto& row : sys.matrix) {
    json r = json::array();
    for (const ScalarField& entry : row) r.push_back(entry.serialize());
    matrix.push_back(std::move(r));
  }
  j["matrix"] = std::move(matrix);
  json rhs = json::array();
  for (const ScalarField& entry : sys.inhomogeneity) rhs.push_back(entry.serialize());
  j["inhomogeneity"] = std::move(rhs);
  return j;
}

int run_derive_ode(const Flags& f) {
  const InstantonCondition cond = InstantonCondition::parse(space(), f.family);
  const ODESystem sys = extract_ode(space(), cond, parse_gauge(f.gauge), f.n);
  json report;
  report["schema"] = 1;
  report["command"] = "derive-ode";
  report["system"] = ode_system_json(sys);
  report["pass"] = true;
  return emit(report, f.out);
}

// --- solve ------------------------------------------------------------------

int run_solve(const Flags& f) {
  const auto start = Clock::now();
  const SolutionFamily fam = family_from_flags(f);
  const InstantonCondition cond = InstantonCondition::of(space(), fam.kind, fam.L);
  const ODESystem sys = extract_ode(space(), cond, fam.gauge, fam.n);

  const double r0 = 2.0, r1 = f.r_target;
  const auto state_of = [&](double r) {
    std::vector<double> state;
    for (const std::string& name : sys.unknowns) {
      const int slot = name[1] - '0';
      const std::array<ScalarField, 3>* fields = &fam.ansatz.p;
      if (name[0] == 'q') fields = &fam.ansatz.q;
      if (name[0] == 's') fields = &fam.ansatz.s;
      state.push_back((*fields)[slot].evaluate(r));
    }
    return state;
  };

  const Trajectory traj = integrate(sys, r0, state_of(r0), r1, 1e-10);
  const std::vector<double> expected = state_of(r1);
  double err = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    err = std::max(err, std::abs(traj.values.back()[i] - expected[i]));

  json report;
  report["schema"] = 1;
  report["command"] = "solve";
  report["family"] = f.family;
  report["gauge"] = f.gauge;
  report["n"] = f.n;
  report["constants"] = constants_json(parse_constants(f));
  report["unknowns"] = sys.unknowns;
  report["r_start"] = r0;
  report["r_end"] = r1;
  report["initial"] = state_of(r0);
  report["integrated"] = traj.values.back();
  report["closed_form"] = expected;
  report["max_abs_error"] = err;
  report["steps"] = traj.radii.size() - 1;
  report["tolerance"] = f.endpoint_tol;
  report["pass"] = err < f.endpoint_tol;
  report["elapsed_ms"] = elapsed_ms(start);
  return emit(report, f.out);
}

// --- verify-family ----------------------------------------------------------

int run_verify_family(const Flags& f) {
  const auto start = Clock::now();
  const SolutionFamily fam = family_from_flags(f);
  const FamilyReport result = verify_solution(space(), fam, zero_options(f));
  json report;
  report["schema"] = 1;
  report["command"] = "verify-family";
  report["family"] = f.family;
  report["condition"] = result.condition;
  report["gauge"] = f.gauge;
  report["n"] = f.n;
  report["constants"] = constants_json(parse_constants(f));
  report["seed"] = f.seed;
  report["tolerance"] = f.tol;
  report["samples"] = result.samples;
  report["max_abs"] = result.max_abs;
  report["max_scale"] = result.max_scale;
  report["pass"] = result.zero;
  report["elapsed_ms"] = elapsed_ms(start);
  return emit(report, f.out);
}

// --- extend -----------------------------------------------------------------

int run_extend(const Flags& f) {
  const auto start = Clock::now();
  const SolutionFamily fam = family_from_flags(f);
  const ExtensionReport result = extension_check(space(), fam, f.slope_eps);
  json report;
  report["schema"] = 1;
  report["command"] = "extend";
  report["family"] = f.family;
  report["gauge"] = f.gauge;
  report["n"] = f.n;
  report["constants"] = constants_json(parse_constants(f));
  report["slope_tolerance"] = f.slope_eps;
  report["extends"] = result.extends;
  report["slope"] = result.slope;
  report["analytic_extends"] = result.analytic_extends;
  report["radii"] = result.radii;
  report["norm_values"] = result.norm_values;
  report["pass"] = result.consistent;
  report["elapsed_ms"] = elapsed_ms(start);
  return emit(report, f.out);
}

// --- classify ---------------------------------------------------------------

json classification_json(const ClassificationReport& rep) {
  json conditions = json::array();
  for (std::size_t i = 0; i < rep.names.size(); ++i) {
    json c;
    c["name"] = rep.names[i];
    c["satisfied"] = rep.satisfied[i];
    c["max_abs"] = rep.max_abs[i];
    conditions.push_back(std::move(c));
  }
  json j;
  j["conditions"] = std::move(conditions);
  j["lattice_consistent"] = rep.lattice_consistent;
  return j;
}

int run_classify(const Flags& f) {
  const auto start = Clock::now();
  const ConnectionAnsatz A = f.family.empty()
                                 ? ConnectionAnsatz::canonical(parse_gauge(f.gauge), f.n)
                                 : family_from_flags(f).ansatz;
  const ClassificationReport rep = cross_equivalences(space(), A, zero_options(f));
  json report;
  report["schema"] = 1;
  report["command"] = "classify";
  report["gauge"] = f.gauge;
  report["n"] = f.n;
  if (!f.family.empty()) {
    report["family"] = f.family;
    report["constants"] = constants_json(parse_constants(f));
  }
  report["seed"] = f.seed;
  report["tolerance"] = f.tol;
  report.update(classification_json(rep));
  report["pass"] = rep.lattice_consistent;
  report["elapsed_ms"] = elapsed_ms(start);
  return emit(report, f.out);
}

// --- table ------------------------------------------------------------------

int run_table(const Flags& f) {
  const std::array<std::pair<ConditionKind, const char*>, 3> classes{
      {{ConditionKind::spin7, "spin7"}, {ConditionKind::su4, "su4"}, {ConditionKind::sp2, "sp2"}}};
  json rows = json::array();
  for (const ComplexStructure L :
       {ComplexStructure::I, ComplexStructure::J, ComplexStructure::K})
    for (const auto& [kind, label] : classes) {
      const SolutionFamily fam = table_family(kind, L, GaugeAlgebra::u1, 2, {1, 1, 1});
      json row;
      row["l"] = structure_name(L);
      row["class"] = label;
      row["p0"] = fam.ansatz.p[0].serialize();
      row["p1"] = fam.ansatz.p[1].serialize();
      row["p2"] = fam.ansatz.p[2].serialize();
      rows.push_back(std::move(row));
    }

  if (f.format == "json") {
    json report;
    report["schema"] = 1;
    report["command"] = "table";
    report["n"] = 2;
    report["constants"] = json::array({"1", "1", "1"});
    report["rows"] = std::move(rows);
    report["pass"] = true;
    return emit(report, f.out);
  }
  std::string csv = "L,class,p0,p1,p2\n";
  for (const json& row : rows)
    csv += row["l"].get<std::string>() + "," + row["class"].get<std::string>() + "," +
           row["p0"].get<std::string>() + "," + row["p1"].get<std::string>() + "," +
           row["p2"].get<std::string>() + "\n";
  return emit_text(csv, f.out);
}

// --- all --------------------------------------------------------------------

int run_all(const Flags& f) {
  const auto start = Clock::now();
  const CalabiStructure& X = space();
  const IsZeroOptions opts = zero_options(f);
  std::mt19937_64 rng(f.seed);
  std::uniform_int_distribution<int> numerator(-6, 6);
  std::uniform_int_distribution<int> denominator(1, 3);
  const auto draw = [&] { return Rational(numerator(rng), denominator(rng)); };

  json checks = json::array();
  bool pass = true;
  const auto add = [&](const std::string& name, bool ok, double max_abs) {
    checks.push_back(check_entry(name, ok, max_abs));
    pass = pass && ok;
  };

  add("coframe differential squares to zero (exact)", coframe_closure_exact(), 0.0);
  for (const IdentityCheck& c : certify_calabi(X, opts)) add(c.name, c.pass, c.max_abs);

  bool bundles_ok = true;
  for (long n = -4; n <= 4; ++n) {
    bundles_ok = bundles_ok &&
                 (!extension_candidates(GaugeAlgebra::u1, n).empty() == (n % 2 == 0));
    bundles_ok = bundles_ok && equivariant_map_space(n, GaugeAlgebra::u1).dimension() == 3;
    if (n != 3 && n != -3)
      bundles_ok = bundles_ok &&
                   equivariant_map_space(n, GaugeAlgebra::so3).dimension() == (n == 0 ? 9 : 3);
  }
  bundles_ok = bundles_ok && extension_candidates(GaugeAlgebra::so3, 0).size() == 2;
  add("bundle layer extension and dimension table", bundles_ok, 0.0);

  const std::array<ConditionKind, 3> kinds{ConditionKind::spin7, ConditionKind::su4,
                                           ConditionKind::sp2};
  for (const ComplexStructure L :
       {ComplexStructure::I, ComplexStructure::J, ComplexStructure::K})
    for (const ConditionKind kind : kinds) {
      const std::array<Rational, 3> C{draw(), draw(), draw()};
      const SolutionFamily fam = table_family(kind, L, GaugeAlgebra::u1, 2, C);
      const FamilyReport rep = verify_solution(X, fam, opts);
      add("family " + fam.condition_name() + " on the circle bundle", rep.zero, rep.max_abs);
    }
  for (const ComplexStructure L :
       {ComplexStructure::I, ComplexStructure::J, ComplexStructure::K}) {
    const SolutionFamily fam = e0_family(L, {draw(), draw(), draw()});
    const FamilyReport rep = verify_solution(X, fam, opts);
    add("family " + fam.condition_name() + " on the trivial rotation bundle", rep.zero,
        rep.max_abs);
  }

  for (const ComplexStructure L :
       {ComplexStructure::I, ComplexStructure::J, ComplexStructure::K}) {
    const InstantonCondition cond = InstantonCondition::spin7(X, L);
    const ODESystem sys = extract_ode(X, cond, GaugeAlgebra::u1, 2);
    const SolutionFamily fam = table_family(ConditionKind::spin7, L, GaugeAlgebra::u1, 2,
                                            {1, 1, 1});
    std::vector<double> init;
    for (const ScalarField& field : fam.ansatz.p) init.push_back(field.evaluate(2.0));
    const Trajectory traj = integrate(sys, 2.0, init, 5.0, 1e-10);
    double err = 0.0;
    for (int i = 0; i < 3; ++i)
      err = std::max(err, std::abs(traj.values.back()[i] - fam.ansatz.p[i].evaluate(5.0)));
    add("integration tracks the " + cond.name() + " family", err < 1e-6, err);
  }

  bool extension_ok = true;
  double worst_slope_gap = 0.0;
  for (const ComplexStructure L :
       {ComplexStructure::I, ComplexStructure::J, ComplexStructure::K})
    for (const long n : {2L, -2L})
      for (int hot = 0; hot < 3; ++hot) {
        std::array<Rational, 3> C{};
        C[hot] = 1;
        const ExtensionReport rep =
            extension_check(X, table_family(ConditionKind::spin7, L, GaugeAlgebra::u1, n, C));
        extension_ok = extension_ok && rep.consistent;
      }
  for (int hot = 0; hot < 3; ++hot) {
    std::array<Rational, 3> C{};
    C[hot] = 1;
    for (const ComplexStructure L :
         {ComplexStructure::I, ComplexStructure::J, ComplexStructure::K})
      extension_ok = extension_ok && extension_check(X, e0_family(L, C)).consistent;
  }
  add("extension slope fits agree with the analytic criteria", extension_ok, worst_slope_gap);

  bool lattice_ok = cross_equivalences(X, ConnectionAnsatz::canonical(GaugeAlgebra::u1, 2), opts)
                        .lattice_consistent;
  lattice_ok = lattice_ok &&
               cross_equivalences(X,
                                  table_family(ConditionKind::sp2, ComplexStructure::I,
                                               GaugeAlgebra::u1, 2, {0, 0, 0})
                                      .ansatz,
                                  opts)
                   .lattice_consistent;
  for (const ComplexStructure L :
       {ComplexStructure::I, ComplexStructure::J, ComplexStructure::K})
    lattice_ok = lattice_ok &&
                 cross_equivalences(
                     X, table_family(ConditionKind::su4, L, GaugeAlgebra::u1, 2, {2, 2, 2}).ansatz,
                     opts)
                     .lattice_consistent;
  for (int trial = 0; trial < 3; ++trial) {
    const ConnectionAnsatz A = ConnectionAnsatz::abelian(
        2, draw() * ScalarField::r_power(-1), draw() * ScalarField::r_power(-2),
        draw() * ScalarField::r_power(-3));
    lattice_ok = lattice_ok && cross_equivalences(X, A, opts).lattice_consistent;
  }
  add("cross-equivalence lattice holds on families and random draws", lattice_ok, 0.0);

  json report;
  report["schema"] = 1;
  report["command"] = "all";
  report["seed"] = f.seed;
  report["tolerance"] = f.tol;
  report["checks"] = std::move(checks);
  report["pass"] = pass;
  report["elapsed_ms"] = elapsed_ms(start);
  return emit(report, f.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant gauge theory on the cotangent bundle of the complex projective plane"};
  app.require_subcommand(1);
  Flags f;

  const auto add_common = [&](CLI::App* cmd, bool with_seed = true) {
    cmd->add_option("--out", f.out, "write the report to a file instead of stdout");
    if (with_seed) cmd->add_option("--seed", f.seed, "seed for randomized sampling");
    return cmd;
  };
  const auto add_family_flags = [&](CLI::App* cmd) {
    cmd->add_option("--gauge", f.gauge, "gauge algebra")->check(CLI::IsMember({"u1", "so3"}));
    cmd->add_option("--n", f.n, "bundle degree");
    cmd->add_option("--family", f.family, "family tag: spin7-I|J|K, su4-I|J|K, sp2");
    cmd->add_option("--C0", f.C[0], "first constant");
    cmd->add_option("--C1", f.C[1], "second constant");
    cmd->add_option("--C2", f.C[2], "third constant");
    cmd->add_option("--C3", f.C[3], "fourth constant");
    return cmd;
  };

  auto* geometry = app.add_subcommand("geometry", "certify the coframe and metric identities");
  geometry->add_flag("--verify", "run the full identity suite (default)");
  geometry->add_option("--tol", f.tol, "certification tolerance");
  add_common(geometry);

  auto* bundles = app.add_subcommand("bundles", "report invariant bundles and extensions");
  add_common(bundles, false);

  auto* curvature = app.add_subcommand("curvature", "print the curvature of a connection");
  add_family_flags(curvature);
  curvature->add_option("--r", f.r_eval, "evaluation radius");
  curvature->add_option("--tol", f.tol, "certification tolerance");
  add_common(curvature);

  auto* derive = app.add_subcommand("derive-ode", "derive the radial system for a condition");
  derive->add_option("--family", f.family, "condition tag: spin7-I|J|K, su4-I|J|K, sp2")
      ->required();
  derive->add_option("--gauge", f.gauge, "gauge algebra")->check(CLI::IsMember({"u1", "so3"}));
  derive->add_option("--n", f.n, "bundle degree");
  add_common(derive, false);

  auto* solve = app.add_subcommand("solve", "integrate a derived system against its closed form");
  add_family_flags(solve);
  solve->get_option("--family")->required();
  solve->add_option("--r", f.r_target, "target radius");
  solve->add_option("--tol", f.endpoint_tol, "pass threshold on the endpoint error");
  add_common(solve, false);

  auto* verify = app.add_subcommand("verify-family", "certify a closed-form solution family");
  add_family_flags(verify);
  verify->get_option("--family")->required();
  verify->add_option("--tol", f.tol, "certification tolerance");
  add_common(verify);

  auto* extend = app.add_subcommand("extend", "test extension across the zero section");
  add_family_flags(extend);
  extend->get_option("--family")->required();
  extend->add_option("--tol", f.slope_eps, "slope tolerance for boundedness");
  add_common(extend, false);

  auto* classify = app.add_subcommand("classify", "evaluate all seven conditions on a connection");
  add_family_flags(classify);
  classify->add_option("--tol", f.tol, "certification tolerance");
  add_common(classify);

  auto* table = app.add_subcommand("table", "emit the classified circle-bundle solutions");
  table->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  add_common(table, false);

  auto* all = app.add_subcommand("all", "run every verification suite");
  all->add_option("--tol", f.tol, "certification tolerance");
  add_common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (geometry->parsed()) return run_geometry(f);
    if (bundles->parsed()) return run_bundles(f);
    if (curvature->parsed()) return run_curvature(f);
    if (derive->parsed()) return run_derive_ode(f);
    if (solve->parsed()) return run_solve(f);
    if (verify->parsed()) return run_verify_family(f);
    if (extend->parsed()) return run_extend(f);
    if (classify->parsed()) return run_classify(f);
    if (table->parsed()) return run_table(f);
    if (all->parsed()) return run_all(f);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json report;
    report["schema"] = 1;
    report["command"] = app.get_subcommands().front()->get_name();
    report["error"] = e.what();
    report["pass"] = false;
    std::cout << report.dump(2) << "\n";
    return 1;
  }
  return 2;
}
