#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "calabi/connections.hpp"
#include "calabi/geometry.hpp"
#include "calabi/sym_poly.hpp"

namespace calabi {

enum class ConditionKind { spin7, su4, sp2 };

inline std::string condition_kind_name(ConditionKind k) {
  switch (k) {
    case ConditionKind::spin7: return "spin7";
    case ConditionKind::su4: return "su4";
    case ConditionKind::sp2: return "sp2";
  }
  return {};
}

/// One of the seven first-order conditions star F = -Omega wedge F, carrying
/// its closed 4-form Omega in the orthonormal frame.
struct InstantonCondition {
  ConditionKind kind = ConditionKind::sp2;
  ComplexStructure L = ComplexStructure::I;
  OrthoForm four_form;

  std::string name() const {
    if (kind == ConditionKind::sp2) return "sp2";
    return condition_kind_name(kind) + "-" + structure_name(L);
  }

  static InstantonCondition spin7(const CalabiStructure& X, ComplexStructure L) {
    return {ConditionKind::spin7, L, X.phi_of(L)};
  }

  static InstantonCondition su4(const CalabiStructure& X, ComplexStructure L) {
    return {ConditionKind::su4, L, ScalarField::rational(1, 2) * X.omega_sq_of(L)};
  }

  static InstantonCondition sp2(const CalabiStructure& X) {
    return {ConditionKind::sp2, ComplexStructure::I, X.theta_e};
  }

  static InstantonCondition of(const CalabiStructure& X, ConditionKind kind, ComplexStructure L) {
    switch (kind) {
      case ConditionKind::spin7: return spin7(X, L);
      case ConditionKind::su4: return su4(X, L);
      case ConditionKind::sp2: return sp2(X);
    }
    throw std::invalid_argument("unknown condition kind");
  }

  /// Parses tags of the form "spin7-I", "su4-K", "sp2".
  static InstantonCondition parse(const CalabiStructure& X, std::string_view tag) {
    if (tag == "sp2") return sp2(X);
    const auto dash = tag.find('-');
    if (dash != std::string_view::npos) {
      const std::string_view head = tag.substr(0, dash), tail = tag.substr(dash + 1);
      if (head == "spin7") return spin7(X, structure_from_name(std::string(tail)));
      if (head == "su4") return su4(X, structure_from_name(std::string(tail)));
    }
    throw std::invalid_argument("unknown condition tag: " + std::string(tag));
  }

  /// The seven conditions in canonical order: Spin(7) I,J,K; SU(4) I,J,K; Sp(2).
  static std::vector<InstantonCondition> all(const CalabiStructure& X) {
    std::vector<InstantonCondition> out;
    for (auto L : {ComplexStructure::I, ComplexStructure::J, ComplexStructure::K})
      out.push_back(spin7(X, L));
    for (auto L : {ComplexStructure::I, ComplexStructure::J, ComplexStructure::K})
      out.push_back(su4(X, L));
    out.push_back(sp2(X));
    return out;
  }
};

/// Certifies d Omega = 0 for the condition 4-form.
inline IdentityCheck certify_condition_closed(const CalabiStructure& X,
                                              const InstantonCondition& cond,
                                              const IsZeroOptions& opts = {}) {
  IdentityCheck check{"d(" + cond.name() + " form) = 0", true, 0.0, 0.0};
  const InvariantForm mc = from_e_basis(cond.four_form, X.g);
  for (const auto& [key, c] : exterior_derivative(mc).terms()) {
    const ZeroCertificate z = certify_zero(c, opts);
    check.pass = check.pass && z.zero;
    check.max_abs = std::max(check.max_abs, z.max_abs);
    check.max_scale = std::max(check.max_scale, z.max_scale);
  }
  return check;
}

/// star F + Omega wedge F, one 6-form per gauge generator; identically zero
/// exactly when the connection satisfies the condition.
inline LieValued<OrthoForm> residual(const CurvatureForm& F, const InstantonCondition& cond) {
  LieValued<OrthoForm> out = LieValued<OrthoForm>::zero(F.e.generators());
  for (int i = 0; i < F.e.generators(); ++i)
    out.comp[i] = hodge_star(F.e.comp[i]) + wedge(cond.four_form, F.e.comp[i]);
  return out;
}

struct ResidualCertificate {
  bool zero = true;
  double max_abs = 0.0;
  double max_scale = 0.0;
  int samples = 0;
};

inline ResidualCertificate certify_residual(const CurvatureForm& F, const InstantonCondition& cond,
                                            const IsZeroOptions& opts = {}) {
  ResidualCertificate out;
  out.samples = opts.samples;
  for (const OrthoForm& comp : residual(F, cond).comp)
    for (const auto& [key, c] : comp.terms()) {
      const ZeroCertificate z = certify_zero(c, opts);
      out.zero = out.zero && z.zero;
      out.max_abs = std::max(out.max_abs, z.max_abs);
      out.max_scale = std::max(out.max_scale, z.max_scale);
    }
  return out;
}

/// First-order radial system dp/dr = M(r) p + b(r) for the unconstrained
/// unknowns, together with the algebraic constraints the condition forces.
struct ODESystem {
  std::string condition;
  GaugeAlgebra gauge = GaugeAlgebra::u1;
  long n = 0;
  std::vector<std::string> unknowns;
  std::vector<std::vector<ScalarField>> matrix;
  std::vector<ScalarField> inhomogeneity;
  std::vector<std::pair<std::string, ScalarField>> constraints;

  std::vector<double> rhs(double r, const std::vector<double>& p) const {
    const std::size_t m = unknowns.size();
    std::vector<double> out(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      double v = inhomogeneity[i].evaluate(r);
      for (std::size_t j = 0; j < m; ++j) v += matrix[i][j].evaluate(r) * p[j];
      out[i] = v;
    }
    return out;
  }
};

namespace detail {

/// Unknown layout: id = 3 * generator + slot with slots (kappa, nu1, nu2).
/// Single-axis shapes use generator 0 only.
inline std::string symbol_label(int id) {
  static const char* gen[3] = {"p", "q", "s"};
  return std::string(gen[id / 3]) + std::to_string(id % 3);
}

inline LieValued<SymForm> symbolic_one_form(GaugeAlgebra gauge, long n) {
  LieValued<SymForm> A = LieValued<SymForm>::zero(gauge_dim(gauge));
  const std::uint16_t slots[3] = {std::uint16_t(1) << int(Coframe::kappa),
                                  std::uint16_t(1) << int(Coframe::nu1),
                                  std::uint16_t(1) << int(Coframe::nu2)};
  const int symbol_generators = (gauge == GaugeAlgebra::so3 && n == 0) ? 3 : 1;
  for (int g = 0; g < symbol_generators; ++g)
    for (int j = 0; j < 3; ++j)
      A.comp[g] = A.comp[g] + SymForm::monomial(SymPoly::symbol(3 * g + j), slots[j]);
  if (n != 0)
    A.comp[0] = A.comp[0] + SymForm::monomial(SymPoly::constant(ScalarField::rational(n)),
                                              std::uint16_t(1) << int(Coframe::zeta));
  return A;
}

inline LieValued<SymForm> symbolic_curvature(GaugeAlgebra gauge, long n) {
  const LieValued<SymForm> A = symbolic_one_form(gauge, n);
  LieValued<SymForm> F = LieValued<SymForm>::zero(A.generators());
  for (int i = 0; i < A.generators(); ++i) F.comp[i] = exterior_derivative(A.comp[i]);
  if (gauge == GaugeAlgebra::so3) {
    const SymPoly half = SymPoly::constant(ScalarField::rational(1, 2));
    for (int a = 0; a < 3; ++a) {
      const int b = (a + 1) % 3, c = (a + 2) % 3;
      F.comp[a] = F.comp[a] + half * (wedge(A.comp[b], A.comp[c]) - wedge(A.comp[c], A.comp[b]));
    }
  }
  return F;
}

/// All coefficient equations of the symbolic residual 6-form.
inline std::vector<SymPoly> residual_equations(const CalabiStructure& X,
                                               const InstantonCondition& cond, GaugeAlgebra gauge,
                                               long n) {
  const LieValued<SymForm> F = symbolic_curvature(gauge, n);
  const SymEForm omega = lift_to_symbols(cond.four_form);
  std::vector<SymPoly> equations;
  for (int i = 0; i < F.generators(); ++i) {
    const SymEForm Fe = to_e_basis(F.comp[i], X.g);
    const SymEForm res = hodge_star(Fe) + wedge(omega, Fe);
    for (const auto& [key, c] : res.terms()) equations.push_back(c);
  }
  return equations;
}

}  // namespace detail

/// Derives the radial ODE system a condition imposes on the invariant ansatz:
/// substitutes symbolic unknowns into the residual, peels off the algebraic
/// constraints, and row-reduces the redundant remainder exactly.
inline ODESystem extract_ode(const CalabiStructure& X, const InstantonCondition& cond,
                             GaugeAlgebra gauge, long n) {
  if (gauge == GaugeAlgebra::so3 && n == 3)
    throw UnsupportedAnsatz("extract_ode: the degree-three rotation ansatz is not classified");
  const int symbol_count = (gauge == GaugeAlgebra::so3 && n == 0) ? 9 : 3;
  const std::vector<SymPoly> base = detail::residual_equations(X, cond, gauge, n);

  std::map<int, ScalarField> constraints;
  std::vector<int> unknown_ids;
  std::vector<std::vector<ScalarField>> reduced;
  std::vector<int> pivot_col;

  for (int round = 0;; ++round) {
    if (round >= 32) throw std::logic_error("extract_ode: constraint elimination did not settle");

    std::vector<SymPoly> eqs;
    for (const SymPoly& e0 : base) {
      SymPoly e = e0;
      for (const auto& [id, value] : constraints) e = e.substituted(id, value);
      if (!e.exactly_zero()) eqs.push_back(e);
    }

    // Equations touching a single underived unknown pin it algebraically.
    bool pinned = false;
    for (const SymPoly& e : eqs) {
      const std::vector<int> ids = e.symbols();
      if (ids.size() != 1 || ids[0] >= kDerivativeOffset) continue;
      if (!e.coefficient(SymMonomial::pair(ids[0], ids[0])).exactly_zero()) continue;
      const ScalarField c = e.coefficient(SymMonomial::single(ids[0]));
      if (c.exactly_zero()) continue;
      constraints[ids[0]] = -(e.coefficient(SymMonomial::constant()) / c);
      pinned = true;
      break;
    }
    if (pinned) continue;

    unknown_ids.clear();
    for (int id = 0; id < symbol_count; ++id)
      if (!constraints.count(id)) unknown_ids.push_back(id);
    const int m = int(unknown_ids.size());
    auto column_of = [&](int id) {
      const bool derived = id >= kDerivativeOffset;
      const int base_id = derived ? id - kDerivativeOffset : id;
      const auto it = std::find(unknown_ids.begin(), unknown_ids.end(), base_id);
      return int(it - unknown_ids.begin()) + (derived ? 0 : m);
    };

    // Affine rows over columns (Du_0.., u_0.., 1).
    std::vector<std::vector<ScalarField>> rows;
    for (const SymPoly& e : eqs) {
      std::vector<ScalarField> row(2 * m + 1, ScalarField::zero());
      for (const auto& [mon, c] : e.terms()) {
        if (mon.degree() == 2)
          throw std::logic_error("extract_ode: residual stays quadratic after constraints");
        const int col = mon.degree() == 0 ? 2 * m : column_of(mon.a);
        row[col] = row[col] + c;
      }
      rows.push_back(std::move(row));
    }

    reduced.clear();
    pivot_col.clear();
    std::size_t rank = 0;
    for (int col = 0; col < 2 * m && rank < rows.size(); ++col) {
      std::size_t pivot = rank;
      while (pivot < rows.size() && rows[pivot][col].exactly_zero()) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      const ScalarField inv = rows[rank][col].inverse();
      for (auto& v : rows[rank]) v = inv * v;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank || rows[i][col].exactly_zero()) continue;
        const ScalarField f = rows[i][col];
        for (int j = 0; j <= 2 * m; ++j) rows[i][j] = rows[i][j] - f * rows[rank][j];
      }
      pivot_col.push_back(col);
      ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (!rows[i][2 * m].exactly_zero())
        throw std::logic_error("extract_ode: inconsistent residual system");

    // Rows pivoted on an underived unknown are further algebraic constraints.
    bool algebraic = false;
    for (std::size_t i = 0; i < rank; ++i) {
      if (pivot_col[i] < m) continue;
      for (int j = 0; j < 2 * m; ++j)
        if (j != pivot_col[i] && !rows[i][j].exactly_zero())
          throw std::logic_error("extract_ode: coupled algebraic relation");
      constraints[unknown_ids[pivot_col[i] - m]] = -rows[i][2 * m];
      algebraic = true;
    }
    if (algebraic) continue;

    reduced.assign(rows.begin(), rows.begin() + rank);
    break;
  }

  ODESystem sys;
  sys.condition = cond.name();
  sys.gauge = gauge;
  sys.n = n;
  const int m = int(unknown_ids.size());
  for (int id : unknown_ids) sys.unknowns.push_back(detail::symbol_label(id));
  sys.matrix.assign(m, std::vector<ScalarField>(m, ScalarField::zero()));
  sys.inhomogeneity.assign(m, ScalarField::zero());
  std::vector<bool> governed(m, false);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const int k = pivot_col[i];
    for (int j = 0; j < m; ++j)
      if (j != k && !reduced[i][j].exactly_zero())
        throw std::logic_error("extract_ode: derivative columns remain coupled");
    for (int j = 0; j < m; ++j) sys.matrix[k][j] = -reduced[i][m + j];
    sys.inhomogeneity[k] = -reduced[i][2 * m];
    governed[k] = true;
  }
  if (std::find(governed.begin(), governed.end(), false) != governed.end())
    throw std::logic_error("extract_ode: an unknown is left ungoverned");
  for (const auto& [id, value] : constraints)
    sys.constraints.emplace_back(detail::symbol_label(id), value);
  return sys;
}

/// One of the closed-form solution families, with its defining constants and
/// the fully substituted connection.
struct SolutionFamily {
  ConditionKind kind = ConditionKind::sp2;
  ComplexStructure L = ComplexStructure::I;
  GaugeAlgebra gauge = GaugeAlgebra::u1;
  long n = 0;
  std::array<Rational, 3> constants{};
  ConnectionAnsatz ansatz;

  std::string condition_name() const {
    if (kind == ConditionKind::sp2) return "sp2";
    return condition_kind_name(kind) + "-" + structure_name(L);
  }
};

/// Solution families on the circle bundles (and their rotation-gauge lifts for
/// generic degree): the three-constant Spin(7) rows, their one-constant pHYM
/// subfamilies, and the unique Sp(2) solution.
inline SolutionFamily table_family(ConditionKind kind, ComplexStructure L, GaugeAlgebra gauge,
                                   long n, std::array<Rational, 3> C) {
  if (gauge == GaugeAlgebra::so3 && (n == 0 || n == 3))
    throw UnsupportedAnsatz("table_family: rotation gauge degrees 0 and 3 are separate shapes");
  switch (kind) {
    case ConditionKind::spin7: break;
    case ConditionKind::su4:
      if (L == ComplexStructure::I) C = {C[0], 0, 0};
      if (L == ComplexStructure::J) C = {0, 0, C[2]};
      if (L == ComplexStructure::K) C = {0, C[1], 0};
      break;
    case ConditionKind::sp2: C = {0, 0, 0}; break;
  }

  const ScalarField pole = ScalarField::radical(Radical::R4M1, -2);  // (r^4-1)^{-1}
  const ScalarField grow = ScalarField::radical(Radical::R4M1, 1);
  const ScalarField decay = ScalarField::radical(Radical::R4M1, -3);
  const ScalarField axis = Rational(-n) * ScalarField::r_power(-2);
  ScalarField p0, p1, p2;
  switch (L) {
    case ComplexStructure::I:
      p0 = axis * (ScalarField::one() + C[0] * pole);
      p1 = C[1] * grow;
      p2 = C[2] * decay;
      break;
    case ComplexStructure::J:
      p0 = axis - C[0] * ScalarField::radical(Radical::R4M1, 2) * ScalarField::r_power(-2);
      p1 = C[1] * decay;
      p2 = C[2] * decay;
      break;
    case ComplexStructure::K:
      p0 = axis * (ScalarField::one() + C[0] * pole);
      p1 = C[1] * decay;
      p2 = C[2] * grow;
      break;
  }

  SolutionFamily fam;
  fam.kind = kind;
  fam.L = L;
  fam.gauge = gauge;
  fam.n = n;
  fam.constants = C;
  fam.ansatz = gauge == GaugeAlgebra::u1 ? ConnectionAnsatz::abelian(n, p0, p1, p2)
                                         : ConnectionAnsatz::rotation(n, p0, p1, p2);
  return fam;
}

/// The three-constant pHYM families on the trivial rotation bundle: the
/// I-family lives on the kappa legs, the J- and K-families on nu2 and nu1.
inline SolutionFamily e0_family(ComplexStructure L, std::array<Rational, 3> C) {
  ScalarField shape;
  int slot = 0;
  switch (L) {
    case ComplexStructure::I:
      shape = Rational(-1) * ScalarField::r_power(-2) * ScalarField::radical(Radical::R4M1, -2);
      slot = 0;
      break;
    case ComplexStructure::J:
      shape = ScalarField::radical(Radical::R4M1, -3);
      slot = 2;
      break;
    case ComplexStructure::K:
      shape = ScalarField::radical(Radical::R4M1, -3);
      slot = 1;
      break;
  }
  std::array<ScalarField, 3> p{}, q{}, s{};
  p[slot] = C[0] * shape;
  q[slot] = C[1] * shape;
  s[slot] = C[2] * shape;

  SolutionFamily fam;
  fam.kind = ConditionKind::su4;
  fam.L = L;
  fam.gauge = GaugeAlgebra::so3;
  fam.n = 0;
  fam.constants = C;
  fam.ansatz = ConnectionAnsatz::rotation_flat(p, q, s);
  return fam;
}

/// Dispatcher over every classified family. The constant slots follow the
/// command-line flags C0..C3: circle-bundle families read C0, C1, C2 and the
/// trivial-rotation-bundle families read C1, C2, C3.
inline SolutionFamily closed_form(ConditionKind kind, ComplexStructure L, GaugeAlgebra gauge,
                                  long n, std::array<Rational, 4> C) {
  if (gauge == GaugeAlgebra::so3 && n == 3)
    throw UnsupportedAnsatz("closed_form: the degree-three rotation ansatz is not classified");
  if (gauge == GaugeAlgebra::so3 && n == 0) {
    if (kind == ConditionKind::su4) return e0_family(L, {C[1], C[2], C[3]});
    if (kind == ConditionKind::sp2) {
      SolutionFamily fam = e0_family(L, {0, 0, 0});
      fam.kind = ConditionKind::sp2;
      return fam;
    }
    throw UnsupportedAnsatz(
        "closed_form: Spin(7) families on the trivial rotation bundle are not classified");
  }
  return table_family(kind, L, gauge, n, {C[0], C[1], C[2]});
}

struct FamilyReport {
  std::string condition;
  bool zero = false;
  double max_abs = 0.0;
  double max_scale = 0.0;
  int samples = 0;
};

/// Substitutes a family into its own condition's residual and certifies zero.
inline FamilyReport verify_solution(const CalabiStructure& X, const SolutionFamily& fam,
                                    const IsZeroOptions& opts = {}) {
  const CurvatureForm F = curvature(fam.ansatz, X.g);
  const InstantonCondition cond = InstantonCondition::of(X, fam.kind, fam.L);
  const ResidualCertificate cert = certify_residual(F, cond, opts);
  return {cond.name(), cert.zero, cert.max_abs, cert.max_scale, cert.samples};
}

struct StepFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Trajectory {
  std::vector<double> radii;
  std::vector<std::vector<double>> values;
};

/// Adaptive 4th/5th-order integration of dp/dr = M(r) p + b(r).
inline Trajectory integrate(const ODESystem& sys, double r0, std::vector<double> p0, double r1,
                            double tol = 1e-10) {
  if (r0 <= 1.0 || r1 <= 1.0) throw DomainError("integrate: the radial domain is r > 1");
  if (p0.size() != sys.unknowns.size())
    throw std::invalid_argument("integrate: initial state does not match the unknowns");
  namespace ode = boost::numeric::odeint;
  using State = std::vector<double>;
  auto rhs = [&sys](const State& p, State& dpdr, double r) { dpdr = sys.rhs(r, p); };
  auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_cash_karp54<State>());

  Trajectory out;
  out.radii.push_back(r0);
  out.values.push_back(p0);
  if (sys.unknowns.empty() || r0 == r1) return out;
  const double dir = r1 > r0 ? 1.0 : -1.0;
  double r = r0;
  double dt = dir * std::min(0.1, std::abs(r1 - r0));
  State p = std::move(p0);
  for (std::size_t attempts = 0; dir * (r1 - r) > 1e-13; ++attempts) {
    if (attempts > 1000000 || std::abs(dt) < 1e-14)
      throw StepFailure("integrate: step size underflow at r = " + std::to_string(r));
    if (dir * (r + dt - r1) > 0) dt = r1 - r;
    if (stepper.try_step(rhs, p, r, dt) == ode::success) {
      out.radii.push_back(r);
      out.values.push_back(p);
    }
  }
  return out;
}

struct NoBundleExtension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExtensionReport {
  bool extends = false;
  double slope = 0.0;
  bool analytic_extends = false;
  bool consistent = false;
  std::vector<double> radii;
  std::vector<double> norm_values;
};

/// The constants a family must drop for its curvature to stay bounded at the
/// zero section. For degree zero the axis constant never enters the connection.
inline bool analytic_extension_criterion(const SolutionFamily& fam) {
  const bool c0 = fam.constants[0] == 0;
  const bool c1 = fam.constants[1] == 0;
  const bool c2 = fam.constants[2] == 0;
  if (fam.gauge == GaugeAlgebra::so3 && fam.n == 0) return c0 && c1 && c2;
  if (fam.kind == ConditionKind::sp2) return true;
  switch (fam.L) {
    case ComplexStructure::I: return (fam.n == 0 || c0) && c2;
    case ComplexStructure::J: return c1 && c2;
    case ComplexStructure::K: return (fam.n == 0 || c0) && c1;
  }
  return false;
}

/// Boundedness probe for extension across the zero section: samples |F|^2 on
/// r - 1 = 10^{-1} .. 10^{-6} and fits the log-log slope. Bounded curvature
/// gives slope near 0; the generic blow-up gives slope near -4.
inline ExtensionReport extension_check(const CalabiStructure& X, const SolutionFamily& fam,
                                       double eps = 0.1) {
  if (fam.n % 2 != 0)
    throw NoBundleExtension("the bundle extends across the zero section only for even degree");
  const ScalarField norm = curvature_norm_sq(curvature(fam.ansatz, X.g));

  ExtensionReport rep;
  double peak = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double r = 1.0 + std::pow(10.0, -k);
    rep.radii.push_back(r);
    rep.norm_values.push_back(norm.evaluate(r));
    peak = std::max(peak, rep.norm_values.back());
  }
  if (peak < 1e-30) {
    rep.slope = 0.0;
    rep.extends = true;
  } else {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int m = int(rep.radii.size());
    for (int i = 0; i < m; ++i) {
      const double x = std::log10(rep.radii[i] - 1.0);
      const double y = std::log10(std::max(rep.norm_values[i], 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    rep.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    rep.extends = rep.slope >= -eps;
  }
  rep.analytic_extends = analytic_extension_criterion(fam);
  rep.consistent = rep.extends == rep.analytic_extends;
  return rep;
}

/// Evaluation of a connection against all seven conditions, with the
/// implication lattice between them checked on the outcome.
struct ClassificationReport {
  static constexpr std::array<const char*, 7> names = {
      "spin7-I", "spin7-J", "spin7-K", "su4-I", "su4-J", "su4-K", "sp2"};
  std::array<bool, 7> satisfied{};
  std::array<double, 7> max_abs{};
  bool lattice_consistent = false;
};

inline ClassificationReport cross_equivalences(const CalabiStructure& X,
                                               const ConnectionAnsatz& A,
                                               const IsZeroOptions& opts = {}) {
  const CurvatureForm F = curvature(A, X.g);
  const std::vector<InstantonCondition> conds = InstantonCondition::all(X);
  ClassificationReport rep;
  for (std::size_t i = 0; i < conds.size(); ++i) {
    const ResidualCertificate cert = certify_residual(F, conds[i], opts);
    rep.satisfied[i] = cert.zero;
    rep.max_abs[i] = cert.max_abs;
  }
  const bool i7 = rep.satisfied[0], j7 = rep.satisfied[1], k7 = rep.satisfied[2];
  const bool i4 = rep.satisfied[3], j4 = rep.satisfied[4], k4 = rep.satisfied[5];
  const bool sp = rep.satisfied[6];
  rep.lattice_consistent = (i4 == (i7 && k7)) && (j4 == (j7 && i7)) && (k4 == (k7 && j7)) &&
                           (sp == (i7 && j7 && k7)) && (sp == (i4 && j4)) && (sp == (j4 && k4)) &&
                           (sp == (i4 && k4));
  return rep;
}

}  // namespace calabi
