#include <doctest.h>

#include <array>
#include <cmath>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "calabi/instantons.hpp"

using namespace calabi;

namespace {

const CalabiStructure& space() {
  static const CalabiStructure X = build_calabi();
  return X;
}

ScalarField rad(int half) { return ScalarField::radical(Radical::R4M1, half); }

bool zero(const ScalarField& f) { return is_zero(f); }

constexpr std::uint16_t kVol = 0xff;

ScalarField pair_against(const OrthoForm& six_form, std::initializer_list<int> slots) {
  return wedge(six_form, OrthoForm::basis(slots)).coefficient(kVol);
}

std::map<std::string, ScalarField> constraint_map(const ODESystem& sys) {
  return {sys.constraints.begin(), sys.constraints.end()};
}

/// 2(1 - 3r^4) / (r(r^4-1)), the axis coefficient shared by three systems.
ScalarField axis_rate() {
  const ScalarField num = ScalarField::rational(2) - ScalarField::rational(6) * ScalarField::r_power(4);
  return num / (ScalarField::r() * rad(2));
}

ScalarField decay_rate() { return ScalarField::rational(-6) * ScalarField::r_power(3) * rad(-2); }

ScalarField growth_rate() { return ScalarField::rational(2) * ScalarField::r_power(3) * rad(-2); }

ScalarField axis_source(long n) {
  return ScalarField::rational(-4 * n) * ScalarField::r() * rad(-2);
}

/// Degree-20 polynomial governing the axis contribution to |F|^2 near r = 1.
ScalarField axis_norm_poly(const Rational& C0) {
  using SF = ScalarField;
  const Rational dev = C0 - 1;
  return SF::r_power(20) - Rational(3) * SF::r_power(16) +
         (Rational(2) * (C0 + 1)) * SF::r_power(12) +
         (Rational(2) * (Rational(3) * C0 * C0 - Rational(3) * C0 + 1)) * SF::r_power(8) -
         (Rational(3) * dev * dev) * SF::r_power(4) + SF::from_rational(dev * dev);
}

std::vector<double> family_state(const SolutionFamily& fam, double r) {
  return {fam.ansatz.p[0].evaluate(r), fam.ansatz.p[1].evaluate(r), fam.ansatz.p[2].evaluate(r)};
}

}  // namespace

TEST_CASE("condition four-forms are closed and named consistently") {
  const CalabiStructure& X = space();
  const std::vector<InstantonCondition> conds = InstantonCondition::all(X);
  REQUIRE(conds.size() == 7);
  for (std::size_t i = 0; i < conds.size(); ++i) {
    CAPTURE(conds[i].name());
    CHECK(conds[i].name() == ClassificationReport::names[i]);
    const IdentityCheck check = certify_condition_closed(X, conds[i]);
    CHECK(check.pass);
    CHECK(InstantonCondition::parse(X, conds[i].name()).name() == conds[i].name());
  }
  CHECK_THROWS_AS(InstantonCondition::parse(X, "hym"), std::invalid_argument);
  CHECK_THROWS_AS(InstantonCondition::parse(X, "spin7-L"), std::invalid_argument);
}

TEST_CASE("residual components pair against the frame two-forms") {
  const CalabiStructure& X = space();
  using SF = ScalarField;
  const std::array<SF, 3> p{Rational(2) * SF::r_power(-1), SF::r_power(-2),
                            Rational(3) * SF::r_power(-3)};
  const std::array<SF, 3> q{SF::r_power(-1), Rational(-2) * SF::r_power(-1), SF::r_power(-4)};
  const std::array<SF, 3> s{Rational(3) * SF::r_power(-2), SF::r_power(-3),
                            Rational(-1) * SF::r_power(-1)};
  const CurvatureForm F = curvature(ConnectionAnsatz::rotation_flat(p, q, s), X.g);

  const SF two_over_ab = Rational(4) * rad(-1);
  const SF axis_pair = Rational(4) * SF::r_power(2) * rad(-2);
  const std::array<std::array<SF, 3>, 3> x{p, q, s};

  const LieValued<OrthoForm> HI = residual(F, InstantonCondition::su4(X, ComplexStructure::I));
  for (int j = 0; j < 3; ++j) {
    CAPTURE(j);
    CHECK(zero(pair_against(HI.comp[j], {1, 4}) + two_over_ab * x[j][2]));
    CHECK(zero(pair_against(HI.comp[j], {2, 4}) - two_over_ab * x[j][1]));
  }

  const LieValued<OrthoForm> HJ = residual(F, InstantonCondition::su4(X, ComplexStructure::J));
  CHECK(zero(pair_against(HJ.comp[0], {1, 3}) - two_over_ab * p[1]));
  CHECK(zero(pair_against(HJ.comp[0], {3, 4}) - axis_pair * p[0]));
  CHECK(zero(pair_against(HJ.comp[1], {1, 3}) - two_over_ab * q[1]));
  CHECK(zero(pair_against(HJ.comp[1], {1, 2}) + axis_pair * q[0]));
  CHECK(zero(pair_against(HJ.comp[2], {2, 4}) - two_over_ab * s[1]));
  CHECK(zero(pair_against(HJ.comp[2], {3, 4}) - axis_pair * s[0]));
}

TEST_CASE("mechanical reduction recovers the radial systems") {
  const CalabiStructure& X = space();

  SUBCASE("first structure on the circle bundles") {
    const ODESystem sys =
        extract_ode(X, InstantonCondition::spin7(X, ComplexStructure::I), GaugeAlgebra::u1, 2);
    REQUIRE(sys.unknowns == std::vector<std::string>{"p0", "p1", "p2"});
    CHECK(sys.constraints.empty());
    CHECK(zero(sys.matrix[0][0] - axis_rate()));
    CHECK(zero(sys.matrix[1][1] - growth_rate()));
    CHECK(zero(sys.matrix[2][2] - decay_rate()));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) CHECK(sys.matrix[i][j].exactly_zero());
    CHECK(zero(sys.inhomogeneity[0] - axis_source(2)));
    CHECK(sys.inhomogeneity[1].exactly_zero());
    CHECK(sys.inhomogeneity[2].exactly_zero());
  }

  SUBCASE("second structure on the circle bundles") {
    const ODESystem sys =
        extract_ode(X, InstantonCondition::spin7(X, ComplexStructure::J), GaugeAlgebra::u1, 2);
    REQUIRE(sys.unknowns == std::vector<std::string>{"p0", "p1", "p2"});
    const ScalarField expected =
        (ScalarField::rational(2) * ScalarField::r_power(4) + ScalarField::rational(2)) /
        (ScalarField::r() * rad(2));
    CHECK(zero(sys.matrix[0][0] - expected));
    CHECK(zero(sys.matrix[1][1] - decay_rate()));
    CHECK(zero(sys.matrix[2][2] - decay_rate()));
    CHECK(zero(sys.inhomogeneity[0] + axis_source(2)));
  }

  SUBCASE("third structure on the circle bundles") {
    const ODESystem sys =
        extract_ode(X, InstantonCondition::spin7(X, ComplexStructure::K), GaugeAlgebra::u1, 2);
    REQUIRE(sys.unknowns == std::vector<std::string>{"p0", "p1", "p2"});
    CHECK(zero(sys.matrix[0][0] - axis_rate()));
    CHECK(zero(sys.matrix[1][1] - decay_rate()));
    CHECK(zero(sys.matrix[2][2] - growth_rate()));
    CHECK(zero(sys.inhomogeneity[0] - axis_source(2)));
  }

  SUBCASE("holomorphic conditions pin the transverse components") {
    const ODESystem sys =
        extract_ode(X, InstantonCondition::su4(X, ComplexStructure::I), GaugeAlgebra::u1, -4);
    REQUIRE(sys.unknowns == std::vector<std::string>{"p0"});
    const auto pinned = constraint_map(sys);
    REQUIRE(pinned.size() == 2);
    CHECK(pinned.at("p1").exactly_zero());
    CHECK(pinned.at("p2").exactly_zero());
    CHECK(zero(sys.matrix[0][0] - axis_rate()));
    CHECK(zero(sys.inhomogeneity[0] - axis_source(-4)));
  }

  SUBCASE("the strongest condition leaves no freedom") {
    const ODESystem sys = extract_ode(X, InstantonCondition::sp2(X), GaugeAlgebra::u1, 2);
    CHECK(sys.unknowns.empty());
    const auto pinned = constraint_map(sys);
    REQUIRE(pinned.size() == 3);
    CHECK(zero(pinned.at("p0") + ScalarField::rational(2) * ScalarField::r_power(-2)));
    CHECK(pinned.at("p1").exactly_zero());
    CHECK(pinned.at("p2").exactly_zero());
  }

  SUBCASE("generic rotation degree reduces to the abelian system") {
    const ODESystem sys =
        extract_ode(X, InstantonCondition::spin7(X, ComplexStructure::I), GaugeAlgebra::so3, 2);
    REQUIRE(sys.unknowns == std::vector<std::string>{"p0", "p1", "p2"});
    CHECK(zero(sys.matrix[0][0] - axis_rate()));
    CHECK(zero(sys.matrix[1][1] - growth_rate()));
    CHECK(zero(sys.matrix[2][2] - decay_rate()));
    CHECK(zero(sys.inhomogeneity[0] - axis_source(2)));
  }

  SUBCASE("trivial rotation bundle, first holomorphic condition") {
    const ODESystem sys =
        extract_ode(X, InstantonCondition::su4(X, ComplexStructure::I), GaugeAlgebra::so3, 0);
    REQUIRE(sys.unknowns == std::vector<std::string>{"p0", "q0", "s0"});
    const auto pinned = constraint_map(sys);
    REQUIRE(pinned.size() == 6);
    for (const char* name : {"p1", "p2", "q1", "q2", "s1", "s2"})
      CHECK(pinned.at(name).exactly_zero());
    for (int i = 0; i < 3; ++i) {
      CHECK(zero(sys.matrix[i][i] - axis_rate()));
      CHECK(sys.inhomogeneity[i].exactly_zero());
      for (int j = 0; j < 3; ++j)
        if (i != j) CHECK(sys.matrix[i][j].exactly_zero());
    }
  }

  SUBCASE("trivial rotation bundle, second holomorphic condition") {
    const ODESystem sys =
        extract_ode(X, InstantonCondition::su4(X, ComplexStructure::J), GaugeAlgebra::so3, 0);
    REQUIRE(sys.unknowns == std::vector<std::string>{"p2", "q2", "s2"});
    const auto pinned = constraint_map(sys);
    REQUIRE(pinned.size() == 6);
    for (const char* name : {"p0", "p1", "q0", "q1", "s0", "s1"})
      CHECK(pinned.at(name).exactly_zero());
    for (int i = 0; i < 3; ++i) CHECK(zero(sys.matrix[i][i] - decay_rate()));
  }

  SUBCASE("trivial rotation bundle, third holomorphic condition") {
    const ODESystem sys =
        extract_ode(X, InstantonCondition::su4(X, ComplexStructure::K), GaugeAlgebra::so3, 0);
    REQUIRE(sys.unknowns == std::vector<std::string>{"p1", "q1", "s1"});
    for (int i = 0; i < 3; ++i) CHECK(zero(sys.matrix[i][i] - decay_rate()));
  }

  SUBCASE("the degree-three shape is rejected") {
    CHECK_THROWS_AS(
        extract_ode(X, InstantonCondition::sp2(X), GaugeAlgebra::so3, 3), UnsupportedAnsatz);
  }
}

TEST_CASE("closed-form families satisfy their own conditions") {
  const CalabiStructure& X = space();
  for (auto L : {ComplexStructure::I, ComplexStructure::J, ComplexStructure::K}) {
    CAPTURE(structure_name(L));
    CHECK(verify_solution(X, table_family(ConditionKind::spin7, L, GaugeAlgebra::u1, 2, {1, -2, 3}))
              .zero);
    CHECK(verify_solution(X, table_family(ConditionKind::su4, L, GaugeAlgebra::u1, -4, {2, 5, 7}))
              .zero);
    CHECK(verify_solution(X, table_family(ConditionKind::sp2, L, GaugeAlgebra::u1, 3, {9, 9, 9}))
              .zero);
    CHECK(verify_solution(X, table_family(ConditionKind::spin7, L, GaugeAlgebra::so3, 2, {1, 1, 1}))
              .zero);
    CHECK(verify_solution(X, e0_family(L, {1, -2, 3})).zero);
  }

  SUBCASE("deformed profiles are rejected") {
    const SolutionFamily fam =
        table_family(ConditionKind::spin7, ComplexStructure::I, GaugeAlgebra::u1, 2, {1, 1, 1});
    const InstantonCondition cond = InstantonCondition::spin7(X, ComplexStructure::I);
    const ConnectionAnsatz scaled = ConnectionAnsatz::abelian(
        2, Rational(101, 100) * fam.ansatz.p[0], fam.ansatz.p[1], fam.ansatz.p[2]);
    CHECK_FALSE(certify_residual(curvature(scaled, X.g), cond).zero);
    const ConnectionAnsatz shifted = ConnectionAnsatz::abelian(
        2, fam.ansatz.p[0], fam.ansatz.p[1] + ScalarField::rational(1, 100) * ScalarField::r(),
        fam.ansatz.p[2]);
    CHECK_FALSE(certify_residual(curvature(shifted, X.g), cond).zero);
  }

  SUBCASE("unclassified shapes are rejected") {
    CHECK_THROWS_AS(table_family(ConditionKind::spin7, ComplexStructure::I, GaugeAlgebra::so3, 3,
                                 {0, 0, 0}),
                    UnsupportedAnsatz);
    CHECK_THROWS_AS(table_family(ConditionKind::spin7, ComplexStructure::I, GaugeAlgebra::so3, 0,
                                 {0, 0, 0}),
                    UnsupportedAnsatz);
    CHECK_THROWS_AS(closed_form(ConditionKind::spin7, ComplexStructure::I, GaugeAlgebra::so3, 0,
                                {0, 0, 0, 0}),
                    UnsupportedAnsatz);
  }

  SUBCASE("the dispatcher routes by gauge and degree") {
    const SolutionFamily circle = closed_form(ConditionKind::spin7, ComplexStructure::K,
                                              GaugeAlgebra::u1, 2, {1, 2, 3, 9});
    CHECK(circle.constants == std::array<Rational, 3>{1, 2, 3});
    const SolutionFamily trivial = closed_form(ConditionKind::su4, ComplexStructure::J,
                                               GaugeAlgebra::so3, 0, {9, 1, 2, 3});
    CHECK(trivial.constants == std::array<Rational, 3>{1, 2, 3});
    CHECK(verify_solution(X, trivial).zero);
    const SolutionFamily flat = closed_form(ConditionKind::sp2, ComplexStructure::I,
                                            GaugeAlgebra::so3, 0, {0, 9, 9, 9});
    CHECK(curvature_norm_sq(curvature(flat.ansatz, X.g)).exactly_zero());
  }
}

TEST_CASE("the seven conditions intersect as a lattice") {
  const CalabiStructure& X = space();

  SUBCASE("a generic three-constant family meets only its own condition") {
    const auto rep = cross_equivalences(
        X, table_family(ConditionKind::spin7, ComplexStructure::I, GaugeAlgebra::u1, 2, {1, 2, 3})
               .ansatz);
    CHECK(rep.satisfied ==
          std::array<bool, 7>{true, false, false, false, false, false, false});
    CHECK(rep.lattice_consistent);
  }

  SUBCASE("a holomorphic family meets two of the larger conditions") {
    const auto rep = cross_equivalences(
        X, table_family(ConditionKind::su4, ComplexStructure::I, GaugeAlgebra::u1, 2, {5, 9, 9})
               .ansatz);
    CHECK(rep.satisfied == std::array<bool, 7>{true, false, true, true, false, false, false});
    CHECK(rep.lattice_consistent);
  }

  SUBCASE("the distinguished solution meets every condition") {
    const auto rep = cross_equivalences(
        X, table_family(ConditionKind::sp2, ComplexStructure::I, GaugeAlgebra::u1, 2, {0, 0, 0})
               .ansatz);
    CHECK(rep.satisfied == std::array<bool, 7>{true, true, true, true, true, true, true});
    CHECK(rep.lattice_consistent);
  }

  SUBCASE("an arbitrary ansatz meets none") {
    const auto rep = cross_equivalences(
        X, ConnectionAnsatz::abelian(2, ScalarField::r_power(-1), ScalarField::r_power(-2),
                                     ScalarField::r_power(-3)));
    CHECK(rep.satisfied ==
          std::array<bool, 7>{false, false, false, false, false, false, false});
    CHECK(rep.lattice_consistent);
  }
}

TEST_CASE("numerical integration follows the closed forms") {
  const CalabiStructure& X = space();
  const ODESystem sys =
      extract_ode(X, InstantonCondition::spin7(X, ComplexStructure::I), GaugeAlgebra::u1, 2);

  SUBCASE("a full three-constant member is tracked across the annulus") {
    const SolutionFamily fam =
        table_family(ConditionKind::spin7, ComplexStructure::I, GaugeAlgebra::u1, 2, {1, 1, 1});
    const Trajectory traj = integrate(sys, 2.0, family_state(fam, 2.0), 5.0);
    REQUIRE(traj.radii.back() == doctest::Approx(5.0).epsilon(1e-12));
    const std::vector<double> expect = family_state(fam, 5.0);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(traj.values.back()[i] - expect[i]) < 1e-6);
  }

  SUBCASE("the constants parameterize the full solution space") {
    const std::array<std::array<Rational, 3>, 4> draws{
        {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (const auto& C : draws) {
      const SolutionFamily fam =
          table_family(ConditionKind::spin7, ComplexStructure::I, GaugeAlgebra::u1, 2, C);
      const Trajectory traj = integrate(sys, 2.0, family_state(fam, 2.0), 3.0);
      const std::vector<double> expect = family_state(fam, 3.0);
      for (int i = 0; i < 3; ++i)
        CHECK(std::abs(traj.values.back()[i] - expect[i]) < 1e-7);
    }
    const SolutionFamily origin =
        table_family(ConditionKind::spin7, ComplexStructure::I, GaugeAlgebra::u1, 2, {0, 0, 0});
    const std::vector<double> base = family_state(origin, 2.0);
    double det = 1.0;
    for (int k = 0; k < 3; ++k) {
      std::array<Rational, 3> C{};
      C[k] = 1;
      const SolutionFamily fam =
          table_family(ConditionKind::spin7, ComplexStructure::I, GaugeAlgebra::u1, 2, C);
      det *= family_state(fam, 2.0)[k] - base[k];
    }
    CHECK(std::abs(det) > 1e-12);
  }

  SUBCASE("the axis mode of the second structure is tracked") {
    const ODESystem sysJ =
        extract_ode(X, InstantonCondition::spin7(X, ComplexStructure::J), GaugeAlgebra::u1, 1);
    const SolutionFamily fam =
        table_family(ConditionKind::spin7, ComplexStructure::J, GaugeAlgebra::u1, 1, {1, 0, 0});
    const Trajectory traj = integrate(sysJ, 2.0, family_state(fam, 2.0), 4.0);
    const std::vector<double> expect = family_state(fam, 4.0);
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(traj.values.back()[i] - expect[i]) < 1e-6);
  }

  SUBCASE("constrained systems integrate on the reduced state") {
    const ODESystem sys4 =
        extract_ode(X, InstantonCondition::su4(X, ComplexStructure::I), GaugeAlgebra::u1, 2);
    const Trajectory traj = integrate(sys4, 2.0, {-0.5}, 5.0);
    CHECK(std::abs(traj.values.back()[0] + 2.0 / 25.0) < 1e-8);
    const ODESystem none = extract_ode(X, InstantonCondition::sp2(X), GaugeAlgebra::u1, 2);
    const Trajectory still = integrate(none, 2.0, {}, 5.0);
    CHECK(still.radii.size() == 1);
  }

  SUBCASE("domain and state guards") {
    CHECK_THROWS_AS(integrate(sys, 0.5, {0, 0, 0}, 5.0), DomainError);
    CHECK_THROWS_AS(integrate(sys, 2.0, {0, 0}, 5.0), std::invalid_argument);
  }
}

TEST_CASE("curvature norms of the closed-form families") {
  const CalabiStructure& X = space();
  using SF = ScalarField;

  SUBCASE("first structure") {
    const SolutionFamily fam =
        table_family(ConditionKind::spin7, ComplexStructure::I, GaugeAlgebra::u1, 2, {1, -2, 3});
    const SF norm = curvature_norm_sq(curvature(fam.ansatz, X.g));
    const SF expected = SF::rational(64) + Rational(432) * rad(-8) +
                        Rational(32) * axis_norm_poly(1) * SF::r_power(-8) * rad(-8);
    CHECK(zero(norm - expected));
  }

  SUBCASE("second structure") {
    const SolutionFamily fam =
        table_family(ConditionKind::spin7, ComplexStructure::J, GaugeAlgebra::u1, -2, {3, 1, 2});
    const SF norm = curvature_norm_sq(curvature(fam.ansatz, X.g));
    const SF r4p1 = SF::r_power(4) + SF::one();
    const SF axis_sq = Rational(2) * SF::r_power(8) + SF::r_power(4) + SF::one();
    const SF expected = Rational(240) * rad(-8) +
                        Rational(8) * SF::r_power(-8) *
                            (Rational(9) * axis_sq + Rational(12) * r4p1) +
                        Rational(32) * r4p1 * SF::r_power(-8);
    CHECK(zero(norm - expected));
  }

  SUBCASE("third structure") {
    const SolutionFamily fam =
        table_family(ConditionKind::spin7, ComplexStructure::K, GaugeAlgebra::u1, 2, {2, 1, -3});
    const SF norm = curvature_norm_sq(curvature(fam.ansatz, X.g));
    const SF expected = Rational(48) * rad(-8) + SF::rational(144) +
                        Rational(32) * axis_norm_poly(2) * SF::r_power(-8) * rad(-8);
    CHECK(zero(norm - expected));
  }

  SUBCASE("trivial rotation bundle, per-generator split") {
    const SolutionFamily famI = e0_family(ComplexStructure::I, {1, 2, 3});
    const std::vector<SF> partsI =
        curvature_norm_sq_components(curvature(famI.ansatz, X.g));
    const SF shape = (Rational(6) * SF::r_power(8) - Rational(3) * SF::r_power(4) + SF::one()) *
                     SF::r_power(-8) * rad(-8);
    const Rational weights[3] = {1, 4, 9};
    for (int j = 0; j < 3; ++j)
      CHECK(zero(partsI[j] - Rational(8) * weights[j] * shape));
    CHECK(partsI[0].evaluate(2.0) == doctest::Approx(11912.0 / 12960000.0).epsilon(1e-10));

    const SolutionFamily famJ = e0_family(ComplexStructure::J, {2, -1, 3});
    const std::vector<SF> partsJ =
        curvature_norm_sq_components(curvature(famJ.ansatz, X.g));
    const Rational wJ[3] = {4, 1, 9};
    for (int j = 0; j < 3; ++j)
      CHECK(zero(partsJ[j] - Rational(48) * wJ[j] * rad(-8)));
  }
}

TEST_CASE("extension across the zero section") {
  const CalabiStructure& X = space();
  auto circle = [&](ComplexStructure L, long n, std::array<Rational, 3> C) {
    return extension_check(X, table_family(ConditionKind::spin7, L, GaugeAlgebra::u1, n, C));
  };

  SUBCASE("the bounded growing mode extends") {
    const ExtensionReport rep = circle(ComplexStructure::I, 2, {0, 1, 0});
    CHECK(rep.extends);
    CHECK(rep.analytic_extends);
    CHECK(rep.consistent);
    CHECK(std::abs(rep.slope) < 0.1);
  }

  SUBCASE("the axis deformation blows up on the first structure") {
    const ExtensionReport rep = circle(ComplexStructure::I, 2, {1, 0, 0});
    CHECK_FALSE(rep.extends);
    CHECK(rep.slope < -3.5);
    CHECK_FALSE(rep.analytic_extends);
    CHECK(rep.consistent);
  }

  SUBCASE("the decaying radical mode always blows up") {
    const ExtensionReport rep = circle(ComplexStructure::K, 2, {0, 1, 0});
    CHECK_FALSE(rep.extends);
    CHECK(rep.slope < -3.5);
    CHECK(rep.consistent);
  }

  SUBCASE("the axis deformation stays bounded on the second structure") {
    const ExtensionReport rep = circle(ComplexStructure::J, 2, {5, 0, 0});
    CHECK(rep.extends);
    CHECK(rep.analytic_extends);
    CHECK(rep.consistent);
  }

  SUBCASE("the distinguished solution and the flat connection extend") {
    const ExtensionReport sp = extension_check(
        X, table_family(ConditionKind::sp2, ComplexStructure::I, GaugeAlgebra::u1, 2, {7, 7, 7}));
    CHECK(sp.extends);
    CHECK(sp.analytic_extends);
    CHECK(sp.consistent);
    const ExtensionReport flat = circle(ComplexStructure::I, 0, {0, 0, 0});
    CHECK(flat.extends);
    CHECK(flat.slope == 0.0);
  }

  SUBCASE("the trivial rotation bundle admits only the flat extension") {
    const ExtensionReport rep = extension_check(X, e0_family(ComplexStructure::I, {1, 0, 0}));
    CHECK_FALSE(rep.extends);
    CHECK(rep.slope < -3.5);
    CHECK_FALSE(rep.analytic_extends);
    CHECK(rep.consistent);
    const ExtensionReport zero_member =
        extension_check(X, e0_family(ComplexStructure::J, {0, 0, 0}));
    CHECK(zero_member.extends);
    CHECK(zero_member.analytic_extends);
  }

  SUBCASE("odd degrees never extend") {
    CHECK_THROWS_AS(circle(ComplexStructure::I, 1, {0, 0, 0}), NoBundleExtension);
    CHECK_THROWS_AS(circle(ComplexStructure::J, -3, {0, 0, 0}), NoBundleExtension);
  }
}
