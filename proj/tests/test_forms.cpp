#include <doctest.h>

#include "calabi/forms.hpp"
#include "calabi/geometry.hpp"

#include <random>

using namespace calabi;

namespace {

using QForm = Form<Rational>;

QForm q2(int i, int j, Rational c) {
  return c * QForm::basis({i, j});
}

const int dr = int(Coframe::dr), ze = int(Coframe::zeta), ka = int(Coframe::kappa);
const int n1 = int(Coframe::nu1), n2 = int(Coframe::nu2);
const int s1 = int(Coframe::sigma1), s2 = int(Coframe::sigma2);
const int m1 = int(Coframe::mu1), m2 = int(Coframe::mu2);

bool form_exactly_zero(const QForm& f) { return f.is_empty(); }

InvariantForm random_form(std::mt19937& gen, int degree) {
  std::uniform_int_distribution<int> slot(0, 8), num(-3, 3);
  InvariantForm out;
  for (int t = 0; t < 3; ++t) {
    std::uint16_t key = 0;
    while (std::popcount(key) < degree) key |= std::uint16_t(1) << slot(gen);
    out = out + InvariantForm::monomial(ScalarField::rational(num(gen)), key);
  }
  return out;
}

bool all_coefficients_zero(const InvariantForm& f) {
  for (const auto& [key, c] : f.terms())
    if (!is_zero(c)) return false;
  return true;
}

}  // namespace

TEST_CASE("wedge basics") {
  const QForm nu12 = wedge(QForm::basis({n1}), QForm::basis({n2}));
  CHECK(nu12.degree() == 2);
  CHECK(nu12.coefficient((1u << n1) | (1u << n2)) == Rational(1));

  SUBCASE("graded anticommutativity on 1-forms") {
    const QForm ab = wedge(QForm::basis({s1}), QForm::basis({m2}));
    const QForm ba = wedge(QForm::basis({m2}), QForm::basis({s1}));
    CHECK(form_exactly_zero(ab + ba));
  }
  SUBCASE("squares of odd forms vanish") {
    CHECK(wedge(QForm::basis({ka}), QForm::basis({ka})).is_empty());
  }
  SUBCASE("degree overflow is rejected") {
    const QForm five = QForm::basis({0, 1, 2, 3, 4});
    CHECK_THROWS_AS(wedge(five, five), DegreeOverflow);
  }
}

TEST_CASE("wedge is associative on random triples") {
  std::mt19937 gen(2026);
  for (int trial = 0; trial < 8; ++trial) {
    const InvariantForm x = random_form(gen, 1), y = random_form(gen, 2), z = random_form(gen, 1);
    const InvariantForm lhs = wedge(wedge(x, y), z), rhs = wedge(x, wedge(y, z));
    CHECK(all_coefficients_zero(lhs - rhs));
  }
}

TEST_CASE("structure equations of the invariant coframe") {
  auto d1 = [](int slot) { return exterior_derivative(QForm::basis({slot})); };

  CHECK(form_exactly_zero(d1(ze) - (q2(m1, m2, -1) + q2(s1, s2, -1))));
  CHECK(form_exactly_zero(d1(ka) - (q2(m1, m2, 1) + q2(s1, s2, -1) + q2(n1, n2, -2))));
  CHECK(form_exactly_zero(d1(n1) - (q2(s1, m1, 1) + q2(s2, m2, 1) + q2(ka, n2, 2))));
  CHECK(form_exactly_zero(d1(n2) - (q2(s1, m2, -1) + q2(s2, m1, 1) + q2(ka, n1, -2))));
  CHECK(form_exactly_zero(
      d1(s1) - (q2(ka, s2, 1) + q2(n1, m1, -1) + q2(n2, m2, 1) + q2(ze, s2, 3))));
  CHECK(form_exactly_zero(
      d1(s2) - (q2(ka, s1, -1) + q2(n2, m1, -1) + q2(n1, m2, -1) + q2(ze, s1, -3))));
  CHECK(form_exactly_zero(
      d1(m1) - (q2(ka, m2, -1) + q2(n1, s1, 1) + q2(n2, s2, 1) + q2(ze, m2, 3))));
  CHECK(form_exactly_zero(
      d1(m2) - (q2(ka, m1, 1) + q2(n1, s2, 1) + q2(n2, s1, -1) + q2(ze, m1, -3))));

  SUBCASE("d squares to zero on every coframe slot") {
    for (int s = 0; s < kCoframeSlots; ++s)
      CHECK(form_exactly_zero(exterior_derivative(d1(s))));
  }
  SUBCASE("the radial slot is closed") { CHECK(d1(dr).is_empty()); }
}

TEST_CASE("Leibniz rule for d on random invariant forms") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 6; ++trial) {
    const int ka_deg = 1 + trial % 2;
    const InvariantForm x = random_form(gen, ka_deg), y = random_form(gen, 2);
    InvariantForm lhs = exterior_derivative(wedge(x, y));
    InvariantForm rhs = wedge(exterior_derivative(x), y);
    const InvariantForm xdy = wedge(x, exterior_derivative(y));
    rhs = (ka_deg % 2 == 1) ? rhs - xdy : rhs + xdy;
    CHECK(all_coefficients_zero(lhs - rhs));
  }

  SUBCASE("with genuinely radial coefficients") {
    const ScalarField a = calabi_metric_coefficients().a;
    const InvariantForm x = InvariantForm::monomial(a, 1u << s1);
    const InvariantForm y = InvariantForm::monomial(a * a, 1u << m1);
    const InvariantForm lhs = exterior_derivative(wedge(x, y));
    const InvariantForm rhs =
        wedge(exterior_derivative(x), y) - wedge(x, exterior_derivative(y));
    CHECK(all_coefficients_zero(lhs - rhs));
  }
}

TEST_CASE("hodge star on the orthonormal coframe") {
  using QE = EForm<Rational>;
  const QE e07 = QE::basis({0, 7});
  const QE expected = QE::basis({1, 2, 3, 4, 5, 6});
  CHECK((hodge_star(e07) - expected).is_empty());

  SUBCASE("star of one is the volume form") {
    const QE one = QE::monomial(Rational(1), 0);
    CHECK((hodge_star(one) - QE::basis({0, 1, 2, 3, 4, 5, 6, 7})).is_empty());
  }
  SUBCASE("star is an involution on all 28 basis 2-forms") {
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        const QE b = QE::basis({i, j});
        CHECK((hodge_star(hodge_star(b)) - b).is_empty());
      }
  }
  SUBCASE("star is an isometry: alpha wedge star alpha = |alpha|^2 vol") {
    std::mt19937 gen(11);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int trial = 0; trial < 5; ++trial) {
      EForm<Rational> alpha;
      Rational norm_sq(0);
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
          const Rational c(num(gen));
          alpha = alpha + c * QE::basis({i, j});
          norm_sq += c * c;
        }
      const QE lhs = wedge(alpha, hodge_star(alpha));
      CHECK((lhs - norm_sq * QE::basis({0, 1, 2, 3, 4, 5, 6, 7})).is_empty());
    }
  }
}

TEST_CASE("basis change between invariant and orthonormal coframes") {
  const MetricCoefficients g = calabi_metric_coefficients();

  SUBCASE("sigma1 picks up 1/a") {
    const OrthoForm e = to_e_basis(InvariantForm::basis({s1}), g);
    CHECK(e.terms().size() == 1);
    CHECK((e.coefficient(1u << 1) - g.a.inverse()).exactly_zero());
  }
  SUBCASE("kappa picks up r/sqrt(r^4-1)") {
    const OrthoForm e = to_e_basis(InvariantForm::basis({ka}), g);
    const ScalarField expected = ScalarField::r() * ScalarField::radical(Radical::R4M1, -1);
    CHECK((e.coefficient(1u << 7) - expected).exactly_zero());
  }
  SUBCASE("round trip is the identity") {
    const InvariantForm x = wedge(InvariantForm::basis({m1}), InvariantForm::basis({ka}));
    const InvariantForm back = from_e_basis(to_e_basis(x, g), g);
    for (const auto& [key, c] : (back - x).terms()) CHECK(c.exactly_zero());
  }
  SUBCASE("zeta components are rejected") {
    CHECK_THROWS_AS(to_e_basis(InvariantForm::basis({ze}), g), NonHorizontalForm);
  }
  SUBCASE("index reordering carries the permutation sign") {
    // kappa wedge nu1 maps to e^7 wedge e^5 = -e^5 wedge e^7.
    const OrthoForm e = to_e_basis(wedge(InvariantForm::basis({ka}), InvariantForm::basis({n1})), g);
    const ScalarField expected = -(g.f.inverse() * g.c.inverse());
    CHECK((e.coefficient((1u << 5) | (1u << 7)) - expected).exactly_zero());
  }
}

TEST_CASE("degree bookkeeping") {
  CHECK(QForm::basis({0, 1, 2}).degree() == 3);
  CHECK(QForm::zero().degree() == -1);
  CHECK_THROWS_AS(QForm::basis({1}) + QForm::basis({1, 2}), std::logic_error);
  const QForm top = wedge(QForm::basis({0, 1, 2, 3, 4}), QForm::basis({5, 6, 7, 8}));
  CHECK(top.degree() == 9);
  CHECK(exterior_derivative(top).is_empty());
}
