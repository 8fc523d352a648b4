#include <doctest.h>

#include "calabi/su3.hpp"

using namespace calabi;
using namespace calabi::su3;

namespace {

bool matrix_equal(const MatrixSu3& a, const MatrixSu3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

MatrixSu3 scale(const Rational& q, const MatrixSu3& m) { return m * Gaussian(q); }

}  // namespace

TEST_CASE("basis matrices are antihermitian and traceless") {
  CHECK(is_su3_element(H()));
  for (int k = 1; k <= 7; ++k) CHECK(is_su3_element(X(k)));
  for (int s = 1; s <= 8; ++s) CHECK(is_su3_element(frame_dual(s)));

  MatrixSu3 not_traceless = zero_matrix();
  not_traceless(0, 0) = Gaussian::i();
  CHECK_FALSE(is_su3_element(not_traceless));
}

TEST_CASE("invariant pairing is the expected diagonal form") {
  CHECK(killing_pairing(H(), H()) == Rational(6));
  for (int k = 1; k <= 7; ++k) {
    CHECK(killing_pairing(X(k), X(k)) == Rational(2));
    CHECK(killing_pairing(H(), X(k)) == Rational(0));
    for (int l = k + 1; l <= 7; ++l) CHECK(killing_pairing(X(k), X(l)) == Rational(0));
  }
}

TEST_CASE("bracket goldens") {
  CHECK(matrix_equal(bracket(H(), X(2)), scale(Rational(3), X(6))));
  CHECK(matrix_equal(bracket(H(), X(6)), scale(Rational(-3), X(2))));
  CHECK(matrix_equal(bracket(H(), X(3)), scale(Rational(-3), X(7))));
  CHECK(matrix_equal(bracket(H(), X(7)), scale(Rational(3), X(3))));
  CHECK(matrix_equal(bracket(X(1), X(5)), scale(Rational(2), X(4))));
  CHECK(matrix_equal(bracket(X(2), X(6)), H() - X(4)));
  CHECK(matrix_equal(bracket(X(4), X(1)), scale(Rational(2), X(5))));

  SUBCASE("the isotropy generator fixes the nu-plane and kappa") {
    CHECK(matrix_equal(bracket(H(), X(1)), zero_matrix()));
    CHECK(matrix_equal(bracket(H(), X(5)), zero_matrix()));
    CHECK(matrix_equal(bracket(H(), X(4)), zero_matrix()));
  }
}

TEST_CASE("Jacobi identity holds on all frame-dual triples") {
  std::array<MatrixSu3, 8> F;
  for (int s = 1; s <= 8; ++s) F[s - 1] = frame_dual(s);
  int checked = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int k = j + 1; k < 8; ++k) {
        const MatrixSu3 cyc = bracket(bracket(F[i], F[j]), F[k]) +
                              bracket(bracket(F[j], F[k]), F[i]) +
                              bracket(bracket(F[k], F[i]), F[j]);
        CHECK(matrix_equal(cyc, zero_matrix()));
        ++checked;
      }
  CHECK(checked == 56);
}

TEST_CASE("structure constants expand brackets in the frame basis") {
  const int zeta = int(Coframe::zeta), kappa = int(Coframe::kappa);
  const int nu1 = int(Coframe::nu1), nu2 = int(Coframe::nu2);
  const int mu1 = int(Coframe::mu1), mu2 = int(Coframe::mu2);

  CHECK(structure_constant(zeta, mu1, mu2) == Rational(1));
  CHECK(structure_constant(kappa, mu1, mu2) == Rational(-1));
  CHECK(structure_constant(kappa, nu1, nu2) == Rational(2));
  CHECK(structure_constant(nu2, kappa, nu1) == Rational(2));
  CHECK(structure_constant(mu2, zeta, mu1) == Rational(3));

  SUBCASE("antisymmetry in the lower indices") {
    for (int a = 1; a <= 8; ++a)
      for (int b = 1; b <= 8; ++b)
        for (int c = 1; c <= 8; ++c)
          CHECK(structure_constant(a, b, c) == -structure_constant(a, c, b));
  }

  SUBCASE("full reconstruction of every bracket") {
    for (int b = 1; b <= 8; ++b)
      for (int c = 1; c <= 8; ++c) {
        MatrixSu3 sum = zero_matrix();
        for (int a = 1; a <= 8; ++a) sum += scale(structure_constant(a, b, c), frame_dual(a));
        CHECK(matrix_equal(sum, bracket(frame_dual(b), frame_dual(c))));
      }
  }
}

TEST_CASE("adjoint matrix in the frame basis") {
  const auto adH = adjoint_matrix(H());
  const int nu1 = int(Coframe::nu1) - 1, kappa = int(Coframe::kappa) - 1;
  const int mu1 = int(Coframe::mu1) - 1, mu2 = int(Coframe::mu2) - 1;
  const int s1 = int(Coframe::sigma1) - 1, s2 = int(Coframe::sigma2) - 1;

  // ad_H rotates the sigma- and mu-planes with weight three and kills the rest.
  CHECK(adH(mu2, mu1) == Rational(3));
  CHECK(adH(mu1, mu2) == Rational(-3));
  CHECK(adH(s2, s1) == Rational(3));
  CHECK(adH(s1, s2) == Rational(-3));
  CHECK(adH(nu1, nu1) == Rational(0));
  CHECK(adH(kappa, kappa) == Rational(0));
  Rational offplane(0);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const bool plane = (i == mu1 && j == mu2) || (i == mu2 && j == mu1) ||
                         (i == s1 && j == s2) || (i == s2 && j == s1);
      if (!plane) offplane += adH(i, j) * adH(i, j);
    }
  CHECK(offplane == Rational(0));
}
