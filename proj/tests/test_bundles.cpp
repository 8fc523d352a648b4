#include <doctest.h>

#include "calabi/bundles.hpp"

#include <unsupported/Eigen/MatrixFunctions>

using namespace calabi;

namespace {

// m-basis column order: kappa, nu1, nu2, sigma1, sigma2, mu1, mu2.
constexpr int c_kappa = 0, c_nu1 = 1, c_nu2 = 2;
constexpr int c_sigma1 = 3, c_sigma2 = 4, c_mu1 = 5, c_mu2 = 6;

bool in_span(const std::vector<MatrixQ>& basis, const MatrixQ& candidate) {
  if (basis.empty()) return false;
  const int cols = int(basis[0].rows() * basis[0].cols());
  MatrixQ stacked(int(basis.size()) + 1, cols);
  auto flatten = [&](const MatrixQ& m, int row) {
    int c = 0;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) stacked(row, c++) = m(i, j);
  };
  for (std::size_t b = 0; b < basis.size(); ++b) flatten(basis[b], int(b));
  flatten(candidate, int(basis.size()));
  MatrixQ without = stacked.topRows(int(basis.size()));
  return rational_rank(std::move(stacked)) == rational_rank(std::move(without));
}

MatrixQ zero_map(GaugeAlgebra g) { return MatrixQ::Zero(gauge_dim(g), kComplementDim); }

}  // namespace

TEST_CASE("conjugacy keys of circle homomorphisms") {
  CHECK(conjugacy_class_key(lambda_hom(GaugeAlgebra::u1, 3)).weights == std::vector<long>{3});
  CHECK(conjugacy_class_key(lambda_hom(GaugeAlgebra::u1, 3)) ==
        conjugacy_class_key(lambda_hom(GaugeAlgebra::u1, 3)));
  CHECK_FALSE(conjugacy_class_key(lambda_hom(GaugeAlgebra::u1, 3)) ==
              conjugacy_class_key(lambda_hom(GaugeAlgebra::u1, -3)));

  SUBCASE("rotation homomorphisms of opposite degree are conjugate") {
    CHECK(conjugacy_class_key(lambda_hom(GaugeAlgebra::so3, 4)) ==
          conjugacy_class_key(lambda_hom(GaugeAlgebra::so3, -4)));
    // Matrix oracle: conjugating an axis-1 rotation by the half-turn about
    // axis 2 reverses the rotation angle.
    const double phi = 0.83;
    const Eigen::Matrix3d rot = (phi * so3::generator(1)).exp();
    const Eigen::Matrix3d half_turn = (M_PI * so3::generator(2)).exp();
    const Eigen::Matrix3d conjugated = half_turn * rot * half_turn.inverse();
    const Eigen::Matrix3d reversed = (-phi * so3::generator(1)).exp();
    CHECK((conjugated - reversed).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("restriction of extension homomorphisms to the isotropy circle") {
  CHECK(compose_with_inclusion(chi_hom(GaugeAlgebra::u1, 2)).n == 4);
  CHECK(compose_with_inclusion(chi_hom(GaugeAlgebra::so3, -3)).n == -6);
  CHECK(compose_with_inclusion(chi_adjoint()).n == 0);
}

TEST_CASE("bundle extension criterion") {
  CHECK(bundle_extends(4, chi_hom(GaugeAlgebra::u1, 2)));
  for (long k = -4; k <= 4; ++k) CHECK_FALSE(bundle_extends(3, chi_hom(GaugeAlgebra::u1, k)));
  CHECK(bundle_extends(0, chi_adjoint()));
  CHECK_FALSE(bundle_extends(2, chi_adjoint()));
  CHECK(bundle_extends(6, chi_hom(GaugeAlgebra::so3, 3)));
  CHECK(bundle_extends(6, chi_hom(GaugeAlgebra::so3, -3)));
  CHECK(bundle_extends(-6, chi_hom(GaugeAlgebra::so3, 3)));
  CHECK_FALSE(bundle_extends(-4, chi_hom(GaugeAlgebra::u1, 2)));

  SUBCASE("candidate enumeration") {
    CHECK(extension_candidates(GaugeAlgebra::u1, 5).empty());
    CHECK(extension_candidates(GaugeAlgebra::so3, 7).empty());
    const auto s1 = extension_candidates(GaugeAlgebra::u1, 4);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].k == 2);
    const auto flat = extension_candidates(GaugeAlgebra::so3, 0);
    CHECK(flat.size() == 2);  // determinant power zero and the adjoint projection
    CHECK(extension_candidates(GaugeAlgebra::so3, 6).size() == 2);
  }
}

TEST_CASE("equivariant map spaces for the circle gauge group") {
  for (long n : {-3L, 0L, 2L, 5L}) {
    const auto space = equivariant_map_space(n, GaugeAlgebra::u1);
    CHECK(space.dimension() == 3);
    CHECK(space.group_level_verified);
    for (const MatrixQ& map : space.basis) {
      CHECK(map(0, c_sigma1) == 0);
      CHECK(map(0, c_sigma2) == 0);
      CHECK(map(0, c_mu1) == 0);
      CHECK(map(0, c_mu2) == 0);
    }
  }
}

TEST_CASE("equivariant map spaces for the rotation gauge group") {
  SUBCASE("generic degree: only the axis line survives") {
    const auto space = equivariant_map_space(5, GaugeAlgebra::so3);
    CHECK(space.dimension() == 3);
    CHECK(space.group_level_verified);
    for (const MatrixQ& map : space.basis)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < kComplementDim; ++j)
          if (i != 0 || j > c_nu2) CHECK(map(i, j) == 0);
  }

  SUBCASE("degree zero: everything fixed by the trivial action") {
    const auto space = equivariant_map_space(0, GaugeAlgebra::so3);
    CHECK(space.dimension() == 9);
    CHECK(space.group_level_verified);
    for (const MatrixQ& map : space.basis)
      for (int i = 0; i < 3; ++i)
        for (int j = c_sigma1; j <= c_mu2; ++j) CHECK(map(i, j) == 0);
  }

  SUBCASE("degree three: the weight-matched planes contribute") {
    const auto space = equivariant_map_space(3, GaugeAlgebra::so3);
    CHECK(space.group_level_verified);
    // Exact weight count: three trivial-weight directions to the axis plus
    // two real parameters for each of the two weight-three planes.
    CHECK(space.dimension() == 7);
    CHECK(equivariant_map_space(-3, GaugeAlgebra::so3).dimension() == 7);

    // The five-parameter family used by the connection ansatz lies inside.
    for (int col : {c_kappa, c_nu1, c_nu2}) {
      MatrixQ p = zero_map(GaugeAlgebra::so3);
      p(0, col) = 1;
      CHECK(in_span(space.basis, p));
    }
    MatrixQ w1 = zero_map(GaugeAlgebra::so3);
    w1(1, c_mu1) = 1;
    w1(2, c_mu2) = 1;
    CHECK(in_span(space.basis, w1));
    MatrixQ w2 = zero_map(GaugeAlgebra::so3);
    w2(1, c_sigma1) = -1;
    w2(2, c_sigma2) = -1;
    CHECK(in_span(space.basis, w2));
  }

  SUBCASE("dimension sweep") {
    for (long n = -6; n <= 6; ++n) {
      const int expected = (n == 0) ? 9 : (n == 3 || n == -3) ? 7 : 3;
      CHECK(equivariant_map_space(n, GaugeAlgebra::so3).dimension() == expected);
    }
  }
}
