#pragma once

#include "calabi/linalg.hpp"
#include "calabi/su3.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace calabi {

/// Structure group of the gauge bundle, identified with its Lie algebra.
enum class GaugeAlgebra { u1, so3 };

inline const char* gauge_name(GaugeAlgebra g) { return g == GaugeAlgebra::u1 ? "u1" : "so3"; }

inline int gauge_dim(GaugeAlgebra g) { return g == GaugeAlgebra::u1 ? 1 : 3; }

namespace so3 {

/// Basis T_1, T_2, T_3 of antisymmetric 3x3 matrices with [T_1, T_2] = T_3
/// and cyclic permutations; T_i generates rotation about axis i.
inline Eigen::Matrix3d generator(int i) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  const int a = i % 3, b = (i + 1) % 3;
  m(b, a) = 1.0;
  m(a, b) = -1.0;
  return m;
}

/// ad_{T_1} in the basis (T_1, T_2, T_3): rotation of the (T_2, T_3)-plane.
inline Eigen::Matrix<Rational, 3, 3> ad_T1() {
  Eigen::Matrix<Rational, 3, 3> m;
  m.setZero();
  m(2, 1) = 1;
  m(1, 2) = -1;
  return m;
}

}  // namespace so3

/// Homomorphism from the principal isotropy circle into the gauge group:
/// z^n for the circle target, rotation by n-times the angle about axis 1
/// for SO(3).
struct CircleHom {
  GaugeAlgebra target;
  long n = 0;
};

inline CircleHom lambda_hom(GaugeAlgebra target, long n) { return {target, n}; }

/// Homomorphism from U(2) into the gauge group, used when testing whether a
/// bundle over the principal orbits extends over the singular orbit.  The
/// classification up to conjugacy: powers of the determinant character
/// (composed with the axis rotation for SO(3)) and, for SO(3) only, the
/// adjoint projection.
struct ExtensionHom {
  GaugeAlgebra target;
  bool adjoint = false;  ///< the projection U(2) -> U(2)/center, SO(3) only
  long k = 0;            ///< determinant power, when adjoint is false
};

inline ExtensionHom chi_hom(GaugeAlgebra target, long k) { return {target, false, k}; }
inline ExtensionHom chi_adjoint() { return {GaugeAlgebra::so3, true, 0}; }

/// Restriction along the inclusion of the isotropy circle into U(2),
/// z -> diag(z, z): the determinant pulls back to z^2 and the center dies
/// in the adjoint projection.
inline CircleHom compose_with_inclusion(const ExtensionHom& h) {
  if (h.adjoint) return {h.target, 0};
  return {h.target, 2 * h.k};
}

/// Conjugacy invariant of a circle homomorphism: the rotation weights of
/// the target representation.  Circle targets keep the signed weight;
/// SO(3) inner automorphisms can flip the rotation plane, so only |n|
/// survives there.
struct ConjugacyKey {
  GaugeAlgebra target;
  std::vector<long> weights;

  bool operator==(const ConjugacyKey& o) const {
    return target == o.target && weights == o.weights;
  }
};

inline ConjugacyKey conjugacy_class_key(const CircleHom& h) {
  if (h.target == GaugeAlgebra::u1) return {h.target, {h.n}};
  return {h.target, {std::labs(h.n)}};
}

/// Does the degree-n bundle extend over the singular orbit along the given
/// U(2)-homomorphism, i.e. is the isotropy homomorphism element-conjugate
/// to the restriction of the candidate?
inline bool bundle_extends(long n, const ExtensionHom& candidate) {
  const CircleHom restricted = compose_with_inclusion(candidate);
  return conjugacy_class_key(lambda_hom(candidate.target, n)) ==
         conjugacy_class_key(restricted);
}

/// All extension homomorphisms compatible with the degree-n bundle.
inline std::vector<ExtensionHom> extension_candidates(GaugeAlgebra target, long n) {
  std::vector<ExtensionHom> out;
  if (n % 2 == 0) {
    out.push_back(chi_hom(target, n / 2));
    if (target == GaugeAlgebra::so3 && n != 0) out.push_back(chi_hom(target, -n / 2));
  }
  if (target == GaugeAlgebra::so3 && n == 0) out.push_back(chi_adjoint());
  std::erase_if(out, [&](const ExtensionHom& h) { return !bundle_extends(n, h); });
  return out;
}

/// Space of linear maps from the isotropy complement m (spanned by the
/// duals of kappa, nu1, nu2, sigma1, sigma2, mu1, mu2) into the gauge
/// algebra commuting with the isotropy action.
struct EquivariantMapSpace {
  long n = 0;
  GaugeAlgebra gauge = GaugeAlgebra::u1;
  std::vector<MatrixQ> basis;  ///< each gauge_dim x 7, columns in m-order
  bool group_level_verified = false;

  int dimension() const { return int(basis.size()); }
};

inline constexpr int kComplementDim = 7;

/// ad_H restricted to m, in the coframe-dual basis order above.
inline Eigen::Matrix<Rational, 7, 7> isotropy_action_on_complement() {
  const auto full = su3::adjoint_matrix(su3::H());
  Eigen::Matrix<Rational, 7, 7> out;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) out(i, j) = full(i + 1, j + 1);
  return out;
}

namespace detail {

/// Group-level equivariance of Lambda at sampled angles: Lambda composed
/// with rotation by theta in m equals rotation by n theta composed with
/// Lambda.  The exponentials are honest matrix exponentials.
inline bool verify_group_equivariance(const MatrixQ& map, long n, GaugeAlgebra gauge,
                                      int angle_samples = 12) {
  Eigen::Matrix<double, 7, 7> adH;
  {
    const auto q = isotropy_action_on_complement();
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) adH(i, j) = to_double(q(i, j));
  }
  const int sdim = gauge_dim(gauge);
  Eigen::MatrixXd lambda_map(sdim, 7);
  for (int i = 0; i < sdim; ++i)
    for (int j = 0; j < 7; ++j) lambda_map(i, j) = to_double(map(i, j));

  for (int s = 0; s < angle_samples; ++s) {
    const double theta = 2.0 * M_PI * (s + 0.37) / angle_samples;
    const Eigen::Matrix<double, 7, 7> source_rot = (theta * adH).exp();
    Eigen::MatrixXd target_rot;
    if (gauge == GaugeAlgebra::u1) {
      target_rot = Eigen::MatrixXd::Identity(1, 1);
    } else {
      Eigen::Matrix3d adT1 = Eigen::Matrix3d::Zero();
      adT1(2, 1) = 1.0;
      adT1(1, 2) = -1.0;
      target_rot = (double(n) * theta * adT1).exp();
    }
    const Eigen::MatrixXd lhs = lambda_map * source_rot;
    const Eigen::MatrixXd rhs = target_rot * lambda_map;
    if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-10) return false;
  }
  return true;
}

}  // namespace detail

/// Brute-force Schur analysis: the kernel of Lambda -> Lambda ad_H -
/// ad_{d lambda(H)} Lambda over the full map space, by exact row
/// reduction, then re-verified at group level.
inline EquivariantMapSpace equivariant_map_space(long n, GaugeAlgebra gauge) {
  const int sdim = gauge_dim(gauge);
  const int unknowns = sdim * kComplementDim;
  const auto adH = isotropy_action_on_complement();
  Eigen::Matrix<Rational, 3, 3> adT;
  adT.setZero();
  if (gauge == GaugeAlgebra::so3) adT = so3::ad_T1();

  // Unknown x_{i,j} = Lambda(m_j)-component i, flattened as i * 7 + j.
  MatrixQ system = MatrixQ::Zero(unknowns, unknowns);
  for (int i = 0; i < sdim; ++i)
    for (int j = 0; j < kComplementDim; ++j) {
      const int row = i * kComplementDim + j;
      for (int l = 0; l < kComplementDim; ++l)
        system(row, i * kComplementDim + l) += adH(l, j);
      if (gauge == GaugeAlgebra::so3)
        for (int i2 = 0; i2 < sdim; ++i2)
          system(row, i2 * kComplementDim + j) -= Rational(n) * adT(i, i2);
    }

  EquivariantMapSpace out;
  out.n = n;
  out.gauge = gauge;
  out.group_level_verified = true;
  for (const VectorQ& v : rational_kernel(std::move(system))) {
    MatrixQ map(sdim, kComplementDim);
    for (int i = 0; i < sdim; ++i)
      for (int j = 0; j < kComplementDim; ++j) map(i, j) = v(i * kComplementDim + j);
    out.group_level_verified =
        out.group_level_verified && detail::verify_group_equivariance(map, n, gauge);
    out.basis.push_back(std::move(map));
  }
  return out;
}

}  // namespace calabi
