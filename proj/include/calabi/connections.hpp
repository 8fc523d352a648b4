#pragma once

#include "calabi/bundles.hpp"
#include "calabi/forms.hpp"
#include "calabi/geometry.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace calabi {

struct UnsupportedAnsatz : std::runtime_error {
  explicit UnsupportedAnsatz(const std::string& what) : std::runtime_error(what) {}
};

/// Invariant connection on the degree-n bundle in temporal gauge.  The
/// coefficient functions multiply the equivariant generator forms:
///
///   generic (circle gauge, or rotation gauge with n not in {0, 3}):
///     A = (p0 kappa + p1 nu1 + p2 nu2 + n zeta) (x) T1
///   rotation gauge, n = 0:
///     A = kappa (x) (p0 T1 + q0 T2 + s0 T3) + nu1 (x) (p1 T1 + q1 T2 + s1 T3)
///         + nu2 (x) (p2 T1 + q2 T2 + s2 T3)
///   rotation gauge, n = 3:
///     A = (p0 kappa + p1 nu1 + p2 nu2 + 3 zeta) (x) T1
///         + (w1 mu1 - w2 sigma1) (x) T2 + (w1 mu2 - w2 sigma2) (x) T3
struct ConnectionAnsatz {
  GaugeAlgebra gauge = GaugeAlgebra::u1;
  long n = 0;
  std::array<ScalarField, 3> p{};  ///< kappa, nu1, nu2 components on T1
  std::array<ScalarField, 3> q{};  ///< the same on T2 (rotation gauge, n = 0)
  std::array<ScalarField, 3> s{};  ///< the same on T3 (rotation gauge, n = 0)
  ScalarField w1, w2;              ///< weight-three plane components (n = 3)

  static ConnectionAnsatz abelian(long n, ScalarField p0, ScalarField p1, ScalarField p2) {
    ConnectionAnsatz A;
    A.gauge = GaugeAlgebra::u1;
    A.n = n;
    A.p = {std::move(p0), std::move(p1), std::move(p2)};
    return A;
  }

  static ConnectionAnsatz rotation(long n, ScalarField p0, ScalarField p1, ScalarField p2) {
    if (n == 0 || n == 3)
      throw UnsupportedAnsatz("rotation: degrees 0 and 3 have enlarged ansatz shapes");
    ConnectionAnsatz A;
    A.gauge = GaugeAlgebra::so3;
    A.n = n;
    A.p = {std::move(p0), std::move(p1), std::move(p2)};
    return A;
  }

  static ConnectionAnsatz rotation_flat(std::array<ScalarField, 3> p,
                                        std::array<ScalarField, 3> q,
                                        std::array<ScalarField, 3> s) {
    ConnectionAnsatz A;
    A.gauge = GaugeAlgebra::so3;
    A.n = 0;
    A.p = std::move(p);
    A.q = std::move(q);
    A.s = std::move(s);
    return A;
  }

  static ConnectionAnsatz rotation_degree_three(ScalarField p0, ScalarField p1, ScalarField p2,
                                                ScalarField w1_, ScalarField w2_) {
    ConnectionAnsatz A;
    A.gauge = GaugeAlgebra::so3;
    A.n = 3;
    A.p = {std::move(p0), std::move(p1), std::move(p2)};
    A.w1 = std::move(w1_);
    A.w2 = std::move(w2_);
    return A;
  }

  /// Canonical invariant connection with all coefficients zero.
  static ConnectionAnsatz canonical(GaugeAlgebra gauge, long n) {
    ConnectionAnsatz A;
    A.gauge = gauge;
    A.n = n;
    return A;
  }

  /// The underlying algebra-valued 1-form in the invariant coframe.
  LieValued<InvariantForm> one_form() const {
    const int dim = gauge_dim(gauge);
    LieValued<InvariantForm> A = LieValued<InvariantForm>::zero(dim);
    const std::uint16_t kz = 1u << int(Coframe::zeta);
    const std::uint16_t slots[3] = {1u << int(Coframe::kappa), 1u << int(Coframe::nu1),
                                    1u << int(Coframe::nu2)};
    A.comp[0] = InvariantForm::monomial(ScalarField::rational(n), kz);
    for (int j = 0; j < 3; ++j) {
      A.comp[0] = A.comp[0] + InvariantForm::monomial(p[j], slots[j]);
      if (gauge == GaugeAlgebra::so3 && n == 0) {
        A.comp[1] = A.comp[1] + InvariantForm::monomial(q[j], slots[j]);
        A.comp[2] = A.comp[2] + InvariantForm::monomial(s[j], slots[j]);
      }
    }
    if (gauge == GaugeAlgebra::so3 && n == 3) {
      const std::uint16_t ks1 = 1u << int(Coframe::sigma1), ks2 = 1u << int(Coframe::sigma2);
      const std::uint16_t km1 = 1u << int(Coframe::mu1), km2 = 1u << int(Coframe::mu2);
      A.comp[1] = A.comp[1] + InvariantForm::monomial(w1, km1) +
                  InvariantForm::monomial(-w2, ks1);
      A.comp[2] = A.comp[2] + InvariantForm::monomial(w1, km2) +
                  InvariantForm::monomial(-w2, ks2);
    }
    return A;
  }
};

/// Curvature 2-form with its orthonormal-frame expansion cached.
struct CurvatureForm {
  GaugeAlgebra gauge = GaugeAlgebra::u1;
  LieValued<InvariantForm> mc;
  LieValued<OrthoForm> e;
};

namespace detail {

/// [x wedge y]^a = sum_{bc} f^a_{bc} x^b wedge y^c with the rotation-algebra
/// structure constants f^1_{23} = f^2_{31} = f^3_{12} = 1; zero abelian case.
inline LieValued<InvariantForm> algebra_wedge(GaugeAlgebra gauge,
                                              const LieValued<InvariantForm>& x,
                                              const LieValued<InvariantForm>& y) {
  LieValued<InvariantForm> out = LieValued<InvariantForm>::zero(gauge_dim(gauge));
  if (gauge == GaugeAlgebra::u1) return out;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    out.comp[a] = wedge(x.comp[b], y.comp[c]) - wedge(x.comp[c], y.comp[b]);
  }
  return out;
}

}  // namespace detail

/// F = dA + 1/2 [A wedge A], expanded in both coframes.
inline CurvatureForm curvature(const ConnectionAnsatz& A, const MetricCoefficients& g) {
  const LieValued<InvariantForm> a = A.one_form();
  CurvatureForm F;
  F.gauge = A.gauge;
  F.mc = LieValued<InvariantForm>::zero(a.generators());
  for (int i = 0; i < a.generators(); ++i) F.mc.comp[i] = exterior_derivative(a.comp[i]);
  const LieValued<InvariantForm> bracket = detail::algebra_wedge(A.gauge, a, a);
  for (int i = 0; i < a.generators(); ++i)
    F.mc.comp[i] = F.mc.comp[i] + ScalarField::rational(1, 2) * bracket.comp[i];
  F.e = LieValued<OrthoForm>::zero(a.generators());
  for (int i = 0; i < a.generators(); ++i) F.e.comp[i] = to_e_basis(F.mc.comp[i], g);
  return F;
}

/// Certify that no zeta-direction term survives in the curvature.
inline bool is_horizontal(const CurvatureForm& F, const IsZeroOptions& opts = {}) {
  const std::uint16_t kz = 1u << int(Coframe::zeta);
  for (const InvariantForm& comp : F.mc.comp)
    for (const auto& [key, c] : comp.terms())
      if ((key & kz) && !is_zero(c, opts)) return false;
  return true;
}

/// Bianchi residual d F + [A wedge F]; identically zero for any connection.
inline LieValued<InvariantForm> bianchi_residual(const ConnectionAnsatz& A,
                                                 const CurvatureForm& F) {
  const LieValued<InvariantForm> a = A.one_form();
  LieValued<InvariantForm> out = LieValued<InvariantForm>::zero(F.mc.generators());
  for (int i = 0; i < F.mc.generators(); ++i)
    out.comp[i] = exterior_derivative(F.mc.comp[i]);
  if (A.gauge == GaugeAlgebra::so3) {
    for (int i = 0; i < 3; ++i) {
      const int b = (i + 1) % 3, c = (i + 2) % 3;
      // For mixed degrees [a wedge F]^i = a^b wedge F^c - a^c wedge F^b.
      out.comp[i] = out.comp[i] + wedge(a.comp[b], F.mc.comp[c]) - wedge(a.comp[c], F.mc.comp[b]);
    }
  }
  return out;
}

///// Squared pointwise norm per gauge generator: the sum of squared e-basis
/// coefficients, the generators being orthonormal.
inline std::vector<ScalarField> curvature_norm_sq_components(const CurvatureForm& F) {
  std::vector<ScalarField> out;
  for (const OrthoForm& comp : F.e.comp) {
    ScalarField acc = ScalarField::zero();
    for (const auto& [key, c] : comp.terms()) acc = acc + c * c;
    out.push_back(acc);
  }
  return out;
}

inline ScalarField curvature_norm_sq(const CurvatureForm& F) {
  ScalarField acc = ScalarField::zero();
  for (const ScalarField& part : curvature_norm_sq_components(F)) acc = acc + part;
  return acc;
}

}  // namespace calabi
