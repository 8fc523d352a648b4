#pragma once

#include "calabi/forms.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace calabi {

/// Tags for the three parallel complex structures of the hyperkahler triple.
enum class ComplexStructure : int { I = 0, J = 1, K = 2 };

inline const char* structure_name(ComplexStructure L) {
  switch (L) {
    case ComplexStructure::I: return "I";
    case ComplexStructure::J: return "J";
    case ComplexStructure::K: return "K";
  }
  return "?";
}

inline ComplexStructure structure_from_name(const std::string& s) {
  if (s == "I" || s == "i") return ComplexStructure::I;
  if (s == "J" || s == "j") return ComplexStructure::J;
  if (s == "K" || s == "k") return ComplexStructure::K;
  throw std::invalid_argument("unknown complex structure tag: " + s);
}

struct IdentityCheck {
  std::string name;
  bool pass = false;
  double max_abs = 0.0;
  double max_scale = 0.0;
};

/// The Calabi hyperkahler structure on the complement of the zero section,
/// radial coordinate r in (1, inf).  All forms are cached both in the
/// invariant Maurer-Cartan coframe and in the orthonormal e-coframe.
struct CalabiStructure {
  MetricCoefficients g;

  std::array<InvariantForm, 8> e;  ///< orthonormal covectors, invariant-basis expression

  std::array<InvariantForm, 3> omega;    ///< Kahler 2-forms for I, J, K
  std::array<OrthoForm, 3> omega_e;      ///< the same in the e-basis
  std::array<OrthoForm, 3> omega_sq_e;   ///< cached squares omega_L wedge omega_L
  std::array<OrthoForm, 3> phi_e;        ///< Cayley 4-forms for the three structures
  OrthoForm theta_e;                     ///< (1/6)(sum of omega_L squares)
  OrthoForm vol_e;                       ///< e^{01234567}

  const InvariantForm& omega_of(ComplexStructure L) const { return omega[int(L)]; }
  const OrthoForm& omega_e_of(ComplexStructure L) const { return omega_e[int(L)]; }
  const OrthoForm& omega_sq_of(ComplexStructure L) const { return omega_sq_e[int(L)]; }
  const OrthoForm& phi_of(ComplexStructure L) const { return phi_e[int(L)]; }
};

namespace detail {

inline OrthoForm ortho_basis_2form(int i, int j, int sign) {
  const ScalarField c = ScalarField::rational(sign);
  return OrthoForm::monomial(c, std::uint16_t((1u << i) | (1u << j)));
}

}  // namespace detail

inline MetricCoefficients calabi_metric_coefficients() {
  MetricCoefficients g;
  g.a = ScalarField::rational(1, 2) * ScalarField::sqrt2() * ScalarField::radical(Radical::R2M1, 1);
  g.b = ScalarField::rational(1, 2) * ScalarField::sqrt2() * ScalarField::radical(Radical::R2P1, 1);
  g.c = ScalarField::r();
  g.f = ScalarField::radical(Radical::R4M1, 1) * ScalarField::r_power(-1);
  return g;
}

/// Kahler 2-forms in the orthonormal coframe:
///   omega_I = -e^07 + e^56 + e^12 - e^34
///   omega_J = -e^06 - e^57 - e^23 + e^14
///   omega_K =  e^05 - e^67 + e^24 + e^13
inline OrthoForm kahler_form_e(ComplexStructure L) {
  using detail::ortho_basis_2form;
  switch (L) {
    case ComplexStructure::I:
      return ortho_basis_2form(0, 7, -1) + ortho_basis_2form(5, 6, 1) +
             ortho_basis_2form(1, 2, 1) + ortho_basis_2form(3, 4, -1);
    case ComplexStructure::J:
      return ortho_basis_2form(0, 6, -1) + ortho_basis_2form(5, 7, -1) +
             ortho_basis_2form(2, 3, -1) + ortho_basis_2form(1, 4, 1);
    case ComplexStructure::K:
      return ortho_basis_2form(0, 5, 1) + ortho_basis_2form(6, 7, -1) +
             ortho_basis_2form(2, 4, 1) + ortho_basis_2form(1, 3, 1);
  }
  throw std::logic_error("kahler_form_e: bad tag");
}

/// Holomorphic volume form Upsilon_L = 1/2 (omega_M + i omega_N)^2 for the
/// cyclic complement (L, M, N); returned as (real part, imaginary part).
inline std::pair<OrthoForm, OrthoForm> upsilon(const CalabiStructure& X, ComplexStructure L) {
  const int M = (int(L) + 1) % 3, N = (int(L) + 2) % 3;
  const OrthoForm re = ScalarField::rational(1, 2) * (X.omega_sq_e[M] - X.omega_sq_e[N]);
  const OrthoForm im = wedge(X.omega_e[M], X.omega_e[N]);
  return {re, im};
}

/// Identity checks certifying a built structure; each entry reports the
/// sampled zero certificate of one defining relation.
inline std::vector<IdentityCheck> certify_calabi(const CalabiStructure& X,
                                                 const IsZeroOptions& opts) {
  std::vector<IdentityCheck> out;
  auto check_field = [&](std::string name, const ScalarField& f) {
    const ZeroCertificate c = certify_zero(f, opts);
    out.push_back({std::move(name), c.zero, c.max_abs, c.max_scale});
  };
  auto check_form = [&](std::string name, const auto& form) {
    IdentityCheck entry{std::move(name), true, 0.0, 0.0};
    for (const auto& [key, c] : form.terms()) {
      const ZeroCertificate cert = certify_zero(c, opts);
      entry.pass = entry.pass && cert.zero;
      entry.max_abs = std::max(entry.max_abs, cert.max_abs);
      entry.max_scale = std::max(entry.max_scale, cert.max_scale);
    }
    out.push_back(std::move(entry));
  };

  const ScalarField r2 = ScalarField::r_power(2);
  const ScalarField half = ScalarField::rational(1, 2);
  check_field("a^2 = (r^2-1)/2", X.g.a * X.g.a - half * (r2 - ScalarField::one()));
  check_field("b^2 = (r^2+1)/2", X.g.b * X.g.b - half * (r2 + ScalarField::one()));
  check_field("c = r", X.g.c - ScalarField::r());
  check_field("f = sqrt(r^4-1)/r",
              X.g.f - ScalarField::radical(Radical::R4M1, 1) * ScalarField::r_power(-1));

  for (int L = 0; L < 3; ++L) {
    check_form(std::string("d omega_") + structure_name(ComplexStructure(L)) + " = 0",
               exterior_derivative(X.omega[L]));
    check_form(std::string("omega_") + structure_name(ComplexStructure(L)) + "^4 = 24 vol",
               wedge(X.omega_sq_e[L], X.omega_sq_e[L]) - ScalarField::rational(24) * X.vol_e);
  }

  check_form("Phi_K + Phi_I = omega_I^2", X.phi_e[2] + X.phi_e[0] - X.omega_sq_e[0]);
  check_form("Phi_I + Phi_J = omega_J^2", X.phi_e[0] + X.phi_e[1] - X.omega_sq_e[1]);
  check_form("Phi_J + Phi_K = omega_K^2", X.phi_e[1] + X.phi_e[2] - X.omega_sq_e[2]);
  check_form("star Theta = Theta", hodge_star(X.theta_e) - X.theta_e);

  for (int i = 0; i < 8; ++i)
    check_form(std::string("e^") + char('0' + i) + " expressed orthonormally",
               to_e_basis(X.e[i], X.g) - OrthoForm::basis({i}));

  return out;
}

/// Build the full structure and certify every defining identity by sampled
/// zero tests (30 points in (1.01, 50)); throws if any certification fails.
inline CalabiStructure build_calabi() {
  CalabiStructure X;
  X.g = calabi_metric_coefficients();

  for (int i = 0; i < 8; ++i) X.e[i] = from_e_basis(OrthoForm::basis({i}), X.g);

  for (int L = 0; L < 3; ++L) {
    X.omega_e[L] = kahler_form_e(ComplexStructure(L));
    X.omega[L] = from_e_basis(X.omega_e[L], X.g);
    X.omega_sq_e[L] = wedge(X.omega_e[L], X.omega_e[L]);
  }

  const ScalarField half = ScalarField::rational(1, 2);
  X.phi_e[0] = half * (X.omega_sq_e[0] + X.omega_sq_e[1] - X.omega_sq_e[2]);
  X.phi_e[1] = half * (X.omega_sq_e[1] + X.omega_sq_e[2] - X.omega_sq_e[0]);
  X.phi_e[2] = half * (X.omega_sq_e[2] + X.omega_sq_e[0] - X.omega_sq_e[1]);
  X.theta_e = ScalarField::rational(1, 6) *
              (X.omega_sq_e[0] + X.omega_sq_e[1] + X.omega_sq_e[2]);
  X.vol_e = OrthoForm::basis({0, 1, 2, 3, 4, 5, 6, 7});

  IsZeroOptions opts;
  opts.samples = 30;
  opts.lo = 1.01;
  opts.hi = 50.0;
  for (const IdentityCheck& c : certify_calabi(X, opts))
    if (!c.pass) throw std::logic_error("build_calabi: identity failed: " + c.name);
  return X;
}

struct DecayReport {
  std::vector<double> r;
  std::vector<double> deviation;  ///< max relative metric-coefficient deviation from the cone
  double slope = 0.0;             ///< least-squares slope of log(deviation) vs log(r)
};

/// Compare the metric coefficients against their conical limits
/// (a^2, b^2 -> r^2/2; c^2, f^2, dt^2-factor -> r^2, r^2, 1) and fit the
/// decay rate of the relative deviation.
inline DecayReport asymptotic_rate_probe(const CalabiStructure& X,
                                         const std::vector<double>& r_values) {
  if (r_values.size() < 2) throw std::invalid_argument("asymptotic_rate_probe: need two samples");
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    if (r_values[i] <= 2.0) throw std::invalid_argument("asymptotic_rate_probe: samples must exceed 2");
    if (i > 0 && r_values[i] <= r_values[i - 1])
      throw std::invalid_argument("asymptotic_rate_probe: samples must increase");
  }
  DecayReport rep;
  rep.r = r_values;
  const ScalarField dt_factor_sq =
      ScalarField::r_power(4) * ScalarField::radical(Radical::R4M1, -2);
  for (double r : r_values) {
    const double a2 = X.g.a.evaluate(r) * X.g.a.evaluate(r);
    const double b2 = X.g.b.evaluate(r) * X.g.b.evaluate(r);
    const double c2 = X.g.c.evaluate(r) * X.g.c.evaluate(r);
    const double f2 = X.g.f.evaluate(r) * X.g.f.evaluate(r);
    double dev = std::abs(a2 / (r * r / 2.0) - 1.0);
    dev = std::max(dev, std::abs(b2 / (r * r / 2.0) - 1.0));
    dev = std::max(dev, std::abs(c2 / (r * r) - 1.0));
    dev = std::max(dev, std::abs(f2 / (r * r) - 1.0));
    dev = std::max(dev, std::abs(dt_factor_sq.evaluate(r) - 1.0));
    rep.deviation.push_back(dev);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = double(r_values.size());
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    const double x = std::log(rep.r[i]), y = std::log(rep.deviation[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

}  // namespace calabi
