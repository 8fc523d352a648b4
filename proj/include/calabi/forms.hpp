#pragma once

#include "calabi/scalar_field.hpp"
#include "calabi/su3.hpp"

#include <array>
#include <bit>
#include <concepts>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace calabi {

struct DegreeOverflow : std::runtime_error {
  DegreeOverflow() : std::runtime_error("wedge degree exceeds the ambient dimension") {}
};

struct NonHorizontalForm : std::runtime_error {
  explicit NonHorizontalForm(const std::string& what) : std::runtime_error(what) {}
};

/// Sign of merging two disjoint ascending index sets by concatenation, i.e.
/// the parity of pairs (i in a, j in b) with i > j.  Zero on overlap.
inline int wedge_sign(std::uint16_t a, std::uint16_t b) {
  if (a & b) return 0;
  int inversions = 0;
  for (int j = 0; j < 16; ++j)
    if (b & (1u << j)) inversions += std::popcount(std::uint16_t(a >> (j + 1)));
  return (inversions & 1) ? -1 : 1;
}

/// Coefficient-type hooks used by the form algebra.
template <class Coeff>
struct coeff_ops;

template <>
struct coeff_ops<Rational> {
  static bool exactly_zero(const Rational& c) { return c == 0; }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational derivative(const Rational&) { return Rational(0); }
  static std::string str(const Rational& c) { return to_string(c); }
};

template <>
struct coeff_ops<ScalarField> {
  static bool exactly_zero(const ScalarField& c) { return c.exactly_zero(); }
  static ScalarField from_rational(const Rational& q) { return ScalarField::from_rational(q); }
  static ScalarField derivative(const ScalarField& c) { return c.derivative(); }
  static std::string str(const ScalarField& c) { return c.serialize(); }
};

/// Homogeneous invariant differential form over an ordered basis of N
/// covector slots, stored as a sparse map from increasing multi-indices
/// (bitmask keys) to coefficients.  N = 9 is the Maurer-Cartan coframe
/// (dr, zeta, kappa, nu1, nu2, sigma1, sigma2, mu1, mu2); N = 8 is the
/// orthonormal coframe e^0..e^7.
template <class Coeff, int N = kCoframeSlots>
class BasicForm {
public:
  static_assert(N <= 16, "bitmask keys hold at most 16 slots");
  using Key = std::uint16_t;

  BasicForm() = default;

  static BasicForm zero() { return BasicForm(); }

  static BasicForm monomial(Coeff c, Key key) {
    BasicForm out;
    if (key >= (Key(1) << N)) throw std::out_of_range("BasicForm: key outside basis");
    if (!coeff_ops<Coeff>::exactly_zero(c)) out.m_terms.emplace(key, std::move(c));
    return out;
  }

  /// Basis k-form from slot indices given in ascending order.
  static BasicForm basis(std::initializer_list<int> slots) {
    Key key = 0;
    int prev = -1;
    for (int s : slots) {
      if (s <= prev || s >= N) throw std::out_of_range("BasicForm: slots must be ascending");
      key |= Key(1) << s;
      prev = s;
    }
    return monomial(coeff_ops<Coeff>::from_rational(Rational(1)), key);
  }

  bool is_empty() const { return m_terms.empty(); }
  int degree() const { return m_terms.empty() ? -1 : std::popcount(m_terms.begin()->first); }
  const std::map<Key, Coeff>& terms() const { return m_terms; }

  Coeff coefficient(Key key) const {
    auto it = m_terms.find(key);
    return it == m_terms.end() ? coeff_ops<Coeff>::from_rational(Rational(0)) : it->second;
  }

  friend BasicForm operator+(const BasicForm& a, const BasicForm& b) {
    if (!a.m_terms.empty() && !b.m_terms.empty() && a.degree() != b.degree())
      throw std::logic_error("BasicForm: adding forms of different degree");
    BasicForm out = a;
    for (const auto& [key, c] : b.m_terms) {
      auto it = out.m_terms.find(key);
      if (it == out.m_terms.end()) {
        out.m_terms.emplace(key, c);
      } else {
        it->second = it->second + c;
        if (coeff_ops<Coeff>::exactly_zero(it->second)) out.m_terms.erase(it);
      }
    }
    return out;
  }

  friend BasicForm operator-(const BasicForm& a, const BasicForm& b) { return a + (-b); }

  BasicForm operator-() const {
    BasicForm out;
    for (const auto& [key, c] : m_terms) out.m_terms.emplace(key, -c);
    return out;
  }

  friend BasicForm operator*(const Coeff& s, const BasicForm& f) {
    BasicForm out;
    for (const auto& [key, c] : f.m_terms) {
      Coeff v = s * c;
      if (!coeff_ops<Coeff>::exactly_zero(v)) out.m_terms.emplace(key, std::move(v));
    }
    return out;
  }

  std::string str() const {
    if (m_terms.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : m_terms) {
      if (!out.empty()) out += " + ";
      out += "(" + coeff_ops<Coeff>::str(c) + ")";
      if (key != 0) out += "*" + basis_label(key);
    }
    return out;
  }

  static std::string basis_label(Key key) {
    if constexpr (N == 8) {
      std::string out = "e^{";
      for (int s = 0; s < N; ++s)
        if (key & (Key(1) << s)) out += char('0' + s);
      return out + "}";
    } else {
      static const char* names[kCoframeSlots] = {"dr", "ζ",  "κ",  "ν1", "ν2",
                                                 "σ1", "σ2", "μ1", "μ2"};
      std::string out;
      for (int s = 0; s < N; ++s)
        if (key & (Key(1) << s)) {
          if (!out.empty()) out += "∧";
          out += names[s];
        }
      return out;
    }
  }

private:
  std::map<Key, Coeff> m_terms;
};

template <class Coeff, int N>
  requires(!std::same_as<Coeff, Rational>)
BasicForm<Coeff, N> operator*(const Rational& q, const BasicForm<Coeff, N>& f) {
  return coeff_ops<Coeff>::from_rational(q) * f;
}

template <class Coeff, int N>
BasicForm<Coeff, N> wedge(const BasicForm<Coeff, N>& a, const BasicForm<Coeff, N>& b) {
  if (!a.is_empty() && !b.is_empty() && a.degree() + b.degree() > N) throw DegreeOverflow();
  BasicForm<Coeff, N> out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const int sign = wedge_sign(ka, kb);
      if (sign == 0) continue;
      Coeff c = ca * cb;
      if (sign < 0) c = -c;
      out = out + BasicForm<Coeff, N>::monomial(std::move(c), ka | kb);
    }
  return out;
}

template <class Coeff, int N, class... Rest>
BasicForm<Coeff, N> wedge(const BasicForm<Coeff, N>& a, const BasicForm<Coeff, N>& b,
                          const Rest&... rest) {
  return wedge(wedge(a, b), rest...);
}

template <class Coeff>
using Form = BasicForm<Coeff, kCoframeSlots>;

template <class Coeff>
using EForm = BasicForm<Coeff, 8>;

using InvariantForm = Form<ScalarField>;
using OrthoForm = EForm<ScalarField>;

namespace detail {

/// d of a single Maurer-Cartan slot, from the structure constants:
/// d beta^a = -1/2 c^a_{bc} beta^b wedge beta^c; d(dr) = 0.
inline const Form<Rational>& slot_differential(int slot) {
  static const std::array<Form<Rational>, kCoframeSlots> table = [] {
    std::array<Form<Rational>, kCoframeSlots> t;
    for (int a = 1; a < kCoframeSlots; ++a) {
      Form<Rational> d;
      for (int b = 1; b < kCoframeSlots; ++b)
        for (int c = b + 1; c < kCoframeSlots; ++c) {
          const Rational& q = su3::structure_constant(a, b, c);
          if (q == 0) continue;
          d = d + Form<Rational>::monomial(-q, (std::uint16_t(1) << b) | (std::uint16_t(1) << c));
        }
      t[a] = d;
    }
    return t;
  }();
  return table[slot];
}

}  // namespace detail

/// Exterior derivative on the cone (1,inf) x (principal orbit):
/// d(f beta^I) = f' dr wedge beta^I + f d(beta^I).
template <class Coeff>
Form<Coeff> exterior_derivative(const Form<Coeff>& form) {
  Form<Coeff> out;
  for (const auto& [key, c] : form.terms()) {
    if (std::popcount(key) == kCoframeSlots) continue;
    if (!(key & 1)) {
      Coeff dc = coeff_ops<Coeff>::derivative(c);
      if (!coeff_ops<Coeff>::exactly_zero(dc))
        out = out + Form<Coeff>::monomial(std::move(dc), std::uint16_t(key | 1));
    }
    int position = 0;
    for (int s = 1; s < kCoframeSlots; ++s) {
      const std::uint16_t bit = std::uint16_t(1) << s;
      if (!(key & bit)) continue;
      ++position;
      const Form<Rational>& ds = detail::slot_differential(s);
      if (ds.is_empty()) continue;
      Form<Coeff> dsC;
      for (const auto& [dk, dq] : ds.terms())
        dsC = dsC + Form<Coeff>::monomial(coeff_ops<Coeff>::from_rational(dq), dk);
      // Ascending position of this slot within the monomial, counting a
      // leading dr slot; the Leibniz sign is (-1) to that position less one.
      const int leading = (key & 1) ? position : position - 1;
      Coeff signed_c = (leading & 1) ? -c : c;
      out = out + wedge(dsC, Form<Coeff>::monomial(std::move(signed_c), std::uint16_t(key & ~bit)));
    }
  }
  return out;
}

/// Metric coefficient functions scaling the invariant coframe to the
/// orthonormal one: e^1 = a sigma1, e^2 = a sigma2, e^3 = b mu1,
/// e^4 = b mu2, e^5 = c nu1, e^6 = c nu2, e^7 = f kappa, and
/// e^0 = dt = (r^2 / sqrt(r^4-1)) dr.
struct MetricCoefficients {
  ScalarField a, b, c, f;
};

namespace detail {

/// e-slot paired with each Maurer-Cartan slot (zeta has none).
inline int e_slot_of(int mc_slot) {
  switch (static_cast<Coframe>(mc_slot)) {
    case Coframe::dr: return 0;
    case Coframe::kappa: return 7;
    case Coframe::nu1: return 5;
    case Coframe::nu2: return 6;
    case Coframe::sigma1: return 1;
    case Coframe::sigma2: return 2;
    case Coframe::mu1: return 3;
    case Coframe::mu2: return 4;
    default: throw NonHorizontalForm("zeta has no orthonormal counterpart");
  }
}

inline ScalarField e_factor(int mc_slot, const MetricCoefficients& g) {
  switch (static_cast<Coframe>(mc_slot)) {
    case Coframe::dr:
      return ScalarField::radical(Radical::R4M1, 1) * ScalarField::r_power(-2);
    case Coframe::kappa: return g.f.inverse();
    case Coframe::nu1:
    case Coframe::nu2: return g.c.inverse();
    case Coframe::sigma1:
    case Coframe::sigma2: return g.a.inverse();
    case Coframe::mu1:
    case Coframe::mu2: return g.b.inverse();
    default: throw NonHorizontalForm("zeta has no orthonormal counterpart");
  }
}

}  // namespace detail

/// Rewrite a horizontal invariant form in the orthonormal coframe.
inline OrthoForm to_e_basis(const InvariantForm& form, const MetricCoefficients& g) {
  OrthoForm out;
  for (const auto& [key, c] : form.terms()) {
    if (key & (std::uint16_t(1) << int(Coframe::zeta)))
      throw NonHorizontalForm("form has a zeta component");
    OrthoForm term = OrthoForm::monomial(c, 0);
    for (int s = 0; s < kCoframeSlots; ++s) {
      if (!(key & (std::uint16_t(1) << s))) continue;
      term = wedge(term, OrthoForm::monomial(detail::e_factor(s, g),
                                             std::uint16_t(1) << detail::e_slot_of(s)));
    }
    out = out + term;
  }
  return out;
}

inline InvariantForm from_e_basis(const OrthoForm& form, const MetricCoefficients& g) {
  static const int mc_slot_of[8] = {int(Coframe::dr),     int(Coframe::sigma1),
                                    int(Coframe::sigma2), int(Coframe::mu1),
                                    int(Coframe::mu2),    int(Coframe::nu1),
                                    int(Coframe::nu2),    int(Coframe::kappa)};
  InvariantForm out;
  for (const auto& [key, c] : form.terms()) {
    InvariantForm term = InvariantForm::monomial(c, 0);
    for (int e = 0; e < 8; ++e) {
      if (!(key & (std::uint16_t(1) << e))) continue;
      const int s = mc_slot_of[e];
      term = wedge(term, InvariantForm::monomial(detail::e_factor(s, g).inverse(),
                                                 std::uint16_t(1) << s));
    }
    out = out + term;
  }
  return out;
}

/// Hodge star of the orthonormal coframe with orientation
/// vol = e^0 wedge ... wedge e^7: star e^I = sign(I, I^c) e^{I^c}.
template <class Coeff>
EForm<Coeff> hodge_star(const EForm<Coeff>& form) {
  constexpr std::uint16_t full = 0xFF;
  EForm<Coeff> out;
  for (const auto& [key, c] : form.terms()) {
    const std::uint16_t comp = full & ~key;
    const int sign = wedge_sign(key, comp);
    Coeff v = (sign < 0) ? -c : c;
    out = out + EForm<Coeff>::monomial(std::move(v), comp);
  }
  return out;
}

/// Hodge star through the orthonormal frame, for horizontal invariant forms.
inline InvariantForm hodge_star(const InvariantForm& form, const MetricCoefficients& g) {
  return from_e_basis(hodge_star(to_e_basis(form, g)), g);
}

/// Form with coefficients in a structure Lie algebra, stored as one scalar
/// form per orthonormal algebra basis vector.
template <class FormT>
struct LieValued {
  std::vector<FormT> comp;

  static LieValued zero(int generators) { return LieValued{std::vector<FormT>(generators, FormT())}; }

  int generators() const { return int(comp.size()); }

  friend LieValued operator+(const LieValued& x, const LieValued& y) {
    if (x.comp.size() != y.comp.size())
      throw std::logic_error("LieValued: mismatched structure algebras");
    LieValued out = x;
    for (std::size_t i = 0; i < out.comp.size(); ++i) out.comp[i] = out.comp[i] + y.comp[i];
    return out;
  }
  friend LieValued operator-(const LieValued& x, const LieValued& y) {
    if (x.comp.size() != y.comp.size())
      throw std::logic_error("LieValued: mismatched structure algebras");
    LieValued out = x;
    for (std::size_t i = 0; i < out.comp.size(); ++i) out.comp[i] = out.comp[i] - y.comp[i];
    return out;
  }
};

/// Componentwise wedge of a scalar form against an algebra-valued form.
template <class Coeff, int N>
LieValued<BasicForm<Coeff, N>> wedge(const BasicForm<Coeff, N>& a,
                                     const LieValued<BasicForm<Coeff, N>>& b) {
  LieValued<BasicForm<Coeff, N>> out = b;
  for (auto& comp : out.comp) comp = wedge(a, comp);
  return out;
}

}  // namespace calabi
