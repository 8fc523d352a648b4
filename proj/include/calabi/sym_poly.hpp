#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "calabi/forms.hpp"
#include "calabi/scalar_field.hpp"

namespace calabi {

/// Symbol ids below the offset name unknown functions of r; adding the offset
/// names the radial derivative of the same unknown.
inline constexpr int kDerivativeOffset = 100;

/// Product of at most two symbols, kept sorted; -1 marks an unused slot and
/// (-1, -1) is the constant monomial.
struct SymMonomial {
  int a = -1;
  int b = -1;

  static SymMonomial constant() { return {}; }
  static SymMonomial single(int id) { return {id, -1}; }
  static SymMonomial pair(int x, int y) { return x <= y ? SymMonomial{x, y} : SymMonomial{y, x}; }

  int degree() const { return (a >= 0) + (b >= 0); }
  bool contains(int id) const { return a == id || b == id; }
  friend bool operator<(const SymMonomial& l, const SymMonomial& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  }
  friend bool operator==(const SymMonomial& l, const SymMonomial& r) {
    return l.a == r.a && l.b == r.b;
  }
};

/// Polynomial of degree at most two in formal unknowns, with ScalarField
/// coefficients. Degree two is all the curvature of an invariant connection
/// can produce, and the instanton residual stays within it.
class SymPoly {
 public:
  SymPoly() = default;

  static SymPoly constant(ScalarField c) { return SymPoly().add(SymMonomial::constant(), std::move(c)); }
  static SymPoly symbol(int id, ScalarField c = ScalarField::one()) {
    return SymPoly().add(SymMonomial::single(id), std::move(c));
  }

  bool exactly_zero() const { return m_terms.empty(); }
  const std::map<SymMonomial, ScalarField>& terms() const { return m_terms; }

  int degree() const {
    int d = 0;
    for (const auto& [mon, c] : m_terms) d = std::max(d, mon.degree());
    return m_terms.empty() ? -1 : d;
  }

  ScalarField coefficient(const SymMonomial& mon) const {
    auto it = m_terms.find(mon);
    return it == m_terms.end() ? ScalarField::zero() : it->second;
  }

  SymPoly operator+(const SymPoly& o) const {
    SymPoly out = *this;
    for (const auto& [mon, c] : o.m_terms) out.add(mon, c);
    return out;
  }

  SymPoly operator-() const {
    SymPoly out;
    for (const auto& [mon, c] : m_terms) out.m_terms.emplace(mon, -c);
    return out;
  }

  SymPoly operator-(const SymPoly& o) const { return *this + (-o); }

  SymPoly operator*(const SymPoly& o) const {
    SymPoly out;
    for (const auto& [ma, ca] : m_terms)
      for (const auto& [mb, cb] : o.m_terms) {
        if (ma.degree() + mb.degree() > 2)
          throw std::logic_error("SymPoly: product exceeds degree two");
        SymMonomial mon = ma;
        if (mb.a >= 0) mon = mon.a < 0 ? SymMonomial::single(mb.a) : SymMonomial::pair(mon.a, mb.a);
        if (mb.b >= 0) mon = mon.a < 0 ? SymMonomial::single(mb.b) : SymMonomial::pair(mon.a, mb.b);
        out.add(mon, ca * cb);
      }
    return out;
  }

  SymPoly scaled(const ScalarField& s) const {
    SymPoly out;
    if (s.exactly_zero()) return out;
    for (const auto& [mon, c] : m_terms) out.add(mon, s * c);
    return out;
  }

  /// d/dr, turning each unknown into its derivative symbol. Defined for the
  /// expressions a connection form carries: degree at most one, underived.
  SymPoly derivative() const {
    SymPoly out;
    for (const auto& [mon, c] : m_terms) {
      out.add(mon, c.derivative());
      if (mon.degree() == 0) continue;
      if (mon.degree() == 2 || mon.a >= kDerivativeOffset)
        throw std::logic_error("SymPoly: derivative of an already-derived or quadratic term");
      out.add(SymMonomial::single(mon.a + kDerivativeOffset), c);
    }
    return out;
  }

  /// Replace the unknown `id` by a concrete function, and its derivative
  /// symbol by that function's derivative.
  SymPoly substituted(int id, const ScalarField& value) const {
    const ScalarField dvalue = value.derivative();
    SymPoly out;
    for (const auto& [mon, c] : m_terms) {
      SymMonomial m = mon;
      ScalarField coeff = c;
      for (int* slot : {&m.a, &m.b}) {
        if (*slot == id) {
          coeff = coeff * value;
          *slot = -1;
        } else if (*slot == id + kDerivativeOffset) {
          coeff = coeff * dvalue;
          *slot = -1;
        }
      }
      if (m.a < 0 && m.b >= 0) std::swap(m.a, m.b);
      out.add(m, coeff);
    }
    return out;
  }

  std::vector<int> symbols() const {
    std::vector<int> ids;
    for (const auto& [mon, c] : m_terms)
      for (int id : {mon.a, mon.b})
        if (id >= 0 && std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  std::string str() const {
    if (m_terms.empty()) return "0";
    std::string out;
    for (const auto& [mon, c] : m_terms) {
      if (!out.empty()) out += " + ";
      out += c.serialize();
      for (int id : {mon.a, mon.b})
        if (id >= 0)
          out += (id >= kDerivativeOffset ? " D#" + std::to_string(id - kDerivativeOffset)
                                          : " #" + std::to_string(id));
    }
    return out;
  }

 private:
  SymPoly& add(const SymMonomial& mon, ScalarField c) {
    if (c.exactly_zero()) return *this;
    auto [it, inserted] = m_terms.try_emplace(mon, std::move(c));
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.exactly_zero()) m_terms.erase(it);
    }
    return *this;
  }

  std::map<SymMonomial, ScalarField> m_terms;
};

template <>
struct coeff_ops<SymPoly> {
  static bool exactly_zero(const SymPoly& c) { return c.exactly_zero(); }
  static SymPoly from_rational(const Rational& q) {
    return SymPoly::constant(ScalarField::from_rational(q));
  }
  static SymPoly derivative(const SymPoly& c) { return c.derivative(); }
  static std::string str(const SymPoly& c) { return c.str(); }
};

using SymForm = Form<SymPoly>;
using SymEForm = EForm<SymPoly>;

inline SymEForm to_e_basis(const SymForm& form, const MetricCoefficients& g) {
  SymEForm out;
  for (const auto& [key, c] : form.terms()) {
    if (key & (std::uint16_t(1) << int(Coframe::zeta)))
      throw NonHorizontalForm("form has a zeta component");
    SymEForm term = SymEForm::monomial(c, 0);
    for (int s = 0; s < kCoframeSlots; ++s) {
      if (!(key & (std::uint16_t(1) << s))) continue;
      term = wedge(term, SymEForm::monomial(SymPoly::constant(detail::e_factor(s, g)),
                                            std::uint16_t(1) << detail::e_slot_of(s)));
    }
    out = out + term;
  }
  return out;
}

inline SymEForm lift_to_symbols(const OrthoForm& f) {
  SymEForm out;
  for (const auto& [key, c] : f.terms()) out = out + SymEForm::monomial(SymPoly::constant(c), key);
  return out;
}

}  // namespace calabi
