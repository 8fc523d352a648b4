#pragma once

#include "calabi/rational.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

namespace calabi {

/// Dense univariate polynomial over an exact scalar ring, stored by
/// ascending degree with no trailing zeros (so the zero polynomial has an
/// empty coefficient vector).  Only the handful of operations needed by the
/// radical function field are provided.
template <class Scalar>
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(Scalar c) { m_c.push_back(std::move(c)); trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : m_c(std::move(coeffs)) { trim(); }

  /// Monomial c * x^k.
  static Polynomial monomial(Scalar c, int k) {
    assert(k >= 0);
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(Scalar(1)); }

  bool is_zero() const { return m_c.empty(); }
  int degree() const { return static_cast<int>(m_c.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return m_c; }

  const Scalar& leading() const {
    assert(!m_c.empty());
    return m_c.back();
  }

  Scalar coefficient(int k) const {
    if (k < 0 || k > degree()) return Scalar(0);
    return m_c[static_cast<std::size_t>(k)];
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> v(std::max(a.m_c.size(), b.m_c.size()), Scalar(0));
    for (std::size_t i = 0; i < a.m_c.size(); ++i) v[i] += a.m_c[i];
    for (std::size_t i = 0; i < b.m_c.size(); ++i) v[i] += b.m_c[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> v(std::max(a.m_c.size(), b.m_c.size()), Scalar(0));
    for (std::size_t i = 0; i < a.m_c.size(); ++i) v[i] += a.m_c[i];
    for (std::size_t i = 0; i < b.m_c.size(); ++i) v[i] -= b.m_c[i];
    return Polynomial(std::move(v));
  }

  Polynomial operator-() const {
    std::vector<Scalar> v = m_c;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> v(a.m_c.size() + b.m_c.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.m_c.size(); ++i)
      for (std::size_t j = 0; j < b.m_c.size(); ++j) v[i + j] += a.m_c[i] * b.m_c[j];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    std::vector<Scalar> v = p.m_c;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
  }

  bool operator==(const Polynomial& o) const { return m_c == o.m_c; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Euclidean division; the scalar ring must be a field.
  struct DivMod {
    Polynomial quot, rem;
  };
  DivMod divmod(const Polynomial& d) const {
    assert(!d.is_zero());
    DivMod out;
    out.rem = *this;
    if (degree() < d.degree()) return out;
    std::vector<Scalar> q(static_cast<std::size_t>(degree() - d.degree()) + 1, Scalar(0));
    while (!out.rem.is_zero() && out.rem.degree() >= d.degree()) {
      const int k = out.rem.degree() - d.degree();
      Scalar c = out.rem.leading() / d.leading();
      q[static_cast<std::size_t>(k)] = c;
      out.rem = out.rem - monomial(c, k) * d;
    }
    out.quot = Polynomial(std::move(q));
    return out;
  }

  Polynomial derivative() const {
    if (m_c.size() <= 1) return Polynomial();
    std::vector<Scalar> v(m_c.size() - 1);
    for (std::size_t i = 1; i < m_c.size(); ++i) v[i - 1] = Scalar(static_cast<int>(i)) * m_c[i];
    return Polynomial(std::move(v));
  }

  /// Taylor shift: returns q with q(u) = p(u + x0), computed exactly.
  Polynomial shifted(const Scalar& x0) const {
    Polynomial out;
    // Horner from the top: out = out * (u + x0) + c_k.
    const Polynomial lin(std::vector<Scalar>{x0, Scalar(1)});
    for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) out = out * lin + Polynomial(*it);
    return out;
  }

  Scalar evaluate_exact(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  /// Monic gcd via the Euclidean algorithm (field scalars).
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = a.divmod(b).rem;
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != Scalar(1)) {
      Scalar inv = Scalar(1) / a.leading();
      a = inv * a;
    }
    return a;
  }

  std::string str(const std::string& var = "r") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Scalar& c = m_c[static_cast<std::size_t>(k)];
      if (c == Scalar(0)) continue;
      if (!first) os << (c > Scalar(0) ? " + " : " - ");
      else if (c < Scalar(0)) os << "-";
      Scalar ac = c < Scalar(0) ? Scalar(-c) : c;
      const bool unit = (ac == Scalar(1));
      if (k == 0 || !unit) os << to_string(ac);
      if (k > 0) {
        if (!unit) os << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

private:
  void trim() {
    while (!m_c.empty() && m_c.back() == Scalar(0)) m_c.pop_back();
  }

  std::vector<Scalar> m_c;
};

using QPoly = Polynomial<Rational>;

}  // namespace calabi
