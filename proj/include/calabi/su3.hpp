#pragma once

#include "calabi/rational.hpp"

#include <Eigen/Core>

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

// Overload resolution on Eigen expressions probes conversions into the
// multiprecision number types, whose byte-container detector chokes on
// Eigen's void const_iterator.  Short-circuit the detector for matrices.
namespace boost::multiprecision::detail {
template <class T, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<T, R, C, O, MR, MC>> {
  static const bool value = false;
};
}  // namespace boost::multiprecision::detail

namespace calabi {

/// Exact complex rational a + bi, the scalar ring of su(3) matrices.
struct Gaussian {
  Rational re, im;

  Gaussian() : re(0), im(0) {}
  Gaussian(Rational r) : re(std::move(r)), im(0) {}
  Gaussian(int r) : re(r), im(0) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re + b.re, a.im + b.im);
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re - b.re, a.im - b.im);
  }
  Gaussian operator-() const { return Gaussian(-re, -im); }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("Gaussian: division by zero");
    return Gaussian((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

  bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Gaussian& o) const { return !(*this == o); }

  Gaussian conj() const { return Gaussian(re, -im); }
  bool is_zero() const { return re == 0 && im == 0; }
};

}  // namespace calabi

namespace Eigen {
template <>
struct NumTraits<calabi::Gaussian> {
  typedef calabi::Gaussian Real;
  typedef calabi::Gaussian NonInteger;
  typedef calabi::Gaussian Nested;
  typedef calabi::Gaussian Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 24,
    MulCost = 48
  };
  static inline Real epsilon() { return calabi::Gaussian(0); }
  static inline Real dummy_precision() { return calabi::Gaussian(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace calabi {

using MatrixSu3 = Eigen::Matrix<Gaussian, 3, 3>;

/// Invariant coframe slots on the cohomogeneity-one space: the radial
/// coordinate plus the eight left-invariant directions of the principal
/// orbit.  Slot order is fixed project-wide.
enum class Coframe : int {
  dr = 0,
  zeta = 1,
  kappa = 2,
  nu1 = 3,
  nu2 = 4,
  sigma1 = 5,
  sigma2 = 6,
  mu1 = 7,
  mu2 = 8
};

inline constexpr int kCoframeSlots = 9;

inline const char* coframe_name(int slot) {
  static const char* names[kCoframeSlots] = {"dr",     "zeta",   "kappa", "nu1", "nu2",
                                             "sigma1", "sigma2", "mu1",   "mu2"};
  if (slot < 0 || slot >= kCoframeSlots) throw std::out_of_range("coframe_name: bad slot");
  return names[slot];
}

namespace su3 {

inline MatrixSu3 zero_matrix() { return MatrixSu3::Constant(Gaussian(0)); }

/// Diagonal isotropy generator diag(i, i, -2i).
inline MatrixSu3 H() {
  MatrixSu3 m = zero_matrix();
  m(0, 0) = Gaussian::i();
  m(1, 1) = Gaussian::i();
  m(2, 2) = Gaussian(Rational(0), Rational(-2));
  return m;
}

/// Off-diagonal generators X_1..X_7 in the standard antihermitian basis:
/// X_1, X_2, X_3 real skew pairs, X_5, X_6, X_7 the matching i-symmetric
/// pairs, X_4 = diag(i, -i, 0).
inline MatrixSu3 X(int k) {
  MatrixSu3 m = zero_matrix();
  const Gaussian one(1), i = Gaussian::i();
  switch (k) {
    case 1: m(0, 1) = one; m(1, 0) = -one; break;
    case 2: m(1, 2) = one; m(2, 1) = -one; break;
    case 3: m(0, 2) = -one; m(2, 0) = one; break;
    case 4: m(0, 0) = i; m(1, 1) = -i; break;
    case 5: m(0, 1) = i; m(1, 0) = i; break;
    case 6: m(1, 2) = i; m(2, 1) = i; break;
    case 7: m(0, 2) = i; m(2, 0) = i; break;
    default: throw std::out_of_range("su3::X: index must be 1..7");
  }
  return m;
}

inline MatrixSu3 bracket(const MatrixSu3& a, const MatrixSu3& b) { return a * b - b * a; }

/// Positive-definite invariant pairing <x, y> = -Re tr(xy).
inline Rational killing_pairing(const MatrixSu3& a, const MatrixSu3& b) {
  Gaussian tr(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) tr += a(i, j) * b(j, i);
  return -tr.re;
}

inline bool is_su3_element(const MatrixSu3& m) {
  Gaussian tr(0);
  for (int i = 0; i < 3; ++i) tr += m(i, i);
  if (!tr.is_zero()) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(m(i, j) + m(j, i).conj()).is_zero()) return false;
  return true;
}

/// Algebra element dual to an invariant coframe slot.  The assignment makes
/// the Maurer-Cartan relation d beta^a = -1/2 c^a_{bc} beta^b wedge beta^c
/// reproduce the structure equations used throughout (note the sign on the
/// sigma1 dual).
inline MatrixSu3 frame_dual(int slot) {
  switch (static_cast<Coframe>(slot)) {
    case Coframe::zeta: return H();
    case Coframe::kappa: return X(4);
    case Coframe::nu1: return X(1);
    case Coframe::nu2: return X(5);
    case Coframe::sigma1: return -X(3);
    case Coframe::sigma2: return X(7);
    case Coframe::mu1: return X(2);
    case Coframe::mu2: return X(6);
    default: throw std::out_of_range("su3::frame_dual: slot has no algebra dual");
  }
}

/// Structure constants c^a_{bc} of the frame-dual basis, indexed by coframe
/// slots 1..8.  Computed once from brackets and the orthogonal pairing.
class StructureTable {
public:
  static const StructureTable& instance() {
    static const StructureTable table;
    return table;
  }

  /// c^a_{bc} with [F_b, F_c] = sum_a c^a_{bc} F_a.
  const Rational& c(int a, int b, int c_) const {
    check(a); check(b); check(c_);
    return m_c[a - 1][b - 1][c_ - 1];
  }

private:
  StructureTable() {
    std::array<MatrixSu3, 8> F;
    std::array<Rational, 8> norm;
    for (int s = 1; s <= 8; ++s) {
      F[s - 1] = frame_dual(s);
      norm[s - 1] = killing_pairing(F[s - 1], F[s - 1]);
    }
    for (int b = 0; b < 8; ++b)
      for (int c_ = 0; c_ < 8; ++c_) {
        const MatrixSu3 br = bracket(F[b], F[c_]);
        for (int a = 0; a < 8; ++a)
          m_c[a][b][c_] = killing_pairing(br, F[a]) / norm[a];
      }
  }

  static void check(int s) {
    if (s < 1 || s > 8) throw std::out_of_range("StructureTable: slot must be 1..8");
  }

  Rational m_c[8][8][8];
};

inline const Rational& structure_constant(int a, int b, int c) {
  return StructureTable::instance().c(a, b, c);
}

/// Matrix of ad_x restricted to the frame-dual basis: column c holds the
/// coefficients of [x, F_c].  Requires x to lie in the span of the duals.
inline Eigen::Matrix<Rational, 8, 8> adjoint_matrix(const MatrixSu3& x) {
  Eigen::Matrix<Rational, 8, 8> out;
  std::array<MatrixSu3, 8> F;
  std::array<Rational, 8> norm;
  for (int s = 1; s <= 8; ++s) {
    F[s - 1] = frame_dual(s);
    norm[s - 1] = killing_pairing(F[s - 1], F[s - 1]);
  }
  for (int c = 0; c < 8; ++c) {
    const MatrixSu3 br = bracket(x, F[c]);
    MatrixSu3 rebuilt = zero_matrix();
    for (int a = 0; a < 8; ++a) {
      out(a, c) = killing_pairing(br, F[a]) / norm[a];
      rebuilt += F[a] * Gaussian(out(a, c));
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(rebuilt(i, j) - br(i, j)).is_zero())
          throw std::domain_error("su3::adjoint_matrix: bracket left the frame span");
  }
  return out;
}

inline Eigen::Matrix3cd to_complex_double(const MatrixSu3& m) {
  Eigen::Matrix3cd out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out(i, j) = std::complex<double>(to_double(m(i, j).re), to_double(m(i, j).im));
  return out;
}

}  // namespace su3
}  // namespace calabi
