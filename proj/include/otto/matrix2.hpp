#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace otto {

using cplx = std::complex<double>;

/// Fixed-size 2x2 complex matrix, row-major.
class Matrix2 {
 public:
  constexpr Matrix2() = default;
  constexpr Matrix2(cplx a, cplx b, cplx c, cplx d) : m_{a, b, c, d} {}

  static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  constexpr cplx operator()(int row, int col) const { return m_[2 * row + col]; }
  constexpr cplx& operator()(int row, int col) { return m_[2 * row + col]; }

  cplx trace() const { return m_[0] + m_[3]; }
  cplx determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  Matrix2 adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
  }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.m_[0] * y.m_[0] + x.m_[1] * y.m_[2], x.m_[0] * y.m_[1] + x.m_[1] * y.m_[3],
            x.m_[2] * y.m_[0] + x.m_[3] * y.m_[2], x.m_[2] * y.m_[1] + x.m_[3] * y.m_[3]};
  }
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
    return {x.m_[0] + y.m_[0], x.m_[1] + y.m_[1], x.m_[2] + y.m_[2], x.m_[3] + y.m_[3]};
  }
  friend Matrix2 operator-(const Matrix2& x, const Matrix2& y) {
    return {x.m_[0] - y.m_[0], x.m_[1] - y.m_[1], x.m_[2] - y.m_[2], x.m_[3] - y.m_[3]};
  }
  friend Matrix2 operator*(cplx s, const Matrix2& x) {
    return {s * x.m_[0], s * x.m_[1], s * x.m_[2], s * x.m_[3]};
  }

  /// Largest entry modulus; used as the distance measure max|A − B|.
  double max_abs() const {
    double result = 0.0;
    for (const cplx& z : m_) result = std::max(result, std::abs(z));
    return result;
  }

 private:
  std::array<cplx, 4> m_{};
};

inline double max_abs_diff(const Matrix2& x, const Matrix2& y) { return (x - y).max_abs(); }

/// Column vector in the σ_z basis.
struct Ket2 {
  cplx up;
  cplx down;

  friend Ket2 operator*(const Matrix2& m, const Ket2& k) {
    return {m(0, 0) * k.up + m(0, 1) * k.down, m(1, 0) * k.up + m(1, 1) * k.down};
  }
  friend Ket2 operator+(const Ket2& a, const Ket2& b) { return {a.up + b.up, a.down + b.down}; }
  friend Ket2 operator*(cplx s, const Ket2& k) { return {s * k.up, s * k.down}; }
};

/// ⟨a|b⟩
inline cplx inner(const Ket2& a, const Ket2& b) {
  return std::conj(a.up) * b.up + std::conj(a.down) * b.down;
}

/// |a⟩⟨b|
inline Matrix2 outer(const Ket2& a, const Ket2& b) {
  return {a.up * std::conj(b.up), a.up * std::conj(b.down), a.down * std::conj(b.up),
          a.down * std::conj(b.down)};
}

namespace pauli {

inline constexpr cplx i{0.0, 1.0};

inline Matrix2 x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Matrix2 y() { return {0.0, -i, i, 0.0}; }
inline Matrix2 z() { return {1.0, 0.0, 0.0, -1.0}; }

}  // namespace pauli

enum class Axis { x, y };

inline Matrix2 pauli_along(Axis axis) { return axis == Axis::x ? pauli::x() : pauli::y(); }

/// Eigenstate of σ_axis with eigenvalue +1 (`plus`) or −1.
inline Ket2 eigenket(Axis axis, bool plus) {
  const double s = 1.0 / std::sqrt(2.0);
  const double sign = plus ? 1.0 : -1.0;
  if (axis == Axis::x) return {s, sign * s};
  return {s, sign * s * pauli::i};
}

/// Eigenvalues of a Hermitian 2x2 matrix, ascending.
inline std::array<double, 2> hermitian_eigenvalues(const Matrix2& m) {
  const double mean = 0.5 * (m(0, 0).real() + m(1, 1).real());
  const double half_diff = 0.5 * (m(0, 0).real() - m(1, 1).real());
  const double radius = std::hypot(half_diff, std::abs(m(0, 1)));
  return {mean - radius, mean + radius};
}

}  // namespace otto
