#pragma once

// Small exact kernels: complex 2x2 matrices, the su(1,1) model of Minkowski
// 3-space, group-membership residuals and spectral differentiation on the
// loop circle.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace nilforge {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// Complex 2x2 matrix [[a, b], [c, d]].
struct Matrix2C {
  cplx a{}, b{}, c{}, d{};

  static constexpr Matrix2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Matrix2C zero() { return {}; }
  static constexpr Matrix2C diag(cplx p, cplx q) { return {p, 0.0, 0.0, q}; }

  constexpr cplx& operator()(int r, int col) {
    return r == 0 ? (col == 0 ? a : b) : (col == 0 ? c : d);
  }
  constexpr const cplx& operator()(int r, int col) const {
    return r == 0 ? (col == 0 ? a : b) : (col == 0 ? c : d);
  }

  constexpr Matrix2C& operator+=(const Matrix2C& o) {
    a += o.a; b += o.b; c += o.c; d += o.d;
    return *this;
  }
  constexpr Matrix2C& operator-=(const Matrix2C& o) {
    a -= o.a; b -= o.b; c -= o.c; d -= o.d;
    return *this;
  }
  constexpr Matrix2C& operator*=(cplx s) {
    a *= s; b *= s; c *= s; d *= s;
    return *this;
  }
};

constexpr Matrix2C operator+(Matrix2C x, const Matrix2C& y) { return x += y; }
constexpr Matrix2C operator-(Matrix2C x, const Matrix2C& y) { return x -= y; }
constexpr Matrix2C operator-(const Matrix2C& x) { return {-x.a, -x.b, -x.c, -x.d}; }
constexpr Matrix2C operator*(Matrix2C x, cplx s) { return x *= s; }
constexpr Matrix2C operator*(cplx s, Matrix2C x) { return x *= s; }
constexpr Matrix2C operator*(const Matrix2C& x, double s) { return x * cplx(s); }
constexpr Matrix2C operator*(double s, const Matrix2C& x) { return x * cplx(s); }

constexpr Matrix2C operator*(const Matrix2C& x, const Matrix2C& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

constexpr cplx det(const Matrix2C& m) { return m.a * m.d - m.b * m.c; }
constexpr cplx trace(const Matrix2C& m) { return m.a + m.d; }

/// Conjugate transpose.
inline Matrix2C adjoint(const Matrix2C& m) {
  return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

/// General inverse; the caller guarantees det != 0.
inline Matrix2C inverse(const Matrix2C& m) {
  const cplx inv = 1.0 / det(m);
  return {m.d * inv, -m.b * inv, -m.c * inv, m.a * inv};
}

constexpr Matrix2C commutator(const Matrix2C& x, const Matrix2C& y) {
  return x * y - y * x;
}

/// Ad(g) x = g x g^{-1}.
inline Matrix2C conjugate_by(const Matrix2C& g, const Matrix2C& x) {
  return g * x * inverse(g);
}

constexpr Matrix2C off_diagonal(const Matrix2C& m) { return {0.0, m.b, m.c, 0.0}; }
constexpr Matrix2C diagonal_part(const Matrix2C& m) { return {m.a, 0.0, 0.0, m.d}; }

/// Max absolute entry.
inline double max_abs(const Matrix2C& m) {
  return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

inline bool is_finite(const Matrix2C& m) {
  auto ok = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return ok(m.a) && ok(m.b) && ok(m.c) && ok(m.d);
}

inline constexpr Matrix2C kSigma1{0.0, 1.0, 1.0, 0.0};
inline constexpr Matrix2C kSigma3{1.0, 0.0, 0.0, -1.0};
/// Indefinite form diag(1, -1) defining SU(1,1).
inline constexpr Matrix2C kJ = kSigma3;

/// exp(X) for traceless X via X^2 = -det(X) I.
Matrix2C exp_traceless(const Matrix2C& x);

/// Principal square root of a 2x2 matrix with no eigenvalue on (-inf, 0].
Matrix2C sqrt_principal(const Matrix2C& m);

/// Coordinates (x1, x2, x3) in the orthonormal basis E1, E2, E3 of su(1,1);
/// x3 is the timelike direction.
struct Su11Vector {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;

  friend constexpr Su11Vector operator+(Su11Vector p, const Su11Vector& q) {
    return {p.x1 + q.x1, p.x2 + q.x2, p.x3 + q.x3};
  }
  friend constexpr Su11Vector operator-(Su11Vector p, const Su11Vector& q) {
    return {p.x1 - q.x1, p.x2 - q.x2, p.x3 - q.x3};
  }
  friend constexpr Su11Vector operator*(double s, Su11Vector p) {
    return {s * p.x1, s * p.x2, s * p.x3};
  }
};

/// E1 = 1/2 [[0, i], [-i, 0]], E2 = 1/2 [[0, -1], [-1, 0]], E3 = 1/2 [[-i, 0], [0, i]].
std::array<Matrix2C, 3> basis_matrices();

Matrix2C to_matrix(const Su11Vector& v);

/// Coefficients of m along E1, E2, E3. The part of m outside su(1,1) is
/// dropped; see su11_decomposition_residual.
Su11Vector from_matrix(const Matrix2C& m);

/// || m - to_matrix(from_matrix(m)) ||_max; zero iff m lies in su(1,1).
double su11_decomposition_residual(const Matrix2C& m);

/// a.x1 b.x1 + a.x2 b.x2 - a.x3 b.x3, equal to 2 Tr(AB) on matrix forms.
constexpr double lorentz_inner(const Su11Vector& a, const Su11Vector& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3;
}

/// max(||M J M^H - J||_max, |det M - 1|).
double su11_residual(const Matrix2C& m);

/// Equispaced angles theta_k = 2 pi k / n on the unit circle, n even and >= 8.
class LoopSampleSet {
 public:
  explicit LoopSampleSet(int n);

  int size() const noexcept { return n_; }
  double theta(int k) const noexcept { return 2.0 * std::numbers::pi * k / n_; }
  cplx lambda(int k) const noexcept { return std::polar(1.0, theta(k)); }
  /// Index of theta_k + pi.
  int antipode(int k) const noexcept { return (k + n_ / 2) % n_; }

  friend bool operator==(const LoopSampleSet&, const LoopSampleSet&) = default;

 private:
  int n_;
};

/// Spectral d/dtheta of periodic samples; Nyquist mode dropped. Exact for
/// trigonometric polynomials of degree < n/2.
std::vector<cplx> theta_derivative(std::span<const cplx> samples, const LoopSampleSet& loops);
std::vector<Matrix2C> theta_derivative(std::span<const Matrix2C> samples,
                                       const LoopSampleSet& loops);

/// max_k || F(theta_k + pi) - sigma3 F(theta_k) sigma3 ||_max.
double twisted_residual(std::span<const Matrix2C> samples, const LoopSampleSet& loops);

}  // namespace nilforge
