#pragma once

// Hot loops of the frame sweep and the finite-difference diagnostics, with a
// scalar reference build and an AVX2 build selected once at runtime.
//
// Batched 2x2 complex matrices use a planar layout: for a batch of n
// matrices the buffer holds 8 planes of n doubles in the order
// a.re a.im b.re b.im c.re c.im d.re d.im.
//
// Both builds evaluate every output with the same sequence of IEEE
// operations, so results agree bit for bit.

#include <cstddef>

namespace nilforge::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  /// out = x * y, matrix by matrix.
  void (*mat_mul)(std::size_t n, const double* x, const double* y, double* out);
  /// acc += s * (x * y).
  void (*mat_mul_add)(std::size_t n, const double* x, const double* y, double s, double* acc);
  /// out = x + s * y over len doubles.
  void (*waxpy)(std::size_t len, const double* x, double s, const double* y, double* out);
  /// out = y + h6 * (k1 + 2 k2 + 2 k3 + k4) over len doubles.
  void (*rk4_combine)(std::size_t len, const double* y, double h6, const double* k1,
                      const double* k2, const double* k3, const double* k4, double* out);
  /// Central difference along x of a row-major nx-by-ny field. deriv is 1
  /// or 2, order is 2, 4, 6 or 8. Nodes closer than order/2 to the left or right
  /// edge are left untouched.
  void (*diff_x)(const double* u, double* out, int nx, int ny, int deriv, int order, double h);
  /// Same along y; rows closer than order/2 to the bottom or top edge are
  /// left untouched.
  void (*diff_y)(const double* u, double* out, int nx, int ny, int deriv, int order, double h);
};

/// Table chosen from CPU features; NILFORGE_SIMD=scalar forces the reference.
const KernelTable& active();
Isa active_isa();

/// Direct access for equivalence tests. Asking for avx2 on a CPU without it
/// returns the scalar table.
const KernelTable& table_for(Isa isa);
bool avx2_available();

/// Stencil weights shared by both builds. first[m-1] multiplies
/// u[+m] - u[-m]; second_center and second[m-1] (u[+m] + u[-m]) give the
/// second derivative.
struct Stencil {
  int radius;
  double first[4];
  double second_center;
  double second[4];
};
const Stencil& stencil(int order);

}  // namespace nilforge::kernels
