#pragma once

#include <vector>

#include "nilforge/algebra.hpp"
#include "nilforge/frame.hpp"
#include "nilforge/grid.hpp"

namespace nilforge {

/// Exponential coordinates of Nil_3.
struct NilPoint {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

enum class Ambient { minkowski, nil };

/// Coordinates per node; for Nil surfaces the triple is (x1, x2, x3) in
/// exponential coordinates.
struct SurfaceField {
  DomainGrid grid;
  Ambient ambient = Ambient::minkowski;
  int loop_index = 0;
  double theta = 0.0;
  std::vector<Su11Vector> points;
};

/// Per-node Sym data at one loop sample: f = f_L3, df = d f / d theta and the
/// normal N, all as su(1,1) matrices.
struct SymMatrices {
  Matrix2C f, df, N;
};

/// f = -G F^{-1} - N,  N = (i/2) F sigma3 F^{-1}, and
/// df = -(H F^{-1} - A^2) - (i/2) [A, F sigma3 F^{-1}] with A = G F^{-1}.
SymMatrices sym_matrices(const Matrix2C& F, const Matrix2C& G, const Matrix2C& H);

/// Nil Sym point f^o - (1/2) (df)^d.
Matrix2C nil_matrix(const Matrix2C& f, const Matrix2C& df);

std::vector<SymMatrices> sym_matrix_field(const FrameField& FF, int t);

struct MinkowskiSurface {
  SurfaceField surface;
  std::vector<Su11Vector> normal;
};

MinkowskiSurface sym_minkowski(const FrameField& FF, int t);
SurfaceField sym_nil(const FrameField& FF, int t);

struct FamilyMember {
  int loop_index;
  double theta;
  SurfaceField nil;
  MinkowskiSurface l3;
};

std::vector<FamilyMember> associated_family(const FrameField& FF, int threads = 0);

/// Both Sym maps with every theta-derivative taken spectrally across the
/// loop samples instead of from the jets. Used as a cross-check.
struct SpectralSurfaces {
  SurfaceField nil;
  SurfaceField l3;
};
SpectralSurfaces sym_spectral(const FrameField& FF, int t);

/// Largest part of any Nil Sym matrix lying outside su(1,1).
double nil_decomposition_residual(const FrameField& FF, int t);

}  // namespace nilforge
