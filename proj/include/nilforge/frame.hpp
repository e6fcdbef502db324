#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilforge/algebra.hpp"
#include "nilforge/grid.hpp"
#include "nilforge/potential.hpp"

namespace nilforge {

/// lambda-independent data of the Maurer-Cartan coefficients at one point:
/// w_z/4, e^{w/2}, B e^{-w/2} and conj(B) e^{-w/2}.
struct NodeAlpha {
  cplx wz4, ew, bew, bbar_ew;
};

/// Node coefficients for the whole grid; w_z uses fourth-order differences
/// (one-sided near the edges). Throws SingularSupport where h < 1e-12.
std::vector<NodeAlpha> node_alpha(const PotentialField& P);

/// (U, V) at loop parameter lambda = e^{i theta}.
std::pair<Matrix2C, Matrix2C> alpha_at(const NodeAlpha& n, double theta);

/// theta-derivatives of order 0, 1, 2 of U and V.
struct AlphaJet {
  Matrix2C U[3], V[3];
};
AlphaJet alpha_jet(const NodeAlpha& n, double theta);

std::pair<Matrix2C, Matrix2C> build_alpha(const PotentialField& P, GridNode node, double theta);

enum class SpineOrder { row_first, column_first };

struct FrameOptions {
  GridNode basepoint{-1, -1};  // grid center when negative
  SpineOrder spine = SpineOrder::row_first;
  /// integrate_frame refuses potentials whose flatness residual at theta = 0
  /// exceeds this.
  double flatness_threshold = 1e-2;
  double projection_limit = 1e-3;
  /// RK4 steps per grid interval; coefficients between nodes are cubic
  /// interpolants.
  int substeps = 2;
  int threads = 0;  // 0: NILFORGE_THREADS or hardware concurrency
};

/// Extended frame F with its theta-jets G = dF/dtheta and H = d^2F/dtheta^2
/// at every (loop sample, node). Storage is loop-major.
struct FrameField {
  DomainGrid grid;
  LoopSampleSet loops{8};
  GridNode basepoint;
  std::vector<Matrix2C> F, G, H;

  std::size_t at(int t, std::size_t node) const { return static_cast<std::size_t>(t) * grid.size() + node; }
  std::size_t at(int t, int j, int k) const { return at(t, grid.index(j, k)); }
};

/// Runge-Kutta 4 along a spine through the basepoint, then across the grid;
/// midpoint coefficients by cubic interpolation; projection back to SU(1,1)
/// after every step. The jets are carried by the variational equations.
FrameField integrate_frame(const PotentialField& P, const LoopSampleSet& loops,
                           const FrameOptions& options = {});

/// max over nodes and samples of su11_residual(F).
double frame_group_residual(const FrameField& FF);
/// max over nodes of twisted_residual along the loop.
double frame_twisted_residual(const FrameField& FF);

struct SpinorField {
  std::vector<cplx> psi1, psi2;
};

/// psi_j = e^{i pi/4} sqrt(h/2) F_{1j} from the lambda = 1 frame.
SpinorField extract_spinors(const FrameField& FF, const std::vector<double>& h);

void write_frame_dump(const FrameField& FF, const std::string& path);
FrameField read_frame_dump(const std::string& path);

}  // namespace nilforge
