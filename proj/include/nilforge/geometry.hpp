#pragma once

#include <string>
#include <vector>

#include "nilforge/algebra.hpp"
#include "nilforge/frame.hpp"
#include "nilforge/grid.hpp"
#include "nilforge/sym.hpp"

namespace nilforge {

// Every finite-difference diagnostic uses central stencils of the given order
// (2, 4, 6 or 8). Nodes within order/2 of the edge carry NaN; see margin().

int stencil_margin(int order);

/// Max of |field| over nodes at least `margin` away from every edge.
double interior_max(const std::vector<double>& field, const DomainGrid& grid, int margin);
double interior_min(const std::vector<double>& field, const DomainGrid& grid, int margin);

/// Central derivatives of one real field.
struct Partials {
  std::vector<double> x, y, xx, yy, xy;
};
Partials partials(const std::vector<double>& u, const DomainGrid& grid, int order, bool second = true);

struct MetricField {
  std::vector<double> e_u;
  std::vector<double> conformality;
  int margin = 0;
};

/// e^{u_L3} = 2 <f_z, f_zbar> and conformality |<f_z, f_z>|.
MetricField l3_first_fundamental(const SurfaceField& s, int order = 6);

struct PhiField {
  std::vector<cplx> phi1, phi2, phi3;
  int margin = 0;
};

/// Components of f^{-1} f_z in the left-invariant frame:
/// phi1 = d_z x1, phi2 = d_z x2, phi3 = d_z x3 + (x2 d_z x1 - x1 d_z x2) / 2.
PhiField phi_coefficients(const SurfaceField& s, int order = 6);

/// e^u = 2 sum |phi_k|^2 with conformality |sum phi_k^2|.
MetricField nil_first_fundamental(const SurfaceField& s, int order = 6);

/// H = 2 e^{-u} <f_{z zbar}, N>. Throws DegenerateMetric where e^u < 1e-10.
std::vector<double> l3_mean_curvature(const SurfaceField& s, const std::vector<Su11Vector>& normal,
                                      int order = 6);

/// Q = <f_zz, N>.
std::vector<cplx> hopf_coefficient(const SurfaceField& s, const std::vector<Su11Vector>& normal,
                                   int order = 6);

/// h = 2 (|psi1|^2 - |psi2|^2). Throws NonPositiveSupport if some h <= 0.
std::vector<double> support_field(const SpinorField& spinors);

struct GaussMap {
  std::vector<cplx> g;
  /// |g_{z zbar} + 2 conj(g) g_z g_zbar / (1 - |g|^2)|
  std::vector<double> harmonic_residual;
  /// max over nodes of min(|g_z|, |g_zbar|); zero only for a conformal map.
  double nonconformality = 0.0;
  int margin = 0;
};

/// g = psi2 / conj(psi1). Throws NotUpward if |g| >= 1 somewhere.
GaussMap normal_gauss_map(const SpinorField& spinors, const DomainGrid& grid, int order = 6);

struct GraphReport {
  bool pass = false;
  bool jacobian_ok = false;
  bool injective = false;
  int jacobian_sign = 0;
  double min_abs_jacobian = 0.0;
  GridNode weakest_node;  // where |Jacobian| is smallest
  std::size_t overlapping_pairs = 0;
  double min_e_u = 0.0;
};

/// Projection (x1, x2) of the surface: constant-sign Jacobian bounded away
/// from zero, and no two grid triangles overlapping in the plane.
GraphReport graph_check(const SurfaceField& s, int order = 6);

}  // namespace nilforge
