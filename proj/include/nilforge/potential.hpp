#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilforge/algebra.hpp"
#include "nilforge/grid.hpp"

namespace nilforge {

/// Log-potential v, holomorphic coefficient B and derived support h = 4 e^{v/2}
/// on a grid. The Dirac potential is e^{w/2} = i e^{v/2}; the mean curvature
/// of the Nil surface is fixed to zero.
struct PotentialField {
  DomainGrid grid;
  std::vector<double> v;
  std::vector<cplx> B;

  double support(std::size_t i) const { return 4.0 * std::exp(0.5 * v[i]); }
  std::vector<double> support_field() const;
};

PotentialField vacuum_potential(cplx B0, const DomainGrid& grid);

/// Samples of the polynomial sum_k coeffs[k] z^k at every node.
std::vector<cplx> sample_polynomial(const std::vector<cplx>& coeffs, const DomainGrid& grid);

struct NewtonReport {
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> history;
};

/// Dirichlet problem  lap v = 8 (e^v - |B|^2 e^{-v})  with the 5-point
/// Laplacian, by damped Newton started from log|B|. boundary follows
/// DomainGrid::perimeter(); empty means log|B| on the perimeter.
PotentialField solve_flatness_pde(const std::vector<cplx>& B, const DomainGrid& grid,
                                  const std::vector<double>& boundary, double tol,
                                  int max_iterations = 12, NewtonReport* report = nullptr);

/// Max-norm residual of the 5-point discretization at interior nodes.
double pde_residual(const PotentialField& P);

/// Per-node |d B / d zbar| by central differences; zero on the perimeter.
std::vector<double> holomorphy_residual(const PotentialField& P);

/// Zero-curvature defect of the coefficient pair at loop angle theta,
/// || dU/dzbar - dV/dz - [U, V] ||_max at interior nodes (zero elsewhere).
std::vector<double> flatness_residual(const PotentialField& P, double theta);

/// JSON text with 17 significant digits.
std::string save_potential(const PotentialField& P, const std::string& generator = "nilforge",
                           double residual = 0.0);
PotentialField load_potential(const std::string& text);

void write_potential_file(const PotentialField& P, const std::string& path,
                          const std::string& generator = "nilforge", double residual = 0.0);
PotentialField read_potential_file(const std::string& path);

}  // namespace nilforge
