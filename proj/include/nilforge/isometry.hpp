#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilforge/algebra.hpp"
#include "nilforge/frame.hpp"
#include "nilforge/sym.hpp"

namespace nilforge {

/// Element of Nil_3 x| SO_2 acting by
/// (z, x3) -> (e^{i rot} z + alpha, x3 + Im(conj(alpha) e^{i rot} z) / 2 + a3).
struct NilIsometry {
  cplx alpha = 0.0;
  double a3 = 0.0;
  double rot = 0.0;
};

NilPoint nil_act(const NilIsometry& g, const NilPoint& p);
/// g2 after g1.
NilIsometry compose(const NilIsometry& g2, const NilIsometry& g1);

inline NilPoint to_nil(const Su11Vector& v) { return {v.x1, v.x2, v.x3}; }
inline Su11Vector to_triple(const NilPoint& p) { return {p.x1, p.x2, p.x3}; }

/// Rigid motion x -> Ad(M) x + t of Minkowski space.
struct L3Motion {
  Matrix2C M = Matrix2C::identity();
  Su11Vector t;

  static L3Motion rotation(double phi);
  /// [[alpha, beta], [conj(beta), alpha]]; throws ConstraintViolation unless
  /// alpha is real with alpha^2 - |beta|^2 = 1 to 1e-12.
  static L3Motion boost(double alpha, cplx beta);
  Su11Vector apply(const Su11Vector& x) const;
};

/// A loop M(theta) on the sample set with its first two theta-derivatives.
struct LoopJet {
  LoopSampleSet loops{8};
  std::vector<Matrix2C> M, dM, ddM;

  static LoopJet constant(const Matrix2C& m, const LoopSampleSet& loops);
  /// Derivatives taken spectrally.
  static LoopJet from_samples(std::vector<Matrix2C> samples, const LoopSampleSet& loops);

  /// exp(phi(theta) xi) with phi = amplitude sin(mode theta), or
  /// amplitude (1 - cos(mode theta)) when cosine is set.
  struct Factor {
    Matrix2C xi;
    double amplitude;
    int mode;
    bool cosine;
  };
  /// Ordered product of factors with analytic derivatives.
  static LoopJet from_factors(const std::vector<Factor>& factors, const LoopSampleSet& loops);

  /// X = M' M^{-1} and Y = X' = M'' M^{-1} - X^2 at sample t.
  Matrix2C X(int t) const;
  Matrix2C Y(int t) const;
};

/// F~ = M F k with k = diag(e^{is}, e^{-is}) and the matching jets.
/// Throws ConstraintViolation if some M sample is not in SU(1,1).
FrameField transport_frame(const FrameField& FF, const LoopJet& M, double s = 0.0);

/// Ad(M) f - X at sample t, per node.
std::vector<Su11Vector> predicted_l3_transform(const std::vector<SymMatrices>& sym,
                                               const LoopJet& M, int t);

/// (Ad(M) f - X)^o - ([X, Ad(M) f] + Ad(M) df - Y)^d / 2 at sample t, per node.
std::vector<NilPoint> predicted_nil_transform(const std::vector<SymMatrices>& sym,
                                              const LoopJet& M, int t);

/// Nil motion predicted for a loop with M = I at lambda = 1: translation by
/// -X^o plus the vertical shift from Y^d / 2.
NilIsometry predicted_translation(const LoopJet& M);

/// f_L3 = [[i p, q], [conj q, -i p]] and -(1/2) df = [[i r, s], [conj s, -i r]]
/// at every node.
struct BoostDecomposition {
  std::vector<double> p, r;
  std::vector<cplx> q, s;
  double reconstruction_residual = 0.0;
};
BoostDecomposition decompose_boost(const std::vector<SymMatrices>& sym);

/// Nil coordinates of the surface moved by the constant boost (alpha, beta),
/// with the extra diagonal term diag(i Y_d, -i Y_d) / 2.
std::vector<NilPoint> boost_transform(const BoostDecomposition& dec, double alpha, cplx beta,
                                      double y_d = 0.0);

/// (alpha^2 + |beta|^2) phi3 + 2i Re(alpha beta) phi1 + 2i Im(alpha beta) phi2.
std::vector<cplx> phi3_transform(const std::vector<cplx>& phi1, const std::vector<cplx>& phi2,
                                 const std::vector<cplx>& phi3, double alpha, cplx beta);

/// Checks alpha^2 - |beta|^2 = 1 to 1e-12 with alpha >= 1.
void check_boost_parameters(double alpha, cplx beta);

struct BoostMember {
  double alpha;
  cplx beta;
  FrameField frame;
};
/// One transported frame per parameter pair.
std::vector<BoostMember> boost_family(const FrameField& FF,
                                      const std::vector<std::pair<double, cplx>>& params);

/// Parameters alpha_i = 1 + (alpha_max - 1)(i + 1)/A, beta_ik = sqrt(alpha_i^2 - 1) e^{2 pi i k / B}.
std::vector<std::pair<double, cplx>> boost_grid(int alpha_steps, int beta_steps, double alpha_max);

/// Max residual of the least-squares fit values ~ a x1 + b x2 + c.
double affine_fit_residual(const std::vector<NilPoint>& base, const std::vector<double>& values);

/// Least-squares fit z_to ~ a z_from + b of the horizontal parts.
struct PlanarFit {
  cplx a, b;
  double residual;
};
PlanarFit fit_planar_similarity(const std::vector<NilPoint>& from, const std::vector<NilPoint>& to);

struct FamilyRow {
  double alpha;
  cplx beta;
  cplx phi3_base;
  bool graph_pass;
  double affine_residual;
  double support_residual;
};
void write_family_csv(const std::string& path, const std::vector<FamilyRow>& rows);

}  // namespace nilforge
