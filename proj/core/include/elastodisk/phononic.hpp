#pragma once

#include <vector>

#include "elastodisk/layer_ops.hpp"

namespace elastodisk {

/// Quasi-momentum and scaling of the square-lattice phononic problem
/// (unit cell, inclusion Omega = s D).
struct LatticeParams {
  Vec2 alpha = Vec2(M_PI, 0.0);  // in [-pi,pi]^2 \ {0}
  double scale = 0.1;            // s, inclusion scale
  double alpha_floor = 0.3;      // exclusion radius around the Gamma point
  double ewald_split = 0.0;      // 0 = choose automatically
  double tail_tol = 1e-12;
};

/// Quasi-periodic static Green's tensor, evaluated by Ewald splitting of the
/// reciprocal-space symbol sum (exact quasi-periodicity by construction).
CMat2 green_quasiperiodic_static(const Vec2& x, const Vec2& alpha, const ElasticMedium& m,
                                 const LatticeParams& lp = {});

/// Smooth lattice correction  Lambda^alpha(x) = G^{alpha,0}(x) - G^0(x),
/// finite at x = 0.
CMat2 lattice_correction(const Vec2& x, const Vec2& alpha, const ElasticMedium& m,
                         const LatticeParams& lp = {});

/// Single layer operator with the quasi-periodic kernel on the scaled
/// boundary s * bd(D); `base` carries the unscaled disk discretization.
DenseOperator assemble_S_alpha(double scale, const DiskBoundary& base, const Vec2& alpha,
                               const ElasticMedium& m, const LatticeParams& lp = {});

/// Q^alpha_ij = -int (S^alpha)^{-1}[e_i] . e_j  (2x2, Hermitian up to
/// discretization error).
CMat2 matrix_Q_alpha(double scale, const DiskBoundary& base, const Vec2& alpha,
                     const ElasticMedium& m, const LatticeParams& lp = {});

/// The rank-2 correction operator of the scaling identity and its contraction
/// bound ||(S_hat^s)^{-1} Pi|| (used by the dilute argument).
double contraction_norm(double scale, const DiskBoundary& base, const Vec2& alpha,
                        const ElasticMedium& m, const LatticeParams& lp = {});

enum class BandgapMode { full, dilute };

struct BandgapResult {
  double omega_star = 0.0;
  BandgapMode method = BandgapMode::dilute;
  Complex dilute_t{};                 // dilute closed-form constant (dilute mode)
  std::vector<Vec2> alpha_grid;       // full mode: evaluated quasi-momenta
  std::vector<double> lambda_max;     // full mode: max eigenvalue per alpha
  bool regime_warning = false;        // |eps/(s^2 ln s)| not small
  double regime_parameter = 0.0;
};

/// Bandgap edge frequency.  Full mode maximizes sqrt(lambda_i^alpha/(rho |Omega|)) sqrt(eps)
/// over the alpha grid; dilute mode evaluates the closed form
/// omega* = Re sqrt(-2 t eps / (rho R s^2)).
BandgapResult bandgap_edge(double scale, const DiskBoundary& base, const ElasticMedium& m,
                           const ContrastParams& contrast, BandgapMode mode,
                           int alpha_grid_per_side = 16, const LatticeParams& lp = {});

/// Dilute constant t = 1 / (tau1 R ln R - tau2 R/2 + 2 pi R beta_s).
Complex dilute_t(double scale, double R, const ElasticMedium& m);

}  // namespace elastodisk
