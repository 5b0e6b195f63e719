#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elastodisk/disk_spectral.hpp"
#include "elastodisk/layer_ops.hpp"

namespace elastodisk {

/// Discretized transmission system
///   [ S^{kt}            -S^{ke}          ] [phi_int]   [ u_in          ]
///   [ -I/2 + K^{kt,*}   -delta(I/2+K^{ke,*}) ] [phi_ext] = [ delta t(u_in) ]
/// with kt = sqrt(rho) tau omega, ke = sqrt(rho) omega.
struct SystemOperator {
  Eigen::MatrixXcd matrix;
  Complex omega{};
  double delta = 0.0;
  int n_nodes = 0;
};

SystemOperator assemble_system(Complex omega, const ContrastParams& contrast,
                               const DiskBoundary& b, const ElasticMedium& m);

/// Right-hand side for a compressional plane wave incident along `direction`.
Eigen::VectorXcd plane_wave_rhs(Complex omega, const Vec2& direction, const ContrastParams& contrast,
                                const DiskBoundary& b, const ElasticMedium& m);

/// Incident field and its traction at a point.
CVec2 plane_wave(Complex omega, const Vec2& direction, const Vec2& x, const ElasticMedium& m);
CVec2 plane_wave_traction(Complex omega, const Vec2& direction, const Vec2& x, const Vec2& nu,
                          const ElasticMedium& m);

/// Leading-order resonance relation for channel i (1-based):
///   rho w^2 ln(w) Q_ii + rho w^2 (ln(sqrt(rho) tau) Q_ii + P_ii) - eps a_i(w).
/// Coefficients from operator_QP; a_i re-evaluated at w ("live" convention).
Complex resonance_residual(Complex omega, int i, double R, const ElasticMedium& m,
                           const ContrastParams& contrast);

struct ResonanceSolverConfig {
  int max_iter = 100;
  double residual_factor = 1e-14;  // target |residual| <= factor * epsilon
  int dip_grid = 21;               // SVD cross-check grid points
  double dip_halfwidth = 0.15;     // relative half-width of the scan window
};

enum class ResonanceMethod { leading_order, svd_dip };

struct ResonanceResult {
  int index = 1;                  // 1, 2 or 3
  Complex omega_hat{};            // live-a root, Re > 0
  Complex omega_hat_frozen{};     // root with a_i frozen at the initial iterate
  double residual = 0.0;          // |resonance_residual| at omega_hat
  std::string multiplicity_note;  // "degenerate pair" for i = 1,2
  ResonanceMethod method = ResonanceMethod::leading_order;
};

std::vector<ResonanceResult> solve_resonances(double R, const ElasticMedium& m,
                                              const ContrastParams& contrast,
                                              const ResonanceSolverConfig& cfg = {});

/// Brute-force cross check: location of the sigma_min dip of the full system
/// on a real-omega grid around omega0.
struct DipResult {
  double omega_dip = 0.0;
  double sigma_min = 0.0;
};
DipResult svd_dip_search(double omega0, double rel_halfwidth, int grid, const ContrastParams& contrast,
                         const DiskBoundary& b, const ElasticMedium& m);

enum class ScatterRegime { quasi_static, resonant, post_resonant };

struct ScatterSolution {
  BoundaryField phi_int, phi_ext;      // interior / exterior densities
  std::array<Complex, 3> xi{};         // interior rigid-motion coefficients
  std::array<Complex, 2> zeta{};       // far-field magnitudes (i = 1,2)
  ScatterRegime regime = ScatterRegime::quasi_static;
  double regime_parameter = 0.0;       // |w^2 ln w| / epsilon
  double condition_estimate = 0.0;
  bool near_resonance_warning = false;
  Complex omega{};
  double solve_residual = 0.0;         // relative residual of the dense solve
};

ScatterSolution solve_scattering(Complex omega, const Vec2& direction, const DiskBoundary& b,
                                 const ElasticMedium& m, const ContrastParams& contrast);

struct FarField {
  std::vector<double> angles;
  std::vector<CVec2> u_p;  // longitudinal pattern, parallel to x_hat
  std::vector<CVec2> u_s;  // transverse pattern, orthogonal to x_hat
  std::vector<double> evaluation_radii;
};

FarField far_field(const ScatterSolution& sol, Complex omega, const std::vector<double>& angles,
                   const std::vector<double>& radii, const DiskBoundary& b, const ElasticMedium& m);

}  // namespace elastodisk
