#pragma once

#include <Eigen/Dense>

#include "elastodisk/types.hpp"

namespace elastodisk {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using CMat2 = Eigen::Matrix2cd;
using CVec2 = Eigen::Vector2cd;

/// Constants of the low-wavenumber expansion of the fundamental solution:
///   G^k = G^0 + beta_k I + k^2 ln k A(x) + k^2 B(x) + O(k^4 ln k).
///
/// rho1/rho2 are the z^2 and z^4 constants of -(i/4)H0(z); sigma1/sigma2 the
/// constants of the B matrix.  These are re-derived from the Hankel series
/// (the source display carries sign slips; the expansion-order checks in the
/// test suite only pass with the values produced here).
struct ExpansionCoefficients {
  double tau1, tau2;
  Complex rho1, rho2;
  Complex sigma1, sigma2;
  double euler_gamma = kEulerGamma;

  explicit ExpansionCoefficients(const ElasticMedium& m);
};

/// beta_k of the expansion above (principal log branch).
Complex beta_k(Complex k, const ElasticMedium& m);

/// Static Kupradze tensor G^0(x); real symmetric.  Throws at x = 0.
Mat2 green_static(const Vec2& x, const ElasticMedium& m);

/// Dynamic Kupradze tensor G^k(x), k != 0.  Series path for small |k||x|,
/// Hankel evaluation otherwise; symmetric in its matrix indices.
CMat2 green_dynamic(const Vec2& x, Complex k, const ElasticMedium& m);

/// Expansion matrices A and B (B needs x != 0 for its log terms).
Mat2 eval_A(const Vec2& x, const ElasticMedium& m);
CMat2 eval_B(const Vec2& x, const ElasticMedium& m);

/// Conormal derivative (traction) of the kernel columns with respect to x,
/// with unit normal nu at x.  Closed forms; no numerical differentiation.
Mat2 traction_green_static(const Vec2& x, const Vec2& nu, const ElasticMedium& m);
CMat2 traction_green_dynamic(const Vec2& x, const Vec2& nu, Complex k, const ElasticMedium& m);
Mat2 traction_A(const Vec2& x, const Vec2& nu, const ElasticMedium& m);
CMat2 traction_B(const Vec2& x, const Vec2& nu, const ElasticMedium& m);

/// Far-field kernel factors of the outgoing p and s waves: the matrices
/// multiplying e^{i k_p |x|}/sqrt(|x|) and e^{i k_s |x|}/sqrt(|x|).
struct FarKernel {
  CMat2 p_part;
  CMat2 s_part;
};
FarKernel far_kernel(const Vec2& xhat, const Vec2& y, Complex omega, const ElasticMedium& m);

}  // namespace elastodisk
