#pragma once

#include "elastodisk/kernels.hpp"

// Kress-style decompositions of the kernels restricted to a circle of radius
// R: every scalar factor is written as  F(t,s) = F_log(t,s) * ln(4 sin^2((t-s)/2))
// + F_smooth(t,s)  with smooth coefficients, so that the product log-quadrature
// applies.  The remaining Cauchy (cot) part of the traction kernel is carried
// separately by the static piece.

namespace elastodisk::detail {

struct Split {
  Complex log_part{};
  Complex smooth{};

  Complex value(double L) const { return log_part * L + smooth; }
  Split operator+(const Split& o) const { return {log_part + o.log_part, smooth + o.smooth}; }
  Split operator-(const Split& o) const { return {log_part - o.log_part, smooth - o.smooth}; }
  Split operator*(Complex c) const { return {log_part * c, smooth * c}; }
};
inline Split operator*(Complex c, const Split& s) { return s * c; }

/// Entire-series building blocks in zeta = (w/2)^2 (plain double; |w| <= 8).
Complex series_j0v(Complex zeta);    // J0(w)
Complex series_j1v(Complex zeta);    // J1(w)/w
Complex series_j2v(Complex zeta);    // J2(w)/w^2
Complex series_r0v(Complex zeta);    // Y0 - (2/pi)(ln(w/2)+g)J0
Complex series_r1v(Complex zeta);    // [Y1 - (2/pi)(ln(w/2)+g)J1 + 2/(pi w)]/w
Complex series_rrred(Complex zeta);  // [r0v - 2 r1v - 1/pi]/(4 zeta)

/// Scalar radial profiles of G^k and its traction on a circle, in split form.
/// sigma = 2 R sin((t-s)/2) (signed); valid while max|k_s sigma| <= 8.
class CircleDynKernel {
 public:
  CircleDynKernel(Complex k, const ElasticMedium& m, double R);

  struct Profiles {
    Split psi;      // coefficient of I in G^k
    Split chi;      // coefficient of rhat rhat^T in G^k
    Split chird;    // (chi - chi(0))/sigma^2
    Split h1p;      // regularized H1(w_p)/w_p  (see kernels.cpp)
    Split h1s;      // regularized H1(w_s)/w_s
  };
  Profiles at(double sigma) const;

  Complex k() const { return k_; }
  const ElasticMedium& medium() const { return m_; }
  double radius() const { return R_; }

 private:
  Complex k_;
  ElasticMedium m_;
  double R_;
  Complex kp_, ks_;
  Complex c0p_, c0s_;  // 1 + (2i/pi)(ln(kappa R/2) + gamma)
};

}  // namespace elastodisk::detail
