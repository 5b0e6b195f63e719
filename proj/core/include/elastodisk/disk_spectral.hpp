#pragma once

#include "elastodisk/types.hpp"

#include <Eigen/Dense>

namespace elastodisk {

enum class DiskCase { Case1, Case2 };

/// Case 1: the static single layer operator annihilates the translational
/// basis fields (critical radius); Case 2: it is invertible on their span.
struct CaseTag {
  DiskCase tag = DiskCase::Case2;
  double margin = 0.0;  // tau1 R ln R - tau2 R / 2
};

double classification_tolerance(double R, const ElasticMedium& m);
CaseTag classify_case(double R, const ElasticMedium& m, double tol = -1.0);

/// Eigenvalues of the static single layer operator on the rigid-motion basis.
/// i = 1,2: tau1 R ln R - tau2 R / 2.   i = 3: -R/(2 mu).
/// (The i = 3 value differs from the -tau1 R/2 sometimes quoted for this
/// operator; the quadrature and a brute-force integral both give -R/(2 mu).)
double stilde_eigenvalue(int i, double R, const ElasticMedium& m);

/// Diagonal 3x3 matrices entering the resonance equation.
struct QPMatrices {
  Eigen::Matrix3d Q = Eigen::Matrix3d::Zero();
  Eigen::Matrix3cd P = Eigen::Matrix3cd::Zero();
};

/// Closed forms of the Q/P lemma (rigid-motion pairings of the expansion
/// kernels, with densities extended as rigid motions).  Evaluated with the
/// corrected expansion constants.
QPMatrices matrices_QP(double R, const ElasticMedium& m);

/// The pairings actually realized by the boundary operators K1*/K2* against
/// the rigid-motion basis: identical to matrices_QP for i = 1,2, but
/// Q33 = 0 and P33 = R^2/(8 mu) (the rotational channel has no log term).
/// These drive the resonance equation.
QPMatrices operator_QP(double R, const ElasticMedium& m);

/// Kernel-basis coefficients a_i, b_i and the inverse coefficients eta,
/// eta~ of the auxiliary operator (frequency-dependent through beta).
struct KernelBasisCoeffs {
  std::array<Complex, 3> a{};
  std::array<double, 3> b{};
  Complex eta{};
  Complex eta_tilde{};
};

KernelBasisCoeffs kernel_coeffs(Complex omega, double R, const ElasticMedium& m,
                                const ContrastParams& contrast, const CaseTag& tag);

}  // namespace elastodisk
