#include "elastodisk/disk_spectral.hpp"

#include "elastodisk/kernels.hpp"

namespace elastodisk {

double classification_tolerance(double R, const ElasticMedium& m) {
  ExpansionCoefficients c(m);
  return 1e-12 * std::max(1.0, c.tau1 * R * std::abs(std::log(R)));
}

CaseTag classify_case(double R, const ElasticMedium& m, double tol) {
  if (!(R > 0.0)) throw std::invalid_argument("classify_case: R must be positive");
  ExpansionCoefficients c(m);
  double margin = c.tau1 * R * std::log(R) - 0.5 * c.tau2 * R;
  if (tol < 0.0) tol = classification_tolerance(R, m);
  return {std::abs(margin) <= tol ? DiskCase::Case1 : DiskCase::Case2, margin};
}

double stilde_eigenvalue(int i, double R, const ElasticMedium& m) {
  if (!(R > 0.0)) throw std::invalid_argument("stilde_eigenvalue: R must be positive");
  ExpansionCoefficients c(m);
  if (i == 1 || i == 2) return c.tau1 * R * std::log(R) - 0.5 * c.tau2 * R;
  if (i == 3) return -R / (2.0 * m.mu);
  throw std::invalid_argument("stilde_eigenvalue: i must be 1, 2 or 3");
}

QPMatrices matrices_QP(double R, const ElasticMedium& m) {
  const double lam = m.lambda, mu = m.mu, lp = m.lame_p();
  ExpansionCoefficients c(m);
  const double t12 = c.tau1 * c.tau2;
  const double lnR = std::log(R);
  QPMatrices qp;
  const double q12 = -R * R * (lam * lam + 6.0 * mu * mu + 5.0 * lam * mu) / (4.0 * mu * lp * lp);
  const double q33 = R * R * (2.0 * lam * lam + 7.0 * mu * mu + 7.0 * lam * mu) / (4.0 * mu * lp * lp);
  qp.Q(0, 0) = qp.Q(1, 1) = q12;
  qp.Q(2, 2) = q33;
  const Complex p11 =
      (lam + mu) * M_PI * R * R *
          (2.0 * c.sigma1 + 3.0 * c.sigma2 +
           ((8.0 * t12 - 2.0 / (mu * mu)) * (lnR + 1.0) - t12) / (8.0 * M_PI)) +
      mu * M_PI * R * R *
          (4.0 * c.sigma1 + 2.0 * c.sigma2 +
           (t12 / M_PI - 1.0 / (2.0 * M_PI * mu * mu)) * (lnR + 1.0));
  const Complex p33 =
      (lam + mu) * M_PI * R * R *
          (2.0 * c.sigma1 + 3.0 * c.sigma2 + t12 * (4.0 * lnR + 1.0) / (4.0 * M_PI) -
           (2.0 * lnR + 1.0) / (8.0 * M_PI * mu * mu)) +
      mu * M_PI * R * R *
          (-4.0 * c.sigma1 + 2.0 * c.sigma2 + t12 / (2.0 * M_PI) * (1.0 - lnR) +
           (lnR + 1.0) / (4.0 * M_PI * mu * mu));
  qp.P(0, 0) = qp.P(1, 1) = p11;
  qp.P(2, 2) = p33;
  return qp;
}

QPMatrices operator_QP(double R, const ElasticMedium& m) {
  QPMatrices qp = matrices_QP(R, m);
  qp.Q(2, 2) = 0.0;
  qp.P(2, 2) = R * R / (8.0 * m.mu);
  return qp;
}

KernelBasisCoeffs kernel_coeffs(Complex omega, double R, const ElasticMedium& m,
                                const ContrastParams& contrast, const CaseTag& tag) {
  if (omega == Complex(0.0, 0.0)) throw std::domain_error("kernel_coeffs: omega must be nonzero");
  const double sr = std::sqrt(m.rho);
  const Complex bt = beta_k(sr * contrast.tau * omega, m);  // interior wavenumber
  const Complex be = beta_k(sr * omega, m);                 // exterior wavenumber
  const double s2piR = std::sqrt(2.0 * M_PI * R);

  // The leading operator acts on the translational basis fields as
  //   S_hat^k f = (M + 2 pi R beta_k) f,   M = tau1 R ln R - tau2 R / 2,
  // (integral of f^(i) is sqrt(2 pi R) e_i and the constant e_i is
  // sqrt(2 pi R) f^(i) again); the coefficients below follow from that.
  const double twoPiR = 2.0 * M_PI * R;
  KernelBasisCoeffs kc;
  kc.a[2] = 1.0;
  if (tag.tag == DiskCase::Case1) {
    if (std::abs(be) == 0.0) throw std::runtime_error("kernel_coeffs: beta at exterior wavenumber vanishes");
    kc.a[0] = kc.a[1] = bt / be;
    const Complex den = s2piR * (bt * bt + be * be);
    if (std::abs(den) == 0.0) throw std::runtime_error("kernel_coeffs: singular configuration (beta^2 sum vanishes)");
    kc.eta = bt / den;
    kc.eta_tilde = -be / den;
  } else {
    const double M = tag.margin;
    const Complex den_a = M + twoPiR * be;
    if (std::abs(den_a) == 0.0) throw std::runtime_error("kernel_coeffs: singular Case-2 denominator");
    kc.a[0] = kc.a[1] = (M + twoPiR * bt) / den_a;
    const Complex den = (kc.a[0] + 1.0) * M + twoPiR * (bt * kc.a[0] + be);
    if (std::abs(den) == 0.0) throw std::runtime_error("kernel_coeffs: singular Case-2 inverse denominator");
    kc.eta = s2piR * kc.a[0] / den;
    kc.eta_tilde = -s2piR / den;
  }
  for (int i = 0; i < 3; ++i) kc.b[i] = 1.0 / std::sqrt(1.0 + std::norm(kc.a[i]));
  return kc;
}

}  // namespace elastodisk
