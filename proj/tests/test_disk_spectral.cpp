#include <doctest.h>

#include "elastodisk/disk_spectral.hpp"
#include "elastodisk/kernels.hpp"

using namespace elastodisk;

namespace {
const ElasticMedium kUnit(1.0, 1.0, 1.0);
}

TEST_CASE("stilde eigenvalues") {
  CHECK(stilde_eigenvalue(1, 2.0, kUnit) == doctest::Approx(0.590863).epsilon(1e-5));
  CHECK(stilde_eigenvalue(2, 1.0, kUnit) == doctest::Approx(-1.0 / 6.0));
  CHECK(stilde_eigenvalue(3, 1.0, kUnit) == doctest::Approx(-0.5));  // -R/(2 mu)
  CHECK_THROWS_AS(stilde_eigenvalue(4, 1.0, kUnit), std::invalid_argument);
  CHECK_THROWS_AS(stilde_eigenvalue(1, -1.0, kUnit), std::invalid_argument);
}

TEST_CASE("case classification") {
  CHECK(classify_case(1.0, kUnit).tag == DiskCase::Case2);
  CHECK(classify_case(1.0, kUnit).margin == doctest::Approx(-1.0 / 6.0));
  CHECK(classify_case(std::exp(0.25), kUnit).tag == DiskCase::Case1);
  CHECK(classify_case(1e-3, kUnit).tag == DiskCase::Case2);
}

TEST_CASE("QP closed forms") {
  QPMatrices qp = matrices_QP(1.0, kUnit);
  CHECK(qp.Q(0, 0) == doctest::Approx(-1.0 / 3.0));
  CHECK(qp.Q(1, 1) == doctest::Approx(-1.0 / 3.0));
  CHECK(qp.Q(2, 2) == doctest::Approx(4.0 / 9.0));
  CHECK(qp.P(0, 0) == qp.P(1, 1));
  CHECK(qp.P(0, 0).real() == doctest::Approx(0.084419350580642483).epsilon(1e-12));
  CHECK(qp.P(0, 0).imag() == doctest::Approx(M_PI / 6.0).epsilon(1e-12));
  // scaling: Q(cR) = c^2 Q(R)
  QPMatrices qp2 = matrices_QP(2.0, kUnit);
  CHECK(qp2.Q(0, 0) == doctest::Approx(4.0 * qp.Q(0, 0)));
  CHECK(qp2.Q(2, 2) == doctest::Approx(4.0 * qp.Q(2, 2)));

  QPMatrices op = operator_QP(1.0, kUnit);
  CHECK(op.Q(0, 0) == qp.Q(0, 0));
  CHECK(op.Q(2, 2) == 0.0);
  CHECK(op.P(2, 2) == Complex(0.125, 0.0));
  CHECK(op.P(0, 0) == qp.P(0, 0));
}

TEST_CASE("kernel coefficients") {
  const double R = 1.0;
  CaseTag tag = classify_case(R, kUnit);

  // tau = 1 collapses a1 to 1 in either case
  ContrastParams c1 = ContrastParams::from_epsilon_tau(1e-4, 1.0);
  KernelBasisCoeffs kc = kernel_coeffs(Complex(1e-3, 0.0), R, kUnit, c1, tag);
  CHECK(std::abs(kc.a[0] - 1.0) < 1e-14);
  CHECK(kc.a[2] == Complex(1.0, 0.0));
  CHECK(kc.b[2] == doctest::Approx(1.0 / std::sqrt(2.0)));

  // Case 2: the pair solves  eta (M + 2 pi R beta_t) - eta~ (M + 2 pi R beta_e)
  // = sqrt(2 pi R)  together with  eta + eta~ a1 = 0  (the leading operator
  // multiplies the translational fields by M + 2 pi R beta).
  ContrastParams c2 = ContrastParams::from_epsilon_tau(1e-4, 2.0);
  const Complex om(1e-3, 0.0);
  KernelBasisCoeffs k2 = kernel_coeffs(om, R, kUnit, c2, tag);
  const double sr = std::sqrt(kUnit.rho), s2piR = std::sqrt(2.0 * M_PI * R);
  const double twoPiR = 2.0 * M_PI * R;
  const Complex bt = beta_k(sr * c2.tau * om, kUnit), be = beta_k(sr * om, kUnit);
  Complex lhs = k2.eta * (tag.margin + twoPiR * bt) - k2.eta_tilde * (tag.margin + twoPiR * be);
  CHECK(std::abs(lhs - s2piR) < 1e-12);
  CHECK(std::abs(k2.eta + k2.eta_tilde * k2.a[0]) < 1e-14);
  CHECK(std::abs(k2.a[0] - (tag.margin + twoPiR * bt) / (tag.margin + twoPiR * be)) < 1e-14);

  // Case 1 (M = 0): same system collapses to eta beta_t - eta~ beta_e = (2 pi R)^{-1/2}
  const double Rc = std::exp(0.25);
  CaseTag t1 = classify_case(Rc, kUnit);
  REQUIRE(t1.tag == DiskCase::Case1);
  KernelBasisCoeffs k1 = kernel_coeffs(om, Rc, kUnit, c2, t1);
  const Complex bt1 = beta_k(sr * c2.tau * om, kUnit), be1 = beta_k(sr * om, kUnit);
  CHECK(std::abs(k1.eta * bt1 - k1.eta_tilde * be1 - 1.0 / std::sqrt(2.0 * M_PI * Rc)) < 1e-12);
  CHECK(std::abs(k1.eta + k1.eta_tilde * k1.a[0]) < 1e-14);
  CHECK(std::abs(k1.a[0] - bt1 / be1) < 1e-14);

  // b normalization
  for (int i = 0; i < 3; ++i)
    CHECK(k2.b[i] == doctest::Approx(1.0 / std::sqrt(1.0 + std::norm(k2.a[i]))));

  // a1 -> 1 continuously as tau -> 1
  double prev = 1e9;
  for (double tau : {1.5, 1.1, 1.01}) {
    ContrastParams cc = ContrastParams::from_epsilon_tau(1e-4, tau);
    double dist = std::abs(kernel_coeffs(om, R, kUnit, cc, tag).a[0] - 1.0);
    CHECK(dist < prev);
    prev = dist;
  }

  CHECK_THROWS_AS(kernel_coeffs(Complex(0, 0), R, kUnit, c2, tag), std::domain_error);
}
