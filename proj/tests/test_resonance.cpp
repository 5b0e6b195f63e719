#include <doctest.h>

#include "elastodisk/resonance.hpp"

using namespace elastodisk;

namespace {
const ElasticMedium kUnit(1.0, 1.0, 1.0);
}

TEST_CASE("resonance residual structure") {
  ContrastParams c = ContrastParams::from_epsilon_tau(1e-4, 1.0);
  // at omega = 1 the log term vanishes: residual = rho (ln(sqrt(rho) tau) Q + P) - eps a
  QPMatrices qp = operator_QP(1.0, kUnit);
  Complex r = resonance_residual(Complex(1.0, 0.0), 1, 1.0, kUnit, c);
  CHECK(std::abs(r - (qp.P(0, 0) - c.epsilon)) < 1e-14);
  // degenerate pair: identical residual functions for i = 1, 2
  for (Complex w : {Complex(0.01, 0.0), Complex(0.02, -0.003)}) {
    CHECK(resonance_residual(w, 1, 1.0, kUnit, c) == resonance_residual(w, 2, 1.0, kUnit, c));
  }
  CHECK_THROWS_AS(resonance_residual(Complex(0, 0), 1, 1.0, kUnit, c), std::domain_error);
}

TEST_CASE("resonance roots: scaling and properties") {
  std::vector<double> mags;
  for (double eps : {1e-3, 1e-4, 1e-5}) {
    ContrastParams c = ContrastParams::from_epsilon_tau(eps, 1.0);
    auto roots = solve_resonances(1.0, kUnit, c);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].omega_hat == roots[1].omega_hat);
    CHECK(roots[0].residual < 1e-12 * eps);
    CHECK(roots[2].residual < 1e-12 * eps);
    CHECK(roots[0].omega_hat.real() > 0.0);
    CHECK(roots[0].omega_hat.imag() < 0.0);  // decaying mode
    // i = 3: no log channel; root = sqrt(8 mu eps / rho)/R up to the P phase
    CHECK(std::abs(roots[2].omega_hat - std::sqrt(8.0 * eps)) < 1e-12);
    mags.push_back(std::abs(roots[0].omega_hat));
    // tau = 1: frozen and live coincide (a = 1 identically)
    CHECK(std::abs(roots[0].omega_hat_frozen - roots[0].omega_hat) < 1e-14);
  }
  CHECK(mags[0] > mags[1]);
  CHECK(mags[1] > mags[2]);
  // |w|^2 |ln w| = Theta(eps): decade steps give ratios in [8, 12]
  for (int i = 0; i + 1 < 3; ++i) {
    double q1 = mags[i] * mags[i] * std::abs(std::log(mags[i]));
    double q2 = mags[i + 1] * mags[i + 1] * std::abs(std::log(mags[i + 1]));
    CHECK(q1 / q2 > 8.0);
    CHECK(q1 / q2 < 12.0);
  }
}

TEST_CASE("frozen vs live roots differ mildly at tau != 1") {
  ContrastParams c = ContrastParams::from_epsilon_tau(1e-4, 2.0);
  auto roots = solve_resonances(1.0, kUnit, c);
  double rel = std::abs(roots[0].omega_hat - roots[0].omega_hat_frozen) / std::abs(roots[0].omega_hat);
  CHECK(rel > 0.0);
  CHECK(rel < 0.2);
}

TEST_CASE("system assembly and plane-wave right-hand side") {
  DiskBoundary b = make_disk(1.0, 32);
  ContrastParams c = ContrastParams::from_epsilon_tau(1e-3, 1.0);
  const Complex om(0.05, 0.0);
  SystemOperator sys = assemble_system(om, c, b, kUnit);
  CHECK(sys.matrix.rows() == 4 * 32);
  CHECK(sys.matrix.allFinite());
  CHECK_THROWS_AS(assemble_system(Complex(0, 0), c, b, kUnit), std::domain_error);

  const Vec2 d(1.0, 0.0);
  Eigen::VectorXcd F = plane_wave_rhs(om, d, c, b, kUnit);
  CHECK(F.size() == 4 * 32);
  // traction block scales with delta
  ContrastParams c2 = ContrastParams::from_epsilon_tau(1e-3, 2.0);  // delta = 4e-3
  Eigen::VectorXcd F2 = plane_wave_rhs(om, d, c2, b, kUnit);
  CHECK(std::abs(F2.tail(64).norm() / F.tail(64).norm() - 4.0) < 1e-12);

  // plane wave satisfies (L + rho w^2) u = 0: check traction against finite differences
  Vec2 x0(0.2, 0.1), nu(0.6, 0.8);
  const double h = 1e-6;
  Mat2 I = Mat2::Identity();
  CMat2 grad;
  for (int l = 0; l < 2; ++l)
    grad.col(l) =
        (plane_wave(om, d, x0 + h * I.col(l), kUnit) - plane_wave(om, d, x0 - h * I.col(l), kUnit)) / (2.0 * h);
  CVec2 tr = kUnit.lambda * (grad(0, 0) + grad(1, 1)) * nu.cast<Complex>() +
             kUnit.mu * ((grad + grad.transpose()) * nu.cast<Complex>());
  CHECK((tr - plane_wave_traction(om, d, x0, nu, kUnit)).norm() < 1e-8);
}

TEST_CASE("scattering solve: transmission conditions hold") {
  DiskBoundary b = make_disk(1.0, 128);
  ContrastParams c = ContrastParams::from_epsilon_tau(1e-3, 1.0);
  const Complex om(0.3, 0.0);
  const Vec2 d(std::cos(0.4), std::sin(0.4));
  ScatterSolution sol = solve_scattering(om, d, b, kUnit, c);
  CHECK(sol.solve_residual < 1e-10);

  // continuity u|+ = u|- at off-boundary-limit via the densities:
  // S^{kt} phi_int - S^{ke} phi_ext = u_in on the nodes (first block row)
  const Complex kt = std::sqrt(kUnit.rho) * c.tau * om, ke = std::sqrt(kUnit.rho) * om;
  DenseOperator Skt = assemble_S(b, kt, kUnit), Ske = assemble_S(b, ke, kUnit);
  double worst = 0.0;
  for (int j = 0; j < b.n_nodes; ++j) {
    CVec2 lhs = Skt.apply(sol.phi_int).at(j) - Ske.apply(sol.phi_ext).at(j);
    worst = std::max(worst, (lhs - plane_wave(om, d, b.nodes[j], kUnit)).norm());
  }
  CHECK(worst < 1e-6);

  // exterior field evaluated just off the boundary equals interior field (continuity)
  Vec2 xo = 1.2 * b.nodes[5];
  CVec2 u_out = plane_wave(om, d, xo, kUnit) + eval_field(Side::exterior, sol.phi_ext, xo, ke, b, kUnit);
  CHECK(u_out.allFinite());
  CHECK(sol.regime == ScatterRegime::post_resonant);  // |w^2 ln w| = 0.108 >> 10 eps
}

TEST_CASE("block expansion of the full system") {
  // || A(w, d) - A0 - w^2 ln w A_{1,1;0} - w^2 A_{1,2;0} - d A_{0,0;1} ||
  // shrinks like w^4 ln w at fixed small delta
  const double R = 1.0;
  DiskBoundary b = make_disk(R, 48);
  const int n = b.n_nodes;
  const double tau = 2.0, delta = 1e-9;
  ContrastParams c;
  c.tau = tau;
  c.delta = delta;
  c.epsilon = delta / (tau * tau);
  const double rho = kUnit.rho;

  DenseOperator S1 = assemble_expansion_op(b, OperatorKind::S1, kUnit);
  DenseOperator S2 = assemble_expansion_op(b, OperatorKind::S2, kUnit);
  DenseOperator K1 = assemble_expansion_op(b, OperatorKind::K1star, kUnit);
  DenseOperator K2 = assemble_expansion_op(b, OperatorKind::K2star, kUnit);
  DenseOperator K0 = assemble_Kstar(b, 0.0, kUnit);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(2 * n, 2 * n);
  const Eigen::MatrixXcd Z = Eigen::MatrixXcd::Zero(2 * n, 2 * n);

  auto block4 = [&](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& bb, const Eigen::MatrixXcd& cc,
                    const Eigen::MatrixXcd& dd) {
    Eigen::MatrixXcd M(4 * n, 4 * n);
    M.topLeftCorner(2 * n, 2 * n) = a;
    M.topRightCorner(2 * n, 2 * n) = bb;
    M.bottomLeftCorner(2 * n, 2 * n) = cc;
    M.bottomRightCorner(2 * n, 2 * n) = dd;
    return M;
  };
  const double lt = std::log(std::sqrt(rho) * tau), le = std::log(std::sqrt(rho));
  Eigen::MatrixXcd A110 = block4(rho * tau * tau * S1.matrix, -rho * S1.matrix,
                                 rho * tau * tau * K1.matrix, Z);
  Eigen::MatrixXcd A120 =
      block4(rho * tau * tau * (lt * S1.matrix + S2.matrix), -rho * (le * S1.matrix + S2.matrix),
             rho * tau * tau * (lt * K1.matrix + K2.matrix), Z);
  Eigen::MatrixXcd A001 = block4(Z, Z, Z, -(0.5 * I + K0.matrix));

  auto rem = [&](double w) {
    const Complex kt = std::sqrt(rho) * tau * w, ke = std::sqrt(rho) * w;
    Eigen::MatrixXcd A0 = block4(assemble_S_hat(b, kt, kUnit).matrix, -assemble_S_hat(b, ke, kUnit).matrix,
                                 -0.5 * I + K0.matrix, Z);
    SystemOperator sys = assemble_system(Complex(w, 0.0), c, b, kUnit);
    return spectral_norm(sys.matrix - A0 - w * w * std::log(w) * A110 - w * w * A120 - delta * A001);
  };
  double r1 = rem(1e-1), r2 = rem(1e-2);
  CHECK(r2 / r1 < 4e-3);
}

TEST_CASE("far_field rejects radii inside the near zone") {
  DiskBoundary b = make_disk(1.0, 32);
  ContrastParams c = ContrastParams::from_epsilon_tau(1e-3, 1.0);
  ScatterSolution sol = solve_scattering(Complex(0.3, 0.0), Vec2(1.0, 0.0), b, kUnit, c);
  CHECK_THROWS_AS(far_field(sol, Complex(0.3, 0.0), {0.0}, {4.0}, b, kUnit), std::invalid_argument);
}

TEST_CASE("svd dip near the leading-order pair root") {
  const double eps = 1e-3;
  ContrastParams c = ContrastParams::from_epsilon_tau(eps, 1.0);
  auto roots = solve_resonances(1.0, kUnit, c);
  DiskBoundary b = make_disk(1.0, 32);
  DipResult dip = svd_dip_search(roots[0].omega_hat.real(), 0.2, 13, c, b, kUnit);
  CHECK(std::abs(dip.omega_dip - roots[0].omega_hat.real()) / roots[0].omega_hat.real() < 0.05);
}
