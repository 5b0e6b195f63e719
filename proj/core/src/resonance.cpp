#include "elastodisk/resonance.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

namespace elastodisk {

namespace {
constexpr Complex kI{0.0, 1.0};
}

SystemOperator assemble_system(Complex omega, const ContrastParams& contrast,
                               const DiskBoundary& b, const ElasticMedium& m) {
  if (omega == Complex(0.0, 0.0)) throw std::domain_error("assemble_system: omega must be nonzero");
  const int n = b.n_nodes;
  const Complex kt = std::sqrt(m.rho) * contrast.tau * omega;
  const Complex ke = std::sqrt(m.rho) * omega;
  DenseOperator Skt = assemble_S(b, kt, m);
  DenseOperator Ske = assemble_S(b, ke, m);
  DenseOperator Kkt = assemble_Kstar(b, kt, m);
  DenseOperator Kke = assemble_Kstar(b, ke, m);
  SystemOperator sys;
  sys.omega = omega;
  sys.delta = contrast.delta;
  sys.n_nodes = n;
  sys.matrix.resize(4 * n, 4 * n);
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(2 * n, 2 * n);
  sys.matrix.topLeftCorner(2 * n, 2 * n) = Skt.matrix;
  sys.matrix.topRightCorner(2 * n, 2 * n) = -Ske.matrix;
  sys.matrix.bottomLeftCorner(2 * n, 2 * n) = -0.5 * I + Kkt.matrix;
  sys.matrix.bottomRightCorner(2 * n, 2 * n) = -contrast.delta * (0.5 * I + Kke.matrix);
  return sys;
}

CVec2 plane_wave(Complex omega, const Vec2& d, const Vec2& x, const ElasticMedium& m) {
  const Complex kp = omega / m.pressure_speed();
  return std::exp(kI * kp * d.dot(x)) * d.cast<Complex>();
}

CVec2 plane_wave_traction(Complex omega, const Vec2& d, const Vec2& x, const Vec2& nu,
                          const ElasticMedium& m) {
  const Complex kp = omega / m.pressure_speed();
  const Complex ph = kI * kp * std::exp(kI * kp * d.dot(x));
  return ph * (m.lambda * nu.cast<Complex>() + 2.0 * m.mu * d.dot(nu) * d.cast<Complex>());
}

Eigen::VectorXcd plane_wave_rhs(Complex omega, const Vec2& direction, const ContrastParams& contrast,
                                const DiskBoundary& b, const ElasticMedium& m) {
  const int n = b.n_nodes;
  Eigen::VectorXcd F(4 * n);
  for (int j = 0; j < n; ++j) {
    F.segment<2>(2 * j) = plane_wave(omega, direction, b.nodes[j], m);
    F.segment<2>(2 * n + 2 * j) =
        contrast.delta * plane_wave_traction(omega, direction, b.nodes[j], b.normals[j], m);
  }
  return F;
}

// ---------------------------------------------------------------------------
// Resonances
// ---------------------------------------------------------------------------

namespace {

struct Channel {
  double Q;
  Complex P;
  double R;
  ElasticMedium m;
  ContrastParams contrast;
  CaseTag tag;
  int index;

  Complex a(Complex omega) const {
    if (index == 3) return 1.0;
    return kernel_coeffs(omega, R, m, contrast, tag).a[0];
  }
  Complex a_prime(Complex omega) const {
    if (index == 3) return 0.0;
    // d beta(c w)/dw = tau1/(2 pi w) for any fixed multiplier c
    ExpansionCoefficients c(m);
    const double sr = std::sqrt(m.rho);
    const Complex bt = beta_k(sr * contrast.tau * omega, m);
    const Complex be = beta_k(sr * omega, m);
    if (tag.tag == DiskCase::Case1) {
      const Complex gs = c.tau1 / (2.0 * M_PI * omega);
      return gs * (be - bt) / (be * be);
    }
    const Complex g = R * c.tau1 / omega;  // 2 pi R * tau1/(2 pi w)
    const Complex D = tag.margin + 2.0 * M_PI * R * be;
    const Complex N = tag.margin + 2.0 * M_PI * R * bt;
    return g * (D - N) / (D * D);
  }

  Complex f(Complex w, std::optional<Complex> frozen_a = std::nullopt) const {
    const double rho = m.rho;
    const Complex C = std::log(std::sqrt(rho) * contrast.tau);
    const Complex av = frozen_a ? *frozen_a : a(w);
    return rho * w * w * std::log(w) * Q + rho * w * w * (C * Q + P) - contrast.epsilon * av;
  }
  Complex fp(Complex w, std::optional<Complex> frozen_a = std::nullopt) const {
    const double rho = m.rho;
    const Complex C = std::log(std::sqrt(rho) * contrast.tau);
    Complex d = rho * Q * (2.0 * w * std::log(w) + w) + 2.0 * rho * w * (C * Q + P);
    if (!frozen_a) d -= contrast.epsilon * a_prime(w);
    return d;
  }
};

Complex newton_root(const Channel& ch, Complex w0, int max_iter, double tol,
                    std::optional<Complex> frozen_a) {
  Complex w = w0;
  for (int it = 0; it < max_iter; ++it) {
    Complex fv = ch.f(w, frozen_a);
    if (std::abs(fv) < tol) return w;
    Complex dw = fv / ch.fp(w, frozen_a);
    // damp steps that would leave the subwavelength neighborhood
    double cap = 0.5 * std::abs(w);
    if (std::abs(dw) > cap) dw *= cap / std::abs(dw);
    w -= dw;
    if (w.real() <= 0.0) w = Complex(std::abs(w.real()) + 0.1 * std::abs(w), w.imag());
  }
  if (std::abs(ch.f(w, frozen_a)) > tol)
    throw std::runtime_error("solve_resonances: Newton did not converge for channel " +
                             std::to_string(ch.index));
  return w;
}

double initial_guess(const Channel& ch) {
  const double eps = ch.contrast.epsilon;
  const double rho = ch.m.rho;
  if (std::abs(ch.Q) < 1e-14)  // no-log channel: balance against P alone
    return std::sqrt(eps / (rho * std::abs(ch.P)));
  double w = std::sqrt(eps / (rho * std::abs(ch.Q) * std::abs(std::log(eps))));
  for (int r = 0; r < 2; ++r)
    w = std::sqrt(eps / (rho * std::abs(ch.Q) * std::abs(std::log(w))));
  return w;
}

}  // namespace

Complex resonance_residual(Complex omega, int i, double R, const ElasticMedium& m,
                           const ContrastParams& contrast) {
  if (omega == Complex(0.0, 0.0)) throw std::domain_error("resonance_residual: omega must be nonzero");
  if (i < 1 || i > 3) throw std::invalid_argument("resonance_residual: i must be 1, 2 or 3");
  QPMatrices qp = operator_QP(R, m);
  Channel ch{qp.Q(i - 1, i - 1), qp.P(i - 1, i - 1), R, m, contrast, classify_case(R, m), i};
  return ch.f(omega);
}

std::vector<ResonanceResult> solve_resonances(double R, const ElasticMedium& m,
                                              const ContrastParams& contrast,
                                              const ResonanceSolverConfig& cfg) {
  QPMatrices qp = operator_QP(R, m);
  CaseTag tag = classify_case(R, m);
  const double tol = cfg.residual_factor * contrast.epsilon;

  std::vector<ResonanceResult> out;
  auto solve_channel = [&](int i) {
    Channel ch{qp.Q(i - 1, i - 1), qp.P(i - 1, i - 1), R, m, contrast, tag, i};
    const double w0 = initial_guess(ch);
    ResonanceResult r;
    r.index = i;
    r.omega_hat = newton_root(ch, Complex(w0, 0.0), cfg.max_iter, tol, std::nullopt);
    const Complex a0 = ch.a(Complex(w0, 0.0));
    r.omega_hat_frozen = newton_root(ch, Complex(w0, 0.0), cfg.max_iter, tol, a0);
    r.residual = std::abs(ch.f(r.omega_hat));
    r.method = ResonanceMethod::leading_order;
    return r;
  };

  ResonanceResult pair = solve_channel(1);
  pair.multiplicity_note = "degenerate pair (i = 1, 2)";
  out.push_back(pair);
  ResonanceResult pair2 = pair;
  pair2.index = 2;
  out.push_back(pair2);
  out.push_back(solve_channel(3));
  return out;
}

DipResult svd_dip_search(double omega0, double rel_halfwidth, int grid, const ContrastParams& contrast,
                         const DiskBoundary& b, const ElasticMedium& m) {
  if (grid < 5) grid = 5;
  std::vector<double> oms(grid), sv(grid);
  for (int g = 0; g < grid; ++g) {
    double om = omega0 * (1.0 - rel_halfwidth + 2.0 * rel_halfwidth * g / (grid - 1));
    oms[g] = om;
    SystemOperator sys = assemble_system(om, contrast, b, m);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(sys.matrix);
    sv[g] = svd.singularValues().tail(1)(0);
  }
  int imin = 0;
  for (int g = 1; g < grid; ++g)
    if (sv[g] < sv[imin]) imin = g;
  DipResult dip{oms[imin], sv[imin]};
  if (imin > 0 && imin < grid - 1) {
    // parabolic refinement in log(sigma_min)
    double y0 = std::log(sv[imin - 1]), y1 = std::log(sv[imin]), y2 = std::log(sv[imin + 1]);
    double den = y0 - 2.0 * y1 + y2;
    if (den > 0.0) dip.omega_dip = oms[imin] - 0.5 * (oms[imin + 1] - oms[imin]) * (y2 - y0) / den;
  }
  return dip;
}

// ---------------------------------------------------------------------------
// Scattering
// ---------------------------------------------------------------------------

ScatterSolution solve_scattering(Complex omega, const Vec2& direction, const DiskBoundary& b,
                                 const ElasticMedium& m, const ContrastParams& contrast) {
  const int n = b.n_nodes;
  SystemOperator sys = assemble_system(omega, contrast, b, m);
  Eigen::VectorXcd F = plane_wave_rhs(omega, direction, contrast, b, m);

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sys.matrix);
  Eigen::VectorXcd sol = lu.solve(F);

  ScatterSolution out;
  out.omega = omega;
  out.solve_residual = (sys.matrix * sol - F).norm() / F.norm();
  out.condition_estimate = 1.0 / std::max(lu.rcond(), 1e-300);
  out.near_resonance_warning = out.condition_estimate > 1e14;

  out.phi_int.values = sol.head(2 * n);
  out.phi_ext.values = sol.tail(2 * n);

  // interior trace = S^{kt}[phi_int]; project onto the rigid-motion basis
  const Complex kt = std::sqrt(m.rho) * contrast.tau * omega;
  DenseOperator Skt = assemble_S(b, kt, m);
  BoundaryField trace = Skt.apply(out.phi_int);
  RigidMotionBasis f = basis_f(b);
  for (int i = 0; i < 3; ++i) out.xi[i] = inner_product(trace, f[i], b);
  for (int i = 0; i < 2; ++i)
    out.zeta[i] = 2.0 * M_PI * b.radius * inner_product(out.phi_ext, f[i], b);

  const double v = std::abs(omega * omega * std::log(omega)) / contrast.epsilon;
  out.regime_parameter = v;
  out.regime = v < 0.1 ? ScatterRegime::quasi_static
                       : (v <= 10.0 ? ScatterRegime::resonant : ScatterRegime::post_resonant);
  return out;
}

FarField far_field(const ScatterSolution& sol, Complex omega, const std::vector<double>& angles,
                   const std::vector<double>& radii, const DiskBoundary& b, const ElasticMedium& m) {
  for (double r : radii)
    if (r <= 5.0 * b.radius)
      throw std::invalid_argument("far_field: evaluation radii must exceed 5 R");
  FarField ff;
  ff.angles = angles;
  ff.evaluation_radii = radii;
  ff.u_p.reserve(angles.size());
  ff.u_s.reserve(angles.size());
  for (double th : angles) {
    const Vec2 xhat(std::cos(th), std::sin(th));
    CVec2 up = CVec2::Zero(), us = CVec2::Zero();
    for (int j = 0; j < b.n_nodes; ++j) {
      FarKernel fk = far_kernel(xhat, b.nodes[j], omega, m);
      up += b.weights[j] * (fk.p_part * sol.phi_ext.at(j));
      us += b.weights[j] * (fk.s_part * sol.phi_ext.at(j));
    }
    ff.u_p.push_back(up);
    ff.u_s.push_back(us);
  }
  return ff;
}

}  // namespace elastodisk
