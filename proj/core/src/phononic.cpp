#include "elastodisk/phononic.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "elastodisk/detail/parallel.hpp"
#include "elastodisk/detail/quadrature.hpp"
#include "elastodisk/disk_spectral.hpp"

// The quasi-periodic Kupradze tensor on the unit lattice is evaluated through
// the symbol decomposition
//   G^{a,0} = -(1/mu) g_L I - c_b Hess(g_B),   c_b = (lam+mu)/(mu(lam+2mu)),
// where g_L, g_B are the quasi-periodic Laplace and biharmonic lattice sums
// (symbols 1/|xi|^2 and 1/|xi|^4 at xi = alpha + 2 pi q).  Both are split
// Ewald-style into a Gaussian-filtered reciprocal sum and a spatial sum of
// exponential-integral terms, so either part converges like a Gaussian.

namespace elastodisk {

namespace {

constexpr Complex kI{0.0, 1.0};

double exp_int_e1(double x) {
  // E1(x), x > 0: series for x <= 1, modified Lentz continued fraction beyond.
  if (x <= 0.0) throw std::domain_error("exp_int_e1: requires x > 0");
  if (x <= 1.0) {
    double s = -kEulerGamma - std::log(x), t = 1.0;
    for (int k = 1; k <= 30; ++k) {
      t *= -x / k;
      s -= t / k;
      if (std::abs(t / k) < 1e-18) break;
    }
    return s;
  }
  const double tiny = 1e-300;
  double f = tiny, C = f, D = 0.0;
  for (int j = 1; j <= 200; ++j) {
    double aj, bj;
    if (j == 1) {
      aj = std::exp(-x);
      bj = x;
    } else {
      aj = (j % 2 == 0) ? double(j / 2) : double(j / 2);
      bj = (j % 2 == 0) ? 1.0 : x;
    }
    D = bj + aj * D;
    if (D == 0.0) D = tiny;
    C = bj + aj / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return f;
}

// E1(x) + ln(x) (entire part; stable near 0)
double exp_int_e1_plus_log(double x) {
  if (x > 0.5) return exp_int_e1(x) + std::log(x);
  double s = -kEulerGamma, t = 1.0;
  for (int k = 1; k <= 30; ++k) {
    t *= -x / k;
    s -= t / k;
    if (std::abs(t / k) < 1e-20) break;
  }
  return s;
}

struct EwaldSums {
  Complex gl{};       // g_L (reciprocal + spatial), regularized if reg
  CMat2 hess{};       // Hess g_B
  // regularized variants subtract the free-space parts of the m = 0 term
};

double choose_split(const LatticeParams& lp) { return lp.ewald_split > 0.0 ? lp.ewald_split : std::sqrt(M_PI); }

// Reciprocal sums over xi = alpha + 2 pi q, Gaussian filtered.
void reciprocal_parts(const Vec2& x, const Vec2& alpha, double a, double tol, Complex& gl, CMat2& hess) {
  gl = 0.0;
  hess = CMat2::Zero();
  const double T = 1.0 / (4.0 * a * a);
  int Q = 2;
  Complex gl_prev;
  CMat2 h_prev;
  for (;; ++Q) {
    gl = 0.0;
    hess = CMat2::Zero();
    for (int q1 = -Q; q1 <= Q; ++q1)
      for (int q2 = -Q; q2 <= Q; ++q2) {
        Vec2 xi = alpha + 2.0 * M_PI * Vec2(q1, q2);
        double x2 = xi.squaredNorm();
        Complex ph = std::exp(kI * xi.dot(x));
        double damp = std::exp(-T * x2);
        gl += ph * damp / x2;
        hess -= (ph * damp * (1.0 + T * x2) / (x2 * x2)) * (xi * xi.transpose()).cast<Complex>();
      }
    if (Q >= 3) {
      double diff = std::abs(gl - gl_prev) + (hess - h_prev).cwiseAbs().maxCoeff();
      if (diff < tol || Q > 24) break;
    }
    gl_prev = gl;
    h_prev = hess;
  }
}

// Spatial sums over lattice translates m (window centered on x), with the
// m = 0 term optionally replaced by its free-space-subtracted regularization.
void spatial_parts(const Vec2& x, const Vec2& alpha, double a, double tol, bool regularize_m0,
                   Complex& gl, CMat2& hess) {
  gl = 0.0;
  hess = CMat2::Zero();
  const int c1 = int(std::lround(x.x())), c2 = int(std::lround(x.y()));
  int W = 3;
  Complex gl_prev;
  CMat2 h_prev;
  for (;; ++W) {
    gl = 0.0;
    hess = CMat2::Zero();
    for (int m1 = c1 - W; m1 <= c1 + W; ++m1)
      for (int m2 = c2 - W; m2 <= c2 + W; ++m2) {
        const Vec2 mm(m1, m2);
        const Vec2 r = x - mm;
        const double r2 = r.squaredNorm();
        const Complex ph = std::exp(kI * alpha.dot(mm));
        if (regularize_m0 && m1 == 0 && m2 == 0) {
          const double z = a * a * r2;
          if (r2 < 1e-28) {
            gl += -(kEulerGamma + 2.0 * std::log(a)) / (4.0 * M_PI);
            hess += -(1.0 / (8.0 * M_PI)) * (-kEulerGamma + 1.0 - 2.0 * std::log(a)) * CMat2::Identity();
          } else {
            gl += (exp_int_e1_plus_log(z) - 2.0 * std::log(a)) / (4.0 * M_PI);
            hess += (((std::exp(-z) - 1.0) / (4.0 * M_PI * r2)) * (r * r.transpose()).cast<Complex>() -
                     (1.0 / (8.0 * M_PI)) * (exp_int_e1_plus_log(z) + 1.0 - 2.0 * std::log(a)) * CMat2::Identity());
          }
          continue;
        }
        const double z = a * a * r2;
        if (z > 45.0) continue;
        const double e1 = exp_int_e1(z);
        gl += ph * e1 / (4.0 * M_PI);
        hess += ph * ((std::exp(-z) / (4.0 * M_PI * r2)) * (r * r.transpose()).cast<Complex>() -
                      (e1 / (8.0 * M_PI)) * CMat2::Identity());
      }
    if (W >= 4) {
      double diff = std::abs(gl - gl_prev) + (hess - h_prev).cwiseAbs().maxCoeff();
      if (diff < tol || W > 16) break;
    }
    gl_prev = gl;
    h_prev = hess;
  }
}

}  // namespace

CMat2 green_quasiperiodic_static(const Vec2& x, const Vec2& alpha, const ElasticMedium& m,
                                 const LatticeParams& lp) {
  if (alpha.norm() < lp.alpha_floor)
    throw std::domain_error("green_quasiperiodic_static: |alpha| below the Gamma-point floor");
  const double a = choose_split(lp);
  Complex gl_r, gl_s;
  CMat2 h_r, h_s;
  reciprocal_parts(x, alpha, a, lp.tail_tol, gl_r, h_r);
  spatial_parts(x, alpha, a, lp.tail_tol, false, gl_s, h_s);
  const Complex gl = gl_r + gl_s;
  const CMat2 hess = h_r + h_s;
  const double cb = (m.lambda + m.mu) / (m.mu * m.lame_p());
  return -(1.0 / m.mu) * gl * CMat2::Identity() - cb * hess;
}

CMat2 lattice_correction(const Vec2& x, const Vec2& alpha, const ElasticMedium& m,
                         const LatticeParams& lp) {
  if (alpha.norm() < lp.alpha_floor)
    throw std::domain_error("lattice_correction: |alpha| below the Gamma-point floor");
  const double a = choose_split(lp);
  Complex gl_r, gl_s;
  CMat2 h_r, h_s;
  reciprocal_parts(x, alpha, a, lp.tail_tol, gl_r, h_r);
  spatial_parts(x, alpha, a, lp.tail_tol, true, gl_s, h_s);
  const Complex gl = gl_r + gl_s;
  const CMat2 hess = h_r + h_s;
  const double cb = (m.lambda + m.mu) / (m.mu * m.lame_p());
  ExpansionCoefficients c(m);
  // Lambda = G^{a,0} - G^0 = -(1/mu)(g_L - Gamma_L) I - c_b (Hess g_B - Hess Gamma_B) - (tau2/4pi) I
  return -(1.0 / m.mu) * gl * CMat2::Identity() - cb * hess -
         (c.tau2 / (4.0 * M_PI)) * CMat2::Identity();
}

DenseOperator assemble_S_alpha(double scale, const DiskBoundary& base, const Vec2& alpha,
                               const ElasticMedium& m, const LatticeParams& lp) {
  if (!(scale > 0.0) || scale > 0.4)
    throw std::invalid_argument("assemble_S_alpha: scale must lie in (0, 0.4]");
  DiskBoundary omega_b = make_disk(scale * base.radius, base.n_nodes);
  DenseOperator op = assemble_S(omega_b, Complex(0.0, 0.0), m);
  op.kind = OperatorKind::S;
  // smooth lattice correction by plain trapezoid
  const int n = omega_b.n_nodes;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CMat2 L = lattice_correction(omega_b.nodes[i] - omega_b.nodes[j], alpha, m, lp);
      op.matrix.block<2, 2>(2 * i, 2 * j) += omega_b.weights[j] * L;
    }
  return op;
}

CMat2 matrix_Q_alpha(double scale, const DiskBoundary& base, const Vec2& alpha,
                     const ElasticMedium& m, const LatticeParams& lp) {
  DenseOperator S = assemble_S_alpha(scale, base, alpha, m, lp);
  const int n = base.n_nodes;
  const double w = 2.0 * M_PI * scale * base.radius / n;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(S.matrix);
  if (lu.rcond() < 1e-14) throw std::runtime_error("matrix_Q_alpha: singular quasi-periodic operator");
  CMat2 Q;
  for (int i = 0; i < 2; ++i) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(2 * n);
    for (int j = 0; j < n; ++j) e(2 * j + i) = 1.0;
    Eigen::VectorXcd phi = lu.solve(e);
    for (int jj = 0; jj < 2; ++jj) {
      Complex s = 0.0;
      for (int j = 0; j < n; ++j) s += w * phi(2 * j + jj);
      Q(i, jj) = -s;
    }
  }
  return Q;
}

double contraction_norm(double scale, const DiskBoundary& base, const Vec2& alpha,
                        const ElasticMedium& m, const LatticeParams& lp) {
  // || (S_hat^s)^{-1} Pi ||_2 with Pi[phi] = int (c_Pi I - Lambda^alpha(0)) phi
  const int n = base.n_nodes;
  DenseOperator Shat = assemble_S_hat(base, Complex(scale, 0.0), m);
  ExpansionCoefficients c(m);
  const double lp2m = m.lame_p();
  const Complex c_pi = (c.tau1 / (4.0 * M_PI)) * Complex(2.0 * kEulerGamma - std::log(4.0), -M_PI) +
                       c.tau2 / (4.0 * M_PI) - std::log(lp2m) / (8.0 * M_PI * lp2m) -
                       std::log(m.mu) / (8.0 * M_PI * m.mu);
  const CMat2 L0 = lattice_correction(Vec2::Zero(), alpha, m, lp);
  const CMat2 blk = c_pi * CMat2::Identity() - L0;
  Eigen::MatrixXcd Pi(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Pi.block<2, 2>(2 * i, 2 * j) = base.weights[j] * blk;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(Shat.matrix);
  return spectral_norm(lu.solve(Pi));
}

Complex dilute_t(double scale, double R, const ElasticMedium& m) {
  ExpansionCoefficients c(m);
  const double M = c.tau1 * R * std::log(R) - 0.5 * c.tau2 * R;
  return 1.0 / (M + 2.0 * M_PI * R * beta_k(Complex(scale, 0.0), m));
}

BandgapResult bandgap_edge(double scale, const DiskBoundary& base, const ElasticMedium& m,
                           const ContrastParams& contrast, BandgapMode mode,
                           int alpha_grid_per_side, const LatticeParams& lp) {
  BandgapResult out;
  out.method = mode;
  out.regime_parameter = std::abs(contrast.epsilon / (scale * scale * std::log(scale)));
  out.regime_warning = out.regime_parameter > 0.1;
  const double R = base.radius;
  if (mode == BandgapMode::dilute) {
    out.dilute_t = dilute_t(scale, R, m);
    const Complex arg = -2.0 * out.dilute_t * contrast.epsilon / (m.rho * R * scale * scale);
    out.omega_star = std::sqrt(arg).real();
    return out;
  }
  const double area = M_PI * scale * scale * R * R;
  // alpha points are independent: evaluate concurrently, reduce in grid order
  for (int i1 = 0; i1 < alpha_grid_per_side; ++i1)
    for (int i2 = 0; i2 < alpha_grid_per_side; ++i2) {
      Vec2 alpha(-M_PI + (2.0 * M_PI) * (i1 + 0.5) / alpha_grid_per_side,
                 -M_PI + (2.0 * M_PI) * (i2 + 0.5) / alpha_grid_per_side);
      if (alpha.norm() >= lp.alpha_floor) out.alpha_grid.push_back(alpha);
    }
  const int npts = int(out.alpha_grid.size());
  out.lambda_max.assign(npts, 0.0);
  detail::parallel_for(
      npts,
      [&](int i) {
        CMat2 Q = matrix_Q_alpha(scale, base, out.alpha_grid[i], m, lp);
        CMat2 H = 0.5 * (Q + Q.adjoint());
        Eigen::SelfAdjointEigenSolver<CMat2> es(H);
        out.lambda_max[i] = es.eigenvalues().maxCoeff();
      },
      /*serial_below=*/2);
  double best = 0.0;
  for (double l : out.lambda_max) best = std::max(best, l);
  out.omega_star = std::sqrt(std::max(0.0, best) / (m.rho * area)) * std::sqrt(contrast.epsilon);
  return out;
}

}  // namespace elastodisk
