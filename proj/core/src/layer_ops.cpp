#include "elastodisk/layer_ops.hpp"

#include <Eigen/SVD>

#include "elastodisk/detail/circle_kernels.hpp"
#include "elastodisk/detail/parallel.hpp"
#include "elastodisk/detail/quadrature.hpp"

namespace elastodisk {

namespace {

constexpr Complex kI{0.0, 1.0};

void parallel_rows(int n, const std::function<void(int)>& body) { detail::parallel_for(n, body); }

struct CircleGeom {
  Vec2 mv;       // midpoint direction (-sin a, cos a), a = (t_i + t_j)/2
  double sigma;  // 2 R sin((t_i - t_j)/2), signed; x_i - x_j = sigma * mv
};

CircleGeom geom(const DiskBoundary& b, int i, int j) {
  double ti = b.theta[i], tj = b.theta[j];
  double a = 0.5 * (ti + tj);
  return {Vec2(-std::sin(a), std::cos(a)), 2.0 * b.radius * std::sin(0.5 * (ti - tj))};
}

}  // namespace

DenseOperator assemble_S(const DiskBoundary& b, Complex k, const ElasticMedium& m) {
  const int n = b.n_nodes;
  const double R = b.radius, h = 2.0 * M_PI / n;
  const auto logrow = detail::kress_log_row(n);
  DenseOperator op;
  op.kind = OperatorKind::S;
  op.k = k;
  op.matrix.resize(2 * n, 2 * n);
  ExpansionCoefficients c(m);

  if (k == Complex(0.0, 0.0)) {
    const double cl = c.tau1 / (2.0 * M_PI), ct = c.tau2 / (2.0 * M_PI);
    parallel_rows(n, [&](int i) {
      for (int j = 0; j < n; ++j) {
        CircleGeom g = geom(b, i, j);
        Mat2 mm = g.mv * g.mv.transpose();
        Mat2 Klog = 0.5 * cl * Mat2::Identity();
        Mat2 Ksm = cl * std::log(R) * Mat2::Identity() - ct * mm;
        op.matrix.block<2, 2>(2 * i, 2 * j) =
            ((detail::circ_log(logrow, i, j) * Klog + h * Ksm) * R).cast<Complex>();
      }
    });
    return op;
  }

  detail::CircleDynKernel ker(k, m, R);
  // the radial profiles depend on i - j only; evaluate once per offset
  std::vector<detail::CircleDynKernel::Profiles> prof(n);
  for (int d = 0; d < n; ++d) prof[d] = ker.at(2.0 * R * std::sin(M_PI * d / n));
  parallel_rows(n, [&](int i) {
    for (int j = 0; j < n; ++j) {
      CircleGeom g = geom(b, i, j);
      const auto& pr = prof[(i - j + n) % n];
      CMat2 I = CMat2::Identity();
      CMat2 mm = (g.mv * g.mv.transpose()).cast<Complex>();
      CMat2 Klog = pr.psi.log_part * I + pr.chi.log_part * mm;
      CMat2 Ksm = pr.psi.smooth * I + pr.chi.smooth * mm;
      op.matrix.block<2, 2>(2 * i, 2 * j) = (detail::circ_log(logrow, i, j) * Klog + h * Ksm) * R;
    }
  });
  return op;
}

DenseOperator assemble_Kstar(const DiskBoundary& b, Complex k, const ElasticMedium& m) {
  const int n = b.n_nodes;
  const double R = b.radius, h = 2.0 * M_PI / n;
  const auto cotrow = detail::cot_pv_row(n);
  DenseOperator op;
  op.kind = OperatorKind::Kstar;
  op.k = k;
  op.matrix.resize(2 * n, 2 * n);

  ExpansionCoefficients c(m);
  const double A2 = m.mu / (2.0 * M_PI * m.lame_p());
  const double ct = c.tau2 / (2.0 * M_PI);
  Mat2 E2;
  E2 << 0.0, 1.0, -1.0, 0.0;

  // static part: antisymmetric Cauchy (cot) kernel + smooth remainder
  parallel_rows(n, [&](int i) {
    for (int j = 0; j < n; ++j) {
      CircleGeom g = geom(b, i, j);
      Mat2 mm = g.mv * g.mv.transpose();
      Mat2 Ksm = (A2 / (2.0 * R)) * Mat2::Identity() + (2.0 * m.mu * ct / R) * mm;
      Mat2 Kcot = -(A2 / (2.0 * R)) * E2;
      op.matrix.block<2, 2>(2 * i, 2 * j) =
          ((detail::circ_cot(cotrow, i, j) * Kcot + h * Ksm) * R).cast<Complex>();
    }
  });
  if (k == Complex(0.0, 0.0)) return op;

  // dynamic-minus-static correction, continuous kernel with log structure
  const auto logrow = detail::kress_log_row(n);
  detail::CircleDynKernel ker(k, m, R);
  std::vector<detail::CircleDynKernel::Profiles> prof(n);
  for (int d = 0; d < n; ++d) prof[d] = ker.at(2.0 * R * std::sin(M_PI * d / n));
  const double mu = m.mu, lp = m.lame_p();
  const Complex k2 = k * k;
  parallel_rows(n, [&](int i) {
    const Vec2 nu = b.normals[i];
    for (int j = 0; j < n; ++j) {
      CircleGeom g = geom(b, i, j);
      const auto& pr = prof[(i - j + n) % n];
      const Vec2 xy = g.sigma * g.mv;
      const CMat2 nxy = (nu * xy.transpose()).cast<Complex>();
      const CMat2 xyn = (xy * nu.transpose()).cast<Complex>();
      const CMat2 mm = (g.mv * g.mv.transpose()).cast<Complex>();
      const CMat2 I = CMat2::Identity();
      const double s2 = g.sigma * g.sigma;

      detail::Split c_nr = (kI * k2 / 4.0) * (m.lambda / (lp * lp)) * pr.h1p;
      detail::Split c_rn = (kI * k2 / 4.0) * (1.0 / mu) * pr.h1s;
      detail::Split c_mm = (kI * k2 / 2.0) * mu * (pr.h1p * (1.0 / (lp * lp)) - pr.h1s * (1.0 / (mu * mu)));
      detail::Split c_ch2 = pr.chird * (2.0 * mu);
      detail::Split c_ch8 = pr.chird * (-8.0 * mu);

      CMat2 Klog = c_nr.log_part * nxy + c_rn.log_part * (xyn + s2 / (2.0 * R) * I) +
                   c_ch2.log_part * (nxy + xyn + s2 / (2.0 * R) * I) +
                   (c_mm.log_part + c_ch8.log_part) * (s2 / (2.0 * R)) * mm;
      CMat2 Ksm = c_nr.smooth * nxy + c_rn.smooth * (xyn + s2 / (2.0 * R) * I) +
                  c_ch2.smooth * (nxy + xyn + s2 / (2.0 * R) * I) +
                  (c_mm.smooth + c_ch8.smooth) * (s2 / (2.0 * R)) * mm;
      op.matrix.block<2, 2>(2 * i, 2 * j) += (detail::circ_log(logrow, i, j) * Klog + h * Ksm) * R;
    }
  });
  return op;
}

DenseOperator assemble_S_hat(const DiskBoundary& b, Complex k, const ElasticMedium& m) {
  if (k == Complex(0.0, 0.0)) throw std::domain_error("assemble_S_hat: k must be nonzero");
  DenseOperator op = assemble_S(b, Complex(0.0, 0.0), m);
  op.kind = OperatorKind::Shat;
  op.k = k;
  const Complex bk = beta_k(k, m);
  for (int i = 0; i < b.n_nodes; ++i)
    for (int j = 0; j < b.n_nodes; ++j) {
      op.matrix(2 * i, 2 * j) += bk * b.weights[j];
      op.matrix(2 * i + 1, 2 * j + 1) += bk * b.weights[j];
    }
  return op;
}

DenseOperator assemble_expansion_op(const DiskBoundary& b, OperatorKind which, const ElasticMedium& m) {
  const int n = b.n_nodes;
  const double R = b.radius, h = 2.0 * M_PI / n;
  const auto logrow = detail::kress_log_row(n);
  DenseOperator op;
  op.kind = which;
  op.k = 0.0;
  op.matrix.resize(2 * n, 2 * n);

  ExpansionCoefficients c(m);
  const double t12 = c.tau1 * c.tau2;
  const double q = (t12 - 1.0 / (m.mu * m.mu)) / (8.0 * M_PI);
  const double p = t12 / (4.0 * M_PI);
  const double lnR = std::log(R);

  parallel_rows(n, [&](int i) {
    const Vec2 nu = b.normals[i];
    for (int j = 0; j < n; ++j) {
      CircleGeom g = geom(b, i, j);
      const Vec2 xy = g.sigma * g.mv;
      const double s2 = g.sigma * g.sigma;
      CMat2 Klog = CMat2::Zero(), Ksm = CMat2::Zero();
      switch (which) {
        case OperatorKind::S1:
          Ksm = eval_A(xy, m).cast<Complex>();
          break;
        case OperatorKind::S2: {
          CMat2 lncoef = (q * s2) * CMat2::Identity() + p * (xy * xy.transpose()).cast<Complex>();
          Ksm = c.sigma1 * s2 * CMat2::Identity() +
                c.sigma2 * (xy * xy.transpose()).cast<Complex>() + lnR * lncoef;
          Klog = 0.5 * lncoef;
          break;
        }
        case OperatorKind::K1star:
          Ksm = traction_A(xy, nu, m).cast<Complex>();
          break;
        case OperatorKind::K2star: {
          const double rn = s2 / (2.0 * R);  // (x - y) . nu(x) on the circle
          const CMat2 nr = (nu * xy.transpose()).cast<Complex>();
          const CMat2 rnu = (xy * nu.transpose()).cast<Complex>();
          const CMat2 I = CMat2::Identity();
          const CMat2 mm = (g.mv * g.mv.transpose()).cast<Complex>();
          CMat2 base = m.lambda * (2.0 * c.sigma1 + q + 3.0 * c.sigma2 + p) * nr +
                       m.mu * (2.0 * c.sigma1 + q) * (rn * I + rnu) +
                       m.mu * c.sigma2 * (2.0 * nr + rnu + rn * I) +
                       m.mu * p * (s2 / R) * mm;
          CMat2 lncoef = m.lambda * (2.0 * q + 3.0 * p) * nr + 2.0 * m.mu * q * (rn * I + rnu) +
                         m.mu * p * (2.0 * nr + rnu + rn * I);
          Ksm = base + lnR * lncoef;
          Klog = 0.5 * lncoef;
          break;
        }
        default:
          throw std::invalid_argument("assemble_expansion_op: tag must be S1, S2, K1star or K2star");
      }
      op.matrix.block<2, 2>(2 * i, 2 * j) = (detail::circ_log(logrow, i, j) * Klog + h * Ksm) * R;
    }
  });
  return op;
}

CVec2 eval_field(Side side, const BoundaryField& density, const Vec2& x, Complex k,
                 const DiskBoundary& b, const ElasticMedium& m) {
  if (density.n_nodes() != b.n_nodes) throw std::invalid_argument("eval_field: size mismatch");
  const double spacing = 2.0 * M_PI * b.radius / b.n_nodes;
  if (std::abs(x.norm() - b.radius) < spacing)
    throw std::runtime_error("eval_field: point too close to the boundary for plain quadrature");
  if ((side == Side::interior) != (x.norm() < b.radius))
    throw std::invalid_argument("eval_field: point lies on the other side of the boundary");
  CVec2 out = CVec2::Zero();
  const bool dynamic = (k != Complex(0.0, 0.0));
  for (int j = 0; j < b.n_nodes; ++j) {
    const Vec2 d = x - b.nodes[j];
    CMat2 G = dynamic ? green_dynamic(d, k, m) : green_static(d, m).cast<Complex>();
    out += b.weights[j] * (G * density.at(j));
  }
  return out;
}

CVec2 eval_traction_field(const BoundaryField& density, const Vec2& x, const Vec2& nu, Complex k,
                          const DiskBoundary& b, const ElasticMedium& m) {
  if (density.n_nodes() != b.n_nodes) throw std::invalid_argument("eval_traction_field: size mismatch");
  CVec2 out = CVec2::Zero();
  const bool dynamic = (k != Complex(0.0, 0.0));
  for (int j = 0; j < b.n_nodes; ++j) {
    const Vec2 d = x - b.nodes[j];
    CMat2 T = dynamic ? traction_green_dynamic(d, nu, k, m)
                      : traction_green_static(d, nu, m).cast<Complex>();
    out += b.weights[j] * (T * density.at(j));
  }
  return out;
}

double spectral_norm(const Eigen::MatrixXcd& A) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
  return svd.singularValues()(0);
}

}  // namespace elastodisk
