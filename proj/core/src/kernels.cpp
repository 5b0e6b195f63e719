#include "elastodisk/kernels.hpp"

#include <array>

#include "elastodisk/detail/circle_kernels.hpp"
#include "elastodisk/hankel.hpp"

namespace elastodisk {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr int kSeriesTerms = 36;
// Largest |k_s| * |x| handled by the cancellation-free series path.
constexpr double kSeriesW = 8.0;

const std::array<double, kSeriesTerms + 2> kHarm = [] {
  std::array<double, kSeriesTerms + 2> h{};
  for (int i = 1; i < kSeriesTerms + 2; ++i) h[i] = h[i - 1] + 1.0 / i;
  return h;
}();

}  // namespace

namespace detail {

Complex series_j0v(Complex z) {
  Complex s = 1.0, t = 1.0;
  for (int k = 1; k < kSeriesTerms; ++k) {
    t *= -z / double(k) / double(k);
    s += t;
  }
  return s;
}

Complex series_j1v(Complex z) {
  Complex s = 0.5, t = 0.5;
  for (int k = 1; k < kSeriesTerms; ++k) {
    t *= -z / double(k) / double(k + 1);
    s += t;
  }
  return s;
}

Complex series_j2v(Complex z) {
  Complex s = 0.125, t = 0.125;
  for (int k = 1; k < kSeriesTerms; ++k) {
    t *= -z / double(k) / double(k + 2);
    s += t;
  }
  return s;
}

Complex series_r0v(Complex z) {
  Complex s = 0.0, t = 1.0;
  for (int k = 1; k < kSeriesTerms; ++k) {
    t *= -z / double(k) / double(k);
    s -= t * kHarm[k];
  }
  return (2.0 / M_PI) * s;
}

Complex series_r1v(Complex z) {
  Complex s = 0.0, t = 1.0;  // (-z)^k/(k!(k+1)!)
  s += t * (kHarm[0] + kHarm[1]);
  for (int k = 1; k < kSeriesTerms; ++k) {
    t *= -z / double(k) / double(k + 1);
    s += t * (kHarm[k] + kHarm[k + 1]);
  }
  return (-1.0 / (2.0 * M_PI)) * s;
}

Complex series_rrred(Complex z) {
  Complex s = 0.0;
  Complex p = 1.0;   // (-1)^{k+1} z^{k-1}/(k!)^2, k = 1
  Complex q = -0.5;  // (-1)^k z^{k-1}/(k!(k+1)!), k = 1
  for (int k = 1; k < kSeriesTerms; ++k) {
    s += (2.0 / M_PI) * kHarm[k] * p + (1.0 / M_PI) * (kHarm[k] + kHarm[k + 1]) * q;
    p *= -z / double(k + 1) / double(k + 1);
    q *= -z / double(k + 1) / double(k + 2);
  }
  return 0.25 * s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Expansion constants
// ---------------------------------------------------------------------------

ExpansionCoefficients::ExpansionCoefficients(const ElasticMedium& m) {
  const double mu = m.mu, lp = m.lame_p();
  tau1 = 0.5 * (1.0 / mu + 1.0 / lp);
  tau2 = 0.5 * (1.0 / mu - 1.0 / lp);
  rho1 = Complex((1.0 + std::log(2.0) - kEulerGamma) / (8.0 * M_PI), 1.0 / 16.0);
  rho2 = Complex((kEulerGamma - std::log(2.0) - 1.5) / (128.0 * M_PI), -1.0 / 256.0);
  const double ap2 = 1.0 / (lp * lp), as2 = 1.0 / (mu * mu);
  const Complex e1 = (as2 * std::log(mu) - ap2 * std::log(lp)) / (256.0 * M_PI) + rho2 * (ap2 - as2);
  const double e2 = (ap2 - as2) / (128.0 * M_PI);
  sigma1 = as2 * (std::log(mu) / (16.0 * M_PI) + rho1) - 4.0 * e1 - e2;
  sigma2 = -8.0 * e1 - 6.0 * e2;
}

Complex beta_k(Complex k, const ElasticMedium& m) {
  if (k == Complex(0.0, 0.0)) throw std::domain_error("beta_k: k must be nonzero");
  ExpansionCoefficients c(m);
  const double mu = m.mu, lp = m.lame_p();
  return (c.tau1 / (4.0 * M_PI)) * Complex(2.0 * kEulerGamma - std::log(4.0), -M_PI) +
         c.tau2 / (4.0 * M_PI) + std::log(k / std::sqrt(lp)) / (4.0 * M_PI * lp) +
         std::log(k / std::sqrt(mu)) / (4.0 * M_PI * mu);
}

// ---------------------------------------------------------------------------
// Fundamental solutions
// ---------------------------------------------------------------------------

Mat2 green_static(const Vec2& x, const ElasticMedium& m) {
  const double d2 = x.squaredNorm();
  if (d2 == 0.0) throw std::domain_error("green_static: singular at x = 0");
  ExpansionCoefficients c(m);
  return (c.tau1 / (2.0 * M_PI)) * 0.5 * std::log(d2) * Mat2::Identity() -
         (c.tau2 / (2.0 * M_PI)) * (x * x.transpose()) / d2;
}

namespace {

// Regularized scalar profiles built from the Hankel series:
//   h1r(w)  = H1(w)/w + 2i/(pi w^2)           (entire up to log terms)
//   g2r(w)  = H0(w) - 2 h1r(w)
// and the G^k radial decomposition G^k = psi I + chi rhat rhat^T.
struct ValueProfiles {
  Complex psi, chi;
  Complex theta, psi_p, chi_p;  // traction pieces; filled when requested
};

Complex h1r_series(Complex w2over4, Complex lnw2) {
  Complex j1 = detail::series_j1v(w2over4);
  return j1 + kI * ((2.0 / M_PI) * (lnw2 + kEulerGamma) * j1 + detail::series_r1v(w2over4));
}

Complex h0_series(Complex w2over4, Complex lnw2) {
  Complex j0 = detail::series_j0v(w2over4);
  return j0 + kI * ((2.0 / M_PI) * (lnw2 + kEulerGamma) * j0 + detail::series_r0v(w2over4));
}

ValueProfiles profiles(Complex k, double d, const ElasticMedium& m, bool with_traction) {
  const double mu = m.mu, lp = m.lame_p();
  const Complex kp = k / std::sqrt(lp), ks = k / std::sqrt(mu);
  const Complex k2 = k * k;
  ExpansionCoefficients c(m);
  ValueProfiles out;
  if (std::abs(ks) * d <= kSeriesW) {
    const Complex ws = ks * d, wp = kp * d;
    const Complex zs = 0.25 * ws * ws, zp = 0.25 * wp * wp;
    const Complex lns = std::log(0.5 * ws), lnp = std::log(0.5 * wp);
    const Complex H0s = h0_series(zs, lns);
    const Complex h1s = h1r_series(zs, lns), h1p = h1r_series(zp, lnp);
    const Complex H0p = h0_series(zp, lnp);
    const Complex g2s = H0s - 2.0 * h1s, g2p = H0p - 2.0 * h1p;
    out.psi = (-kI / (4.0 * mu)) * H0s - (kI / 4.0) * (h1p / lp - h1s / mu);
    out.chi = (kI / 4.0) * (g2s / mu - g2p / lp);
    if (with_traction) {
      out.theta = (kI * k2 / 4.0) * d * h1p / (lp * lp) + 1.0 / (2.0 * M_PI * d * lp);
      out.psi_p = (kI * k2 / 4.0) * d * h1s / (mu * mu) + 1.0 / (2.0 * M_PI * mu * d) + out.chi / d;
      out.chi_p = (kI * k2 / 4.0) * d * (h1p / (lp * lp) - h1s / (mu * mu)) -
                  c.tau2 / (M_PI * d) - 2.0 * out.chi / d;
    }
    return out;
  }
  // Direct Hankel path: cancellation is mild once |w| is O(1).
  auto D1 = [&](Complex kap) { return kap * hankel_h1(kap * d) / d; };
  auto D2 = [&](Complex kap) { return kap * kap * hankel_h0(kap * d); };
  const Complex D1p = D1(kp), D1s = D1(ks), D2p = D2(kp), D2s = D2(ks);
  out.psi = (-kI / (4.0 * mu)) * hankel_h0(ks * d) - (kI / (4.0 * k2)) * (D1p - D1s);
  out.chi = (kI / (4.0 * k2)) * (D2s - D2p + 2.0 * (D1p - D1s));
  if (with_traction) {
    out.psi_p = (kI * ks / (4.0 * mu)) * hankel_h1(ks * d) -
                (kI / (4.0 * k2)) * ((D2p - D2s) / d - 2.0 * (D1p - D1s) / d);
    out.chi_p = (kI / (4.0 * k2)) * (kp * kp * kp * hankel_h1(kp * d) - ks * ks * ks * hankel_h1(ks * d) +
                                     2.0 * (D2p - 2.0 * D1p) / d - 2.0 * (D2s - 2.0 * D1s) / d);
    out.theta = out.psi_p + out.chi_p + out.chi / d;
  }
  return out;
}

}  // namespace

CMat2 green_dynamic(const Vec2& x, Complex k, const ElasticMedium& m) {
  const double d = x.norm();
  if (d == 0.0) throw std::domain_error("green_dynamic: singular at x = 0");
  if (k == Complex(0.0, 0.0)) throw std::domain_error("green_dynamic: k must be nonzero (use green_static)");
  ValueProfiles p = profiles(k, d, m, false);
  Vec2 rh = x / d;
  return p.psi * CMat2::Identity() + p.chi * (rh * rh.transpose()).cast<Complex>();
}

Mat2 eval_A(const Vec2& x, const ElasticMedium& m) {
  const double mu2 = m.mu * m.mu, lp2 = m.lame_p() * m.lame_p();
  const double alpha = -3.0 / (32.0 * M_PI * mu2) - 1.0 / (32.0 * M_PI * lp2);
  const double c = 1.0 / (16.0 * M_PI * mu2) - 1.0 / (16.0 * M_PI * lp2);
  return alpha * x.squaredNorm() * Mat2::Identity() + c * (x * x.transpose());
}

CMat2 eval_B(const Vec2& x, const ElasticMedium& m) {
  const double d2 = x.squaredNorm();
  if (d2 == 0.0) throw std::domain_error("eval_B: singular at x = 0 (log term)");
  ExpansionCoefficients c(m);
  const double t12 = c.tau1 * c.tau2;
  const double q = (t12 - 1.0 / (m.mu * m.mu)) / (8.0 * M_PI);
  const double p = t12 / (4.0 * M_PI);
  const double ln = 0.5 * std::log(d2);
  return (c.sigma1 * d2 + q * d2 * ln) * CMat2::Identity() +
         (c.sigma2 + p * ln) * (x * x.transpose()).cast<Complex>();
}

// ---------------------------------------------------------------------------
// Tractions
// ---------------------------------------------------------------------------

Mat2 traction_green_static(const Vec2& x, const Vec2& nu, const ElasticMedium& m) {
  const double d = x.norm();
  if (d == 0.0) throw std::domain_error("traction_green_static: singular at x = 0");
  ExpansionCoefficients c(m);
  const double cl = c.tau1 / (2.0 * M_PI), ct = c.tau2 / (2.0 * M_PI);
  const Vec2 rh = x / d;
  const double rn = rh.dot(nu);
  Mat2 T = m.lambda * (cl - ct) / d * (nu * rh.transpose());
  T += m.mu * cl / d * (rn * Mat2::Identity() + rh * nu.transpose());
  T -= m.mu * ct / d *
       (2.0 * (nu * rh.transpose()) + rh * nu.transpose() + rn * Mat2::Identity() -
        4.0 * rn * (rh * rh.transpose()));
  return T;
}

CMat2 traction_green_dynamic(const Vec2& x, const Vec2& nu, Complex k, const ElasticMedium& m) {
  const double d = x.norm();
  if (d == 0.0) throw std::domain_error("traction_green_dynamic: singular at x = 0");
  ValueProfiles p = profiles(k, d, m, true);
  const Vec2 rh = x / d;
  const double rn = rh.dot(nu);
  const CMat2 nr = (nu * rh.transpose()).cast<Complex>();
  const CMat2 rnM = (rh * nu.transpose()).cast<Complex>();
  const CMat2 rr = (rh * rh.transpose()).cast<Complex>();
  const CMat2 I = CMat2::Identity();
  return m.lambda * p.theta * nr + m.mu * p.psi_p * (rn * I + rnM) +
         2.0 * m.mu * p.chi_p * rn * rr +
         m.mu * (p.chi / d) * (2.0 * nr + rnM + rn * I - 4.0 * rn * rr);
}

Mat2 traction_A(const Vec2& x, const Vec2& nu, const ElasticMedium& m) {
  const double mu2 = m.mu * m.mu, lp2 = m.lame_p() * m.lame_p();
  const double alpha = -3.0 / (32.0 * M_PI * mu2) - 1.0 / (32.0 * M_PI * lp2);
  const double c = 1.0 / (16.0 * M_PI * mu2) - 1.0 / (16.0 * M_PI * lp2);
  const double C1 = m.lambda * (2.0 * alpha + 3.0 * c) + 2.0 * m.mu * c;
  const double C2 = m.mu * (2.0 * alpha + c);
  return C1 * (nu * x.transpose()) + C2 * (x.dot(nu) * Mat2::Identity() + x * nu.transpose());
}

CMat2 traction_B(const Vec2& x, const Vec2& nu, const ElasticMedium& m) {
  const double d2 = x.squaredNorm();
  if (d2 == 0.0) return CMat2::Zero();  // continuous limit
  ExpansionCoefficients c(m);
  const double t12 = c.tau1 * c.tau2;
  const double q = (t12 - 1.0 / (m.mu * m.mu)) / (8.0 * M_PI);
  const double p = t12 / (4.0 * M_PI);
  const double ln = 0.5 * std::log(d2);
  const double rn = x.dot(nu);
  const CMat2 nr = (nu * x.transpose()).cast<Complex>();
  const CMat2 rnM = (x * nu.transpose()).cast<Complex>();
  const CMat2 I = CMat2::Identity();
  const CMat2 rr = (x * x.transpose()).cast<Complex>();
  CMat2 T = m.lambda * ((2.0 * c.sigma1 + q + 3.0 * c.sigma2 + p) + (2.0 * q + 3.0 * p) * ln) * nr;
  T += m.mu * (2.0 * c.sigma1 + q * (2.0 * ln + 1.0)) * (rn * I + rnM);
  T += m.mu * c.sigma2 * (2.0 * nr + rnM + rn * I);
  T += m.mu * p * ((2.0 * nr + rnM + rn * I) * ln + 2.0 * rr * rn / d2);
  return T;
}

// ---------------------------------------------------------------------------
// Far field
// ---------------------------------------------------------------------------

FarKernel far_kernel(const Vec2& xhat, const Vec2& y, Complex omega, const ElasticMedium& m) {
  if (omega == Complex(0.0, 0.0)) throw std::domain_error("far_kernel: omega must be nonzero");
  const double lp = m.lame_p();
  const Complex pref_p =
      -(kI + 1.0) / (4.0 * std::pow(m.rho, 0.25) * std::pow(lp, 0.75) * std::sqrt(M_PI * omega));
  const Complex pref_s =
      -(kI + 1.0) / (4.0 * std::pow(m.rho, 0.25) * std::pow(m.mu, 0.75) * std::sqrt(M_PI * omega));
  const Complex kp = std::sqrt(m.rho) * omega / std::sqrt(lp);
  const Complex ks = std::sqrt(m.rho) * omega / std::sqrt(m.mu);
  const Mat2 proj = xhat * xhat.transpose();
  FarKernel out;
  out.p_part = pref_p * std::exp(-kI * kp * xhat.dot(y)) * proj.cast<Complex>();
  out.s_part = pref_s * std::exp(-kI * ks * xhat.dot(y)) * (Mat2::Identity() - proj).cast<Complex>();
  return out;
}

// ---------------------------------------------------------------------------
// Circle split kernels
// ---------------------------------------------------------------------------

namespace detail {

CircleDynKernel::CircleDynKernel(Complex k, const ElasticMedium& m, double R)
    : k_(k), m_(m), R_(R) {
  if (k == Complex(0.0, 0.0)) throw std::domain_error("CircleDynKernel: k must be nonzero");
  kp_ = k / std::sqrt(m.lame_p());
  ks_ = k / std::sqrt(m.mu);
  if (std::abs(ks_) * 2.0 * R > kSeriesW)
    throw std::domain_error("CircleDynKernel: |k| R too large for the split series path");
  c0p_ = 1.0 + (2.0 * kI / M_PI) * (std::log(0.5 * kp_ * R) + kEulerGamma);
  c0s_ = 1.0 + (2.0 * kI / M_PI) * (std::log(0.5 * ks_ * R) + kEulerGamma);
}

CircleDynKernel::Profiles CircleDynKernel::at(double sigma) const {
  const double mu = m_.mu, lp = m_.lame_p();
  const Complex zs = 0.25 * ks_ * ks_ * sigma * sigma;
  const Complex zp = 0.25 * kp_ * kp_ * sigma * sigma;
  const Complex k2 = k_ * k_;

  auto split_h0 = [&](Complex z, Complex c0) -> Split {
    Complex j0 = series_j0v(z);
    return {(kI / M_PI) * j0, j0 * c0 + kI * series_r0v(z)};
  };
  auto split_h1r = [&](Complex z, Complex c0) -> Split {
    Complex j1 = series_j1v(z);
    return {(kI / M_PI) * j1, j1 * c0 + kI * series_r1v(z)};
  };
  auto split_g2r = [&](Complex z, Complex c0) -> Split {
    Complex jj = series_j0v(z) - 2.0 * series_j1v(z);
    return {(kI / M_PI) * jj, jj * c0 + kI * (series_r0v(z) - 2.0 * series_r1v(z))};
  };
  auto split_g2red = [&](Complex z, Complex c0) -> Split {
    Complex j2 = series_j2v(z);
    return {-(kI / M_PI) * j2, -j2 * c0 + kI * series_rrred(z)};
  };

  Profiles pr;
  const Split H0s = split_h0(zs, c0s_);
  pr.h1p = split_h1r(zp, c0p_);
  pr.h1s = split_h1r(zs, c0s_);
  const Split g2s = split_g2r(zs, c0s_), g2p = split_g2r(zp, c0p_);
  const Split G2rs = split_g2red(zs, c0s_), G2rp = split_g2red(zp, c0p_);
  pr.psi = (-kI / (4.0 * mu)) * H0s + (-kI / 4.0) * (pr.h1p * (1.0 / lp) - pr.h1s * (1.0 / mu));
  pr.chi = (kI / 4.0) * (g2s * (1.0 / mu) - g2p * (1.0 / lp));
  pr.chird = (kI * k2 / 4.0) * (G2rs * (1.0 / (mu * mu)) - G2rp * (1.0 / (lp * lp)));
  return pr;
}

}  // namespace detail

}  // namespace elastodisk
