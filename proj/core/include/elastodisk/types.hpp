#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>

namespace elastodisk {

using Complex = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Isotropic background medium: Lame parameters and density.
struct ElasticMedium {
  double lambda = 1.0;
  double mu = 1.0;
  double rho = 1.0;

  ElasticMedium() = default;
  ElasticMedium(double lambda_, double mu_, double rho_ = 1.0)
      : lambda(lambda_), mu(mu_), rho(rho_) {
    if (!(mu > 0.0) || !(lambda + mu > 0.0))
      throw std::invalid_argument("ElasticMedium: strong convexity requires mu > 0 and lambda + mu > 0");
    if (!(rho > 0.0))
      throw std::invalid_argument("ElasticMedium: density must be positive");
  }

  double lame_p() const { return lambda + 2.0 * mu; }  // lambda + 2 mu
  double shear_speed() const { return std::sqrt(mu / rho); }
  double pressure_speed() const { return std::sqrt(lame_p() / rho); }
};

inline std::pair<double, double> wave_speeds(const ElasticMedium& m) {
  return {m.shear_speed(), m.pressure_speed()};
}

/// tau = sqrt(delta/epsilon), the interior/exterior wave-speed ratio.
inline double derive_tau(double delta, double epsilon) {
  if (!(delta > 0.0) || !(epsilon > 0.0))
    throw std::domain_error("derive_tau: contrasts must be positive");
  return std::sqrt(delta / epsilon);
}

/// Small contrast parameters of the stiff, dense inclusion.
struct ContrastParams {
  double delta = 1e-4;    // stiffness contrast
  double epsilon = 1e-4;  // density contrast
  double tau = 1.0;       // sqrt(delta/epsilon)

  ContrastParams() = default;

  static ContrastParams from_delta_epsilon(double delta, double epsilon) {
    ContrastParams c;
    c.delta = delta;
    c.epsilon = epsilon;
    c.tau = derive_tau(delta, epsilon);
    return c;
  }
  static ContrastParams from_epsilon_tau(double epsilon, double tau) {
    if (!(epsilon > 0.0) || !(tau > 0.0))
      throw std::domain_error("ContrastParams: epsilon and tau must be positive");
    ContrastParams c;
    c.epsilon = epsilon;
    c.tau = tau;
    c.delta = tau * tau * epsilon;
    return c;
  }
};

/// Wavenumbers derived from a (possibly complex) angular frequency.
struct WaveContext {
  Complex omega{};
  Complex k_exterior{};  // sqrt(rho) * omega
  Complex k_interior{};  // sqrt(rho) * tau * omega
  Complex k_p{};         // omega / c_p
};

inline WaveContext wave_context(Complex omega, const ElasticMedium& m, double tau) {
  WaveContext w;
  w.omega = omega;
  w.k_exterior = std::sqrt(m.rho) * omega;
  w.k_interior = tau * w.k_exterior;
  w.k_p = omega / m.pressure_speed();
  return w;
}

}  // namespace elastodisk
