#include "elastodisk/hankel.hpp"

#include <array>
#include <cmath>

// The Taylor series of J0/Y0 around 0 suffer heavy cancellation for |z| beyond
// ~10: the largest term grows like e^{|z|} while the sum stays O(1).  Plain
// double accumulation would cap the achievable accuracy near 1e-9 at |z| = 20,
// so the series below run in double-double arithmetic (Dekker/Knuth error-free
// transforms).  Past |z| = 25 the Hankel asymptotic expansion reaches machine
// precision at its optimal truncation.

namespace elastodisk {
namespace {

struct DD {
  double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul_d(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div_d(DD a, double b) {
  double q1 = a.hi / b;
  DD p = two_prod(q1, b);
  double q2 = ((a.hi - p.hi) - p.lo + a.lo) / b;
  return quick_two_sum(q1, q2);
}

struct CDD {
  DD re, im;
};

inline CDD cdd_from(Complex z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

inline CDD cdd_add(CDD a, CDD b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline CDD cdd_mul(CDD a, CDD b) {
  DD re = dd_add(dd_mul(a.re, b.re), dd_mul_d(dd_mul(a.im, b.im), -1.0));
  DD im = dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re));
  return {re, im};
}

inline CDD cdd_div_d(CDD a, double b) { return {dd_div_d(a.re, b), dd_div_d(a.im, b)}; }

inline Complex to_complex(const CDD& a) { return {a.re.hi + a.re.lo, a.im.hi + a.im.lo}; }

constexpr int kSeriesMax = 80;
constexpr double kSeriesRadius = 25.0;

// Harmonic numbers H_0..H_{kSeriesMax} in double-double: the terms they weight
// reach ~e^{|z|} while the sum stays O(1), so even the weights need the full
// working precision.
const std::array<DD, kSeriesMax + 2> kHarmonic = [] {
  std::array<DD, kSeriesMax + 2> h{};
  for (int i = 1; i < kSeriesMax + 2; ++i) h[i] = dd_add(h[i - 1], dd_div_d({1.0, 0.0}, double(i)));
  return h;
}();

inline CDD cdd_mul_dd(CDD a, DD b) { return {dd_mul(a.re, b), dd_mul(a.im, b)}; }

struct SeriesJY {
  Complex j0, j1;    // J0(z), J1(z)/z
  Complex r0, r1;    // Y0 - (2/pi)(ln(z/2)+g)J0 ;  [Y1 - (2/pi)(ln(z/2)+g)J1 + 2/(pi z)]/z
};

// All four series share the variable zeta = (z/2)^2 and the double-double
// accumulation; terms are generated by exact recurrences.
SeriesJY eval_series(Complex z) {
  const Complex zeta_c = (0.25) * z * z;
  const CDD mzeta = cdd_from(-zeta_c);

  CDD t0 = cdd_from(Complex(1.0, 0.0));   // (-zeta)^k / (k!)^2
  CDD t1 = cdd_from(Complex(0.5, 0.0));   // (1/2)(-zeta)^k / (k!(k+1)!)
  CDD u1 = cdd_from(Complex(1.0, 0.0));   // (-zeta)^k / (k!(k+1)!)
  CDD s_j0 = t0, s_j1 = t1;
  CDD s_r0 = cdd_from(Complex(0.0, 0.0));
  CDD s_r1 = cdd_mul_dd(u1, dd_add(kHarmonic[0], kHarmonic[1]));

  double scale = std::abs(zeta_c);
  for (int k = 1; k < kSeriesMax; ++k) {
    t0 = cdd_div_d(cdd_mul(t0, mzeta), double(k) * k);
    t1 = cdd_div_d(cdd_mul(t1, mzeta), double(k) * (k + 1.0));
    u1 = cdd_div_d(cdd_mul(u1, mzeta), double(k) * (k + 1.0));
    s_j0 = cdd_add(s_j0, t0);
    s_j1 = cdd_add(s_j1, t1);
    s_r0 = cdd_add(s_r0, cdd_mul_dd(t0, dd_mul_d(kHarmonic[k], -1.0)));
    s_r1 = cdd_add(s_r1, cdd_mul_dd(u1, dd_add(kHarmonic[k], kHarmonic[k + 1])));
    double tmag = std::abs(to_complex(t0));
    if (tmag < 1e-40 * (1.0 + scale)) break;
  }
  SeriesJY out;
  out.j0 = to_complex(s_j0);
  out.j1 = to_complex(s_j1);
  out.r0 = (2.0 / M_PI) * to_complex(s_r0);
  out.r1 = (-1.0 / (2.0 * M_PI)) * to_complex(s_r1);
  return out;
}

// Asymptotic expansion H_nu^(1)(z) ~ sqrt(2/(pi z)) e^{i(z - nu pi/2 - pi/4)} sum_k i^k a_k(nu) z^{-k},
// a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k! 8^k), truncated at the smallest term.
Complex hankel_asym(int nu, Complex z) {
  const double fournu2 = 4.0 * nu * nu;
  Complex sum = 1.0;
  Complex term = 1.0;
  double prev = 1e300;
  for (int k = 1; k <= 40; ++k) {
    double num = fournu2 - (2.0 * k - 1.0) * (2.0 * k - 1.0);
    term *= Complex(0.0, 1.0) * num / (8.0 * double(k) * z);
    double mag = std::abs(term);
    if (mag > prev) break;  // past optimal truncation
    sum += term;
    prev = mag;
    if (mag < 1e-18) break;
  }
  Complex phase = z - (0.5 * nu + 0.25) * M_PI;
  return std::sqrt(2.0 / (M_PI * z)) * std::exp(Complex(0.0, 1.0) * phase) * sum;
}

}  // namespace

Complex hankel_h0(Complex z) {
  if (std::abs(z) > kSeriesRadius) return hankel_asym(0, z);
  SeriesJY s = eval_series(z);
  Complex lg = std::log(0.5 * z) + kEulerGamma;
  Complex y0 = (2.0 / M_PI) * lg * s.j0 + s.r0;
  return s.j0 + Complex(0.0, 1.0) * y0;
}

Complex hankel_h1(Complex z) {
  if (std::abs(z) > kSeriesRadius) return hankel_asym(1, z);
  SeriesJY s = eval_series(z);
  Complex lg = std::log(0.5 * z) + kEulerGamma;
  Complex j1 = s.j1 * z;
  Complex y1 = (2.0 / M_PI) * lg * j1 - 2.0 / (M_PI * z) + s.r1 * z;
  return j1 + Complex(0.0, 1.0) * y1;
}

Complex bessel_j0(Complex z) {
  if (std::abs(z) > kSeriesRadius) {
    // J0 = (H0^(1) + H0^(2))/2; away from the real axis one term dominates,
    // but for our use (|Im z| small) the symmetric combination is accurate.
    Complex h1 = hankel_asym(0, z);
    Complex h2 = std::conj(hankel_asym(0, std::conj(z)));
    return 0.5 * (h1 + h2);
  }
  return eval_series(z).j0;
}

Complex bessel_j1(Complex z) {
  if (std::abs(z) > kSeriesRadius) {
    Complex h1 = hankel_asym(1, z);
    Complex h2 = std::conj(hankel_asym(1, std::conj(z)));
    return 0.5 * (h1 + h2);
  }
  return eval_series(z).j1 * z;
}

}  // namespace elastodisk
