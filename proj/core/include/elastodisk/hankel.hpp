#pragma once

#include "elastodisk/types.hpp"

namespace elastodisk {

// Hankel functions of the first kind, H0^(1) and H1^(1), for complex z with
// |arg z| < pi.  Power series with compensated (double-double) accumulation up
// to |z| = 25, large-argument asymptotic expansion beyond.  Relative accuracy
// better than 1e-13 on |z| in [1e-8, 50] near the real axis.
Complex hankel_h0(Complex z);
Complex hankel_h1(Complex z);

/// J0, J1 (entire; series/asymptotic split as above).
Complex bessel_j0(Complex z);
Complex bessel_j1(Complex z);

inline Complex hankel0_first_kind(Complex z) {
  if (z == Complex(0.0, 0.0))
    throw std::domain_error("hankel0_first_kind: singular at z = 0");
  return hankel_h0(z);
}

}  // namespace elastodisk
