#pragma once

#include <vector>
#include <cmath>

namespace elastodisk::detail {

// Kress product-quadrature weights for the periodic log kernel:
//   int_0^{2pi} f(s) ln(4 sin^2((t_i - s)/2)) ds  ~=  sum_j R[|i-j|] f(t_j)
// on the uniform n-point grid (n even).  Returned as the circulant first row.
inline std::vector<double> kress_log_row(int n) {
  std::vector<double> row(n, 0.0);
  for (int d = 0; d < n; ++d) {
    double t = 2.0 * M_PI * d / n;
    double s = 0.0;
    for (int m = 1; m < n / 2; ++m) s += std::cos(m * t) / m;
    row[d] = -(4.0 * M_PI / n) * s - (4.0 * M_PI / (n * n)) * std::cos(0.5 * n * t);
  }
  return row;
}

// Quadrature for the principal-value cotangent kernel:
//   p.v. int_0^{2pi} f(s) cot((t_i - s)/2) ds ~= sum_{j: i-j odd} C[|i-j|] f(t_j),
// exact on trigonometric polynomials of degree < n/2.
inline std::vector<double> cot_pv_row(int n) {
  std::vector<double> row(n, 0.0);
  for (int d = 1; d < n; ++d) {
    if (d % 2 == 0) continue;
    row[d] = (4.0 * M_PI / n) / std::tan(M_PI * d / n);
  }
  return row;
}

// Row entry helpers: the kernels depend on i-j through t_i - t_j; the log row
// is symmetric in d, the cot row is antisymmetric (tan(pi (n-d)/n) = -tan(pi d/n)).
inline double circ_log(const std::vector<double>& row, int i, int j) {
  int d = i - j;
  if (d < 0) d += int(row.size());
  return row[d];
}
inline double circ_cot(const std::vector<double>& row, int i, int j) {
  int d = i - j;
  int n = int(row.size());
  if (d < 0) d += n;
  return row[d];
}

}  // namespace elastodisk::detail
