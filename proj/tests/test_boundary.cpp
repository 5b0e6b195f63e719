#include <doctest.h>

#include "elastodisk/boundary.hpp"

using namespace elastodisk;

TEST_CASE("make_disk quadrature") {
  DiskBoundary b = make_disk(1.0, 64);
  double tot = 0.0;
  for (double w : b.weights) tot += w;
  CHECK(tot == doctest::Approx(2.0 * M_PI));

  // moments: int y1 = 0, int y1^2 = pi R^3
  DiskBoundary b2 = make_disk(2.0, 64);
  double m1 = 0.0, m2 = 0.0;
  for (int j = 0; j < b2.n_nodes; ++j) {
    m1 += b2.weights[j] * b2.nodes[j].x();
    m2 += b2.weights[j] * b2.nodes[j].x() * b2.nodes[j].x();
  }
  CHECK(std::abs(m1) < 1e-14);
  CHECK(m2 == doctest::Approx(8.0 * M_PI).epsilon(1e-13));

  // trigonometric exactness: cos(m t) integrates to 0 for 0 < m <= n/2 - 1
  for (int mm : {1, 5, 31}) {
    double s = 0.0;
    for (int j = 0; j < b.n_nodes; ++j) s += b.weights[j] * std::cos(mm * b.theta[j]);
    CHECK(std::abs(s) < 1e-13);
  }

  CHECK_THROWS_AS(make_disk(-1.0, 64), std::invalid_argument);
  CHECK_THROWS_AS(make_disk(1.0, 15), std::invalid_argument);
  CHECK_THROWS_AS(make_disk(1.0, 14), std::invalid_argument);
}

TEST_CASE("rigid motion basis orthonormal") {
  for (int n : {32, 256}) {
    DiskBoundary b = make_disk(1.7, n);
    RigidMotionBasis f = basis_f(b);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Complex ip = inner_product(f[i], f[j], b);
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    // |f3| = (2 pi R)^{-1/2} at every node
    double want = 1.0 / std::sqrt(2.0 * M_PI * b.radius);
    for (int j = 0; j < n; ++j) CHECK(std::abs(f.f3.at(j).norm() - want) < 1e-14);
    // integral of f3 vanishes
    CVec2 s = CVec2::Zero();
    for (int j = 0; j < n; ++j) s += b.weights[j] * f.f3.at(j);
    CHECK(s.norm() < 1e-13);
  }
}

TEST_CASE("inner product is conjugate-linear in the second slot") {
  DiskBoundary b = make_disk(1.0, 32);
  RigidMotionBasis f = basis_f(b);
  Complex c(0.3, -1.1);
  BoundaryField cf1;
  cf1.values = c * f.f1.values;
  CHECK(std::abs(inner_product(cf1, f.f1, b) - c) < 1e-14);
  CHECK(std::abs(inner_product(f.f1, cf1, b) - std::conj(c)) < 1e-14);
  CHECK(std::abs(inner_product(cf1, cf1, b).imag()) < 1e-16);
  BoundaryField wrong(16);
  CHECK_THROWS_AS(inner_product(wrong, f.f1, b), std::invalid_argument);
}
