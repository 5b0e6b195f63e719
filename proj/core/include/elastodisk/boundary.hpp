#pragma once

#include <vector>

#include "elastodisk/kernels.hpp"

namespace elastodisk {

/// Uniform trapezoidal discretization of the circle of radius R.
/// Nodes R(cos t_j, sin t_j), t_j = 2 pi j / n; weights 2 pi R / n.
struct DiskBoundary {
  double radius = 1.0;
  int n_nodes = 256;
  std::vector<double> theta;
  std::vector<Vec2> nodes;
  std::vector<Vec2> normals;
  std::vector<double> weights;
};

DiskBoundary make_disk(double radius, int n_nodes);

/// Complex 2-vector density sampled at the boundary nodes, stored interleaved
/// as (u0_x, u0_y, u1_x, u1_y, ...).
struct BoundaryField {
  Eigen::VectorXcd values;

  BoundaryField() = default;
  explicit BoundaryField(int n_nodes) : values(Eigen::VectorXcd::Zero(2 * n_nodes)) {}

  int n_nodes() const { return int(values.size() / 2); }
  CVec2 at(int j) const { return values.segment<2>(2 * j); }
  void set(int j, const CVec2& v) { values.segment<2>(2 * j) = v; }
};

/// Orthonormal rigid-motion basis on the boundary: two translations and the
/// in-plane rotation, normalized in L^2(bd D)^2.
struct RigidMotionBasis {
  BoundaryField f1, f2, f3;
  const BoundaryField& operator[](int i) const {
    return i == 0 ? f1 : (i == 1 ? f2 : f3);
  }
};

RigidMotionBasis basis_f(const DiskBoundary& b);

/// L^2(bd D)^2 inner product, conjugate-linear in the second slot.
Complex inner_product(const BoundaryField& u, const BoundaryField& v, const DiskBoundary& b);

double norm_l2(const BoundaryField& u, const DiskBoundary& b);

}  // namespace elastodisk
