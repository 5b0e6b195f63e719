#include "elastodisk/boundary.hpp"

namespace elastodisk {

DiskBoundary make_disk(double radius, int n_nodes) {
  if (!(radius > 0.0)) throw std::invalid_argument("make_disk: radius must be positive");
  if (n_nodes < 16 || n_nodes % 2 != 0)
    throw std::invalid_argument("make_disk: n_nodes must be even and >= 16");
  DiskBoundary b;
  b.radius = radius;
  b.n_nodes = n_nodes;
  b.theta.resize(n_nodes);
  b.nodes.resize(n_nodes);
  b.normals.resize(n_nodes);
  b.weights.assign(n_nodes, 2.0 * M_PI * radius / n_nodes);
  for (int j = 0; j < n_nodes; ++j) {
    double t = 2.0 * M_PI * j / n_nodes;
    b.theta[j] = t;
    b.normals[j] = Vec2(std::cos(t), std::sin(t));
    b.nodes[j] = radius * b.normals[j];
  }
  return b;
}

RigidMotionBasis basis_f(const DiskBoundary& b) {
  const int n = b.n_nodes;
  const double c12 = 1.0 / std::sqrt(2.0 * M_PI * b.radius);
  const double c3 = 1.0 / std::sqrt(2.0 * M_PI * b.radius * b.radius * b.radius);
  RigidMotionBasis f{BoundaryField(n), BoundaryField(n), BoundaryField(n)};
  for (int j = 0; j < n; ++j) {
    f.f1.set(j, CVec2(c12, 0.0));
    f.f2.set(j, CVec2(0.0, c12));
    f.f3.set(j, CVec2(c3 * b.nodes[j].y(), -c3 * b.nodes[j].x()));
  }
  return f;
}

Complex inner_product(const BoundaryField& u, const BoundaryField& v, const DiskBoundary& b) {
  if (u.values.size() != v.values.size() || u.n_nodes() != b.n_nodes)
    throw std::invalid_argument("inner_product: size mismatch");
  // conjugate-linear in the second slot
  Complex s = 0.0;
  for (int j = 0; j < b.n_nodes; ++j) s += b.weights[j] * (u.at(j).transpose() * v.at(j).conjugate())(0);
  return s;
}

double norm_l2(const BoundaryField& u, const DiskBoundary& b) {
  return std::sqrt(std::abs(inner_product(u, u, b)));
}

}  // namespace elastodisk
