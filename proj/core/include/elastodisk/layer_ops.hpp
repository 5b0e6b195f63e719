#pragma once

#include "elastodisk/boundary.hpp"

namespace elastodisk {

enum class OperatorKind { S, Kstar, Shat, S1, S2, K1star, K2star };

/// Dense Nystrom matrix of a boundary integral operator, acting on interleaved
/// boundary fields (2n x 2n).
struct DenseOperator {
  Eigen::MatrixXcd matrix;
  OperatorKind kind{};
  Complex k{};  // assembly wavenumber, 0 for static

  BoundaryField apply(const BoundaryField& f) const {
    BoundaryField out;
    out.values = matrix * f.values;
    return out;
  }
};

/// Single layer operator S_D^k (k = 0 gives the elastostatic operator).
DenseOperator assemble_S(const DiskBoundary& b, Complex k, const ElasticMedium& m);

/// Neumann-Poincare operator K_D^{k,*} (principal value; k = 0 static).
DenseOperator assemble_Kstar(const DiskBoundary& b, Complex k, const ElasticMedium& m);

/// Leading-order operator: S_D + beta_k integral-of-density (rank-2 update).
DenseOperator assemble_S_hat(const DiskBoundary& b, Complex k, const ElasticMedium& m);

/// Expansion operators with kernels A, B, d_nu A, d_nu B
/// (kinds S1, S2, K1star, K2star).
DenseOperator assemble_expansion_op(const DiskBoundary& b, OperatorKind which, const ElasticMedium& m);

enum class Side { interior, exterior };

/// Single layer potential evaluated off the boundary (k = 0 static).
CVec2 eval_field(Side side, const BoundaryField& density, const Vec2& x, Complex k,
                 const DiskBoundary& b, const ElasticMedium& m);

/// Traction of the single layer potential at an off-boundary point, with the
/// given unit direction nu (closed-form kernel derivatives).
CVec2 eval_traction_field(const BoundaryField& density, const Vec2& x, const Vec2& nu, Complex k,
                          const DiskBoundary& b, const ElasticMedium& m);

/// Spectral (2-)norm of a dense complex matrix.
double spectral_norm(const Eigen::MatrixXcd& A);

}  // namespace elastodisk
