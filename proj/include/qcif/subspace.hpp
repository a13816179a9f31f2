#pragma once

#include <vector>

#include "qcif/types.hpp"

namespace qcif {

// Real subspace of Hermitian dim x dim matrices with an HS-orthonormal basis.
// Basis elements are kept both as matrices and as real coordinate columns in
// the canonical Hermitian coordinate map (an HS isometry), so projections run
// as dense real mat-vecs.
class OperatorSubspace {
 public:
  explicit OperatorSubspace(int dim_matrix);

  int dim_matrix() const { return dim_; }
  int size() const { return count_; }
  const Matrix& basis(int k) const { return basis_[static_cast<std::size_t>(k)]; }
  const std::vector<Matrix>& basis() const { return basis_; }

  struct ExtendResult {
    bool accepted = false;
    double residual_norm = 0.0;  // |X - proj(X)|_F before normalization
  };
  // Gram-Schmidt step: appends the normalized orthogonal residual of x when
  // it exceeds rel_tol * |x|_F.
  ExtendResult extend(const Matrix& x, double rel_tol = 1e-9);

  struct Membership {
    bool member = false;
    double residual = 0.0;  // |X - proj(X)|_F / |X|_F, 0 for X = 0
  };
  Membership member(const Matrix& x, double tol = 1e-8) const;

  // max_{i,j} |<b_i, b_j> - delta_ij|; test hook for the type invariant.
  double orthonormality_defect() const;

  // Canonical Hermitian coordinate map (isometric for the HS inner product).
  RealVector to_coords(const Matrix& x) const;
  Matrix from_coords(const RealVector& r) const;

 private:
  // Projects r onto the orthogonal complement of the span, twice for
  // numerical stability. Returns the final norm.
  double project_out(RealVector& r) const;

  int dim_ = 0;
  int count_ = 0;
  std::vector<Matrix> basis_;
  RealMatrix coords_;  // (dim_^2) x capacity; first count_ columns valid
};

}  // namespace qcif
