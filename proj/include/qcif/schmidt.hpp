#pragma once

#include <vector>

#include "qcif/types.hpp"

namespace qcif {

struct SchmidtTerm {
  Matrix a;  // traceless Hermitian on H_c
  Matrix b;  // traceless Hermitian on H_s
};

// Canonical form H = sum_j A_j ⊗ B_j + A ⊗ 1 + 1 ⊗ B + c·1 with traceless
// local factors. {A_j} come out pairwise HS-orthogonal, ordered by decreasing
// singular value, sign-fixed so each A_j's largest-magnitude entry has
// positive real part.
struct BipartiteHamiltonian {
  int dim_c = 0;
  int dim_s = 0;
  Matrix full;
  std::vector<SchmidtTerm> terms;
  Matrix local_c;  // A
  Matrix local_s;  // B
  double scalar = 0.0;
  std::vector<double> singular_values;

  int joint_dim() const { return dim_c * dim_s; }
  bool locals_stripped(double tol = 1e-12) const;
};

BipartiteHamiltonian schmidt_decompose(const Matrix& full, int dim_c, int dim_s,
                                       const RunConfig& cfg = {});

// Zeroes A, B, c and recomputes the full matrix from the interaction terms.
BipartiteHamiltonian strip_locals(const BipartiteHamiltonian& h);

// sum_j A_j ⊗ B_j + A ⊗ 1 + 1 ⊗ B + c·1 from the stored pieces.
Matrix rebuild_full(const BipartiteHamiltonian& h);

}  // namespace qcif
