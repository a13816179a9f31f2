#pragma once

#include <vector>

#include "qcif/types.hpp"

namespace qcif {

// Fixed structural tolerances (construction-time invariants).
inline constexpr double kHermTol = 1e-12;     // per-entry |X_ij - conj(X_ji)|
inline constexpr double kUnitaryTol = 1e-10;  // Frobenius |U^dag U - 1|
inline constexpr double kTracelessTol = 1e-10;

bool is_hermitian(const Matrix& x, double tol = kHermTol);
bool is_unitary(const Matrix& u, double tol = kUnitaryTol);
void require_hermitian(const Matrix& x, const char* where, double tol = kHermTol);
void require_unitary(const Matrix& u, const char* where, double tol = kUnitaryTol);
void require_square(const Matrix& x, const char* where);
void require_same_dim(const Matrix& x, const Matrix& y, const char* where);

// Hilbert-Schmidt inner product trace(X^dag Y). Real for Hermitian pairs.
Complex hs_inner(const Matrix& x, const Matrix& y);
double hs_norm(const Matrix& x);

// X - (tr X / dim) 1.
Matrix traceless_part(const Matrix& x);

// Kronecker product, controller factor first.
Matrix tensor(const Matrix& x, const Matrix& y);

// exp(i t H) for Hermitian H, via eigendecomposition.
Matrix expm_i(const Matrix& h, double t);

Matrix commutator_i(const Matrix& x, const Matrix& y);  // i[X,Y]
Matrix jordan_product(const Matrix& x, const Matrix& y);  // (XY+YX)/2

// Partial traces of a joint operator on H_c (dim_c) ⊗ H_s (dim_s).
Matrix partial_trace_system(const Matrix& m, int dim_c, int dim_s);      // -> dim_c x dim_c
Matrix partial_trace_controller(const Matrix& m, int dim_c, int dim_s);  // -> dim_s x dim_s

// Orthonormal (HS norm 1) Hermitian bases. The traceless family is the
// generalized Gell-Mann basis: d^2-1 elements; the full family appends
// the normalized identity.
std::vector<Matrix> traceless_hermitian_basis(int d);
std::vector<Matrix> hermitian_basis(int d);

// Standard unnormalized test operators.
std::vector<Matrix> pauli_matrices();     // sx, sy, sz
std::vector<Matrix> gell_mann_matrices();  // lambda_1 .. lambda_8
// Spin-(d-1)/2 ladder-built angular momentum components {Jx, Jy, Jz}.
std::vector<Matrix> spin_operators(int d);

// Embed a controller unitary/operator as w ⊗ 1_s.
Matrix embed_controller(const Matrix& w, int dim_s);

// min over unit phases c of the spectral norm |U - cV|.
double phase_aligned_distance(const Matrix& u, const Matrix& v);
double spectral_norm(const Matrix& x);

}  // namespace qcif
