#pragma once

#include <vector>

#include "qcif/schmidt.hpp"
#include "qcif/types.hpp"

namespace qcif {

struct ProcedureStep {
  double wait = 0.0;  // free evolution time, >= 0
  Matrix w;           // instantaneous controller unitary
};

// p = (t_1, w_1, ..., t_n, w_n): wait t_i under H, then apply w_i ⊗ 1.
struct ControlProcedure {
  int dim_c = 0;
  int dim_s = 0;
  std::vector<ProcedureStep> steps;

  double total_time() const;
  void validate() const;  // t_i >= 0, w_i unitary with matching dim_c
};

struct EvaluatedProcedure {
  Matrix u;           // u_p = w_n e^{iHt_n} ... w_1 e^{iHt_1}
  double time = 0.0;  // t_p = sum t_i
};
EvaluatedProcedure evaluate_procedure(const ControlProcedure& p, const BipartiteHamiltonian& h);

// Finite controller subgroup acting irreducibly (elements modulo phase).
struct IrreducibleGroup {
  int dim = 0;
  std::vector<Matrix> elements;
};

// The dim^2 Weyl-Heisenberg operators X^a Z^b (cyclic shift and clock).
IrreducibleGroup weyl_group(int dim);

// Test hooks for the IrreducibleGroup invariants.
bool closed_up_to_phase(const IrreducibleGroup& g, double tol = 1e-9);
double schur_average_defect(const IrreducibleGroup& g, const Matrix& probe);

// sum_s (s ⊗ 1) H (s^dag ⊗ 1); zero for stripped Hamiltonians (Lemma 1).
Matrix group_average(const BipartiteHamiltonian& h, const IrreducibleGroup& s);

// Procedure realizing prod_{s != 1} s e^{iH eps} s^dag via telescoped
// controller unitaries; approximates e^{-iH eps} to O(eps^2) with
// implementation time (|S|-1) eps.
ControlProcedure inversion_sequence(const BipartiteHamiltonian& h, const IrreducibleGroup& s,
                                    double eps);

struct TrotterTerm {
  Matrix g;            // Hermitian effective Hamiltonian
  double coeff = 1.0;
};
struct TrotterResult {
  Matrix u;                    // (prod_k e^{i c_k G_k / m})^m
  Matrix target;               // e^{i sum_k c_k G_k}
  double error_bound = 0.0;    // (1/2m) sum_{j<k} |[c_j G_j, c_k G_k]|
  double achieved_error = 0.0; // phase-aligned spectral distance
};
TrotterResult trotter_procedure(const std::vector<TrotterTerm>& terms, int m);

// (e^{iA/m} e^{iB/m} e^{-iA/m} e^{-iB/m})^{m^2}; converges to e^{-[A,B]}.
Matrix commutator_procedure(const Matrix& a, const Matrix& b, int m);

}  // namespace qcif
