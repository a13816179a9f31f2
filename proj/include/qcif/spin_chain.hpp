#pragma once

#include <vector>

#include "qcif/types.hpp"

namespace qcif {

struct ChainCoupling {
  Matrix a;  // traceless Hermitian on site j
  Matrix b;  // Hermitian on site j+1
};

// Nearest-neighbor chain: couplings[j] couples sites j and j+1.
struct ChainSpec {
  std::vector<int> site_dims;
  std::vector<std::vector<ChainCoupling>> couplings;

  int total_dim() const;
  void validate() const;
};

// sum_j sum_k 1 ⊗ ... ⊗ A_k^{(j)} ⊗ B_k^{(j+1)} ⊗ ... ⊗ 1.
Matrix build_chain_hamiltonian(const ChainSpec& spec, const RunConfig& cfg = {});

struct CouplingReport {
  bool a_traceless = false;
  bool a_independent = false;    // Gram min eigenvalue > 1e-9 * max
  bool b_generates_full = false; // star closure of the B side reaches site_dim^2
  int b_closure_dim = 0;
  double max_a_trace = 0.0;
  double gram_ratio = 0.0;
};

struct Theorem2Report {
  std::vector<bool> site_dim_ok;  // dim >= 3 per site
  std::vector<CouplingReport> couplings;
  bool all_pass() const;
};

Theorem2Report verify_theorem2_hypotheses(const ChainSpec& spec, const RunConfig& cfg = {});

struct CutResult {
  bool controllable = false;
  int closure_dim = 0;
  int target_dim = 0;  // (prod site_dims)^2 - 1
  bool saturated = false;
};

// Lie closure of the traceless operators on the first m sites together with
// the chain Hamiltonian; controllable iff it reaches the full traceless
// algebra of the whole chain.
CutResult check_cut(const ChainSpec& spec, int m, const RunConfig& cfg = {});

}  // namespace qcif
