#pragma once

#include <optional>
#include <string>

#include "qcif/closure.hpp"
#include "qcif/schmidt.hpp"

namespace qcif {

// Interface algebra of (H_c, H_s, H): computed brute force (Lie closure of
// 𝒲⊗1 and H) and structurally (𝒲⊗ℬ + 1⊗ℒ, valid for dim_c >= 3).
struct InterfaceAnalysis {
  int dim_c = 0;
  int dim_s = 0;
  OperatorSubspace algebra_b;  // ℬ on H_s, unital
  OperatorSubspace space_l;    // ℒ = span i[ℬ,ℬ] on H_s
  std::optional<OperatorSubspace> structural;
  std::optional<OperatorSubspace> brute;
  std::optional<bool> agree;      // set when both sides were computed
  double max_mutual_residual = 0.0;
  int naive_structural_dim = 0;   // (dim_c^2-1)·dim ℬ + dim ℒ, reported even when refused
  bool theorem1_applicable = false;
  std::string note;               // refusal / skip diagnostics
  bool universal_control = false;  // dim ℬ == dim_s^2
};

// Lie closure of { W_i ⊗ 1 } ∪ { H }. Requires stripped locals and joint
// dimension within cfg.dim_cap.
OperatorSubspace interface_bruteforce(const BipartiteHamiltonian& h, const RunConfig& cfg = {});

// Theorem-1 construction; throws for dim_c < 3. Also runs the brute-force
// closure for comparison when the joint dimension is within cfg.dim_cap.
InterfaceAnalysis interface_structural(const BipartiteHamiltonian& h, const RunConfig& cfg = {});

// Tolerant analysis for the CLI: computes ℬ/ℒ always, records the Theorem-1
// refusal at dim_c < 3 instead of throwing, and obeys force_brute above the cap.
InterfaceAnalysis analyze_interface(const BipartiteHamiltonian& h, const RunConfig& cfg = {},
                                    bool force_brute = false);

// True iff the B_j generate the full algebra of linear maps on H_s.
bool check_universal_control(const BipartiteHamiltonian& h, const RunConfig& cfg = {});

struct Implementability {
  bool implementable = false;
  double residual = 0.0;
};
// Theorem 3: membership of the observable in unital ℬ decides both
// implementability of exp(iAs) and CQND-measurability.
Implementability check_implementable(const Matrix& observable, const BipartiteHamiltonian& h,
                                     const RunConfig& cfg = {});

}  // namespace qcif
