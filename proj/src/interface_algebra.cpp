#include "qcif/interface_algebra.hpp"

#include <algorithm>

#include "qcif/operator_core.hpp"

namespace qcif {

namespace {

void require_stripped(const BipartiteHamiltonian& h, const char* where) {
  if (!h.locals_stripped(1e-10))
    throw Error(Errc::precondition,
                std::string(where) + ": Hamiltonian has local terms; run strip_locals first");
}

std::vector<Matrix> b_side_generators(const BipartiteHamiltonian& h) {
  std::vector<Matrix> out;
  out.reserve(h.terms.size());
  for (const auto& t : h.terms) out.push_back(t.b);
  if (out.empty()) out.push_back(Matrix::Zero(h.dim_s, h.dim_s));
  return out;
}

}  // namespace

OperatorSubspace interface_bruteforce(const BipartiteHamiltonian& h, const RunConfig& cfg) {
  cfg.validate();
  require_stripped(h, "interface_bruteforce");
  if (h.joint_dim() > cfg.dim_cap)
    throw Error(Errc::cap_exceeded, "interface_bruteforce: joint dimension " +
                                        std::to_string(h.joint_dim()) + " exceeds cap " +
                                        std::to_string(cfg.dim_cap));
  std::vector<Matrix> generators;
  for (const auto& w : traceless_hermitian_basis(h.dim_c))
    generators.push_back(embed_controller(w, h.dim_s));
  generators.push_back(h.full);
  return lie_closure(generators, cfg).result;
}

InterfaceAnalysis interface_structural(const BipartiteHamiltonian& h, const RunConfig& cfg) {
  if (h.dim_c < 3)
    throw Error(Errc::precondition,
                "interface_structural: Theorem 1 requires dim(H_c) >= 3 "
                "(the assumption can not be dropped); got dim_c = " +
                    std::to_string(h.dim_c));
  return analyze_interface(h, cfg, /*force_brute=*/false);
}

InterfaceAnalysis analyze_interface(const BipartiteHamiltonian& h, const RunConfig& cfg,
                                    bool force_brute) {
  cfg.validate();
  require_stripped(h, "analyze_interface");

  InterfaceAnalysis out{h.dim_c, h.dim_s, star_closure(b_side_generators(h), cfg),
                        OperatorSubspace(h.dim_s)};
  out.space_l = commutator_span(out.algebra_b, out.algebra_b, cfg);
  out.naive_structural_dim =
      (h.dim_c * h.dim_c - 1) * out.algebra_b.size() + out.space_l.size();
  out.universal_control = out.algebra_b.size() == h.dim_s * h.dim_s;

  out.theorem1_applicable = h.dim_c >= 3;
  if (out.theorem1_applicable) {
    OperatorSubspace structural(h.joint_dim());
    for (const auto& w : traceless_hermitian_basis(h.dim_c))
      for (int k = 0; k < out.algebra_b.size(); ++k)
        structural.extend(tensor(w, out.algebra_b.basis(k)), cfg.rank_tol);
    Matrix id_c = Matrix::Identity(h.dim_c, h.dim_c);
    for (int k = 0; k < out.space_l.size(); ++k)
      structural.extend(tensor(id_c, out.space_l.basis(k)), cfg.rank_tol);
    out.structural = std::move(structural);
  } else {
    out.note = "Theorem 1 inapplicable: dim_c = " + std::to_string(h.dim_c) +
               " (requires dim_c >= 3); structural formula not applied";
  }

  const bool within_cap = h.joint_dim() <= cfg.dim_cap;
  if (within_cap || force_brute) {
    RunConfig brute_cfg = cfg;
    if (force_brute) brute_cfg.dim_cap = std::max(cfg.dim_cap, h.joint_dim());
    out.brute = interface_bruteforce(h, brute_cfg);
  } else if (out.note.empty()) {
    out.note = "Theorem 1 asserted, not verified: joint dimension above brute-force cap";
  }

  if (out.brute && out.structural) {
    double worst = 0.0;
    for (int k = 0; k < out.structural->size(); ++k)
      worst = std::max(worst, out.brute->member(out.structural->basis(k)).residual);
    for (int k = 0; k < out.brute->size(); ++k)
      worst = std::max(worst, out.structural->member(out.brute->basis(k)).residual);
    out.max_mutual_residual = worst;
    out.agree = out.brute->size() == out.structural->size() && worst <= cfg.member_tol;
  }
  return out;
}

bool check_universal_control(const BipartiteHamiltonian& h, const RunConfig& cfg) {
  cfg.validate();
  require_stripped(h, "check_universal_control");
  OperatorSubspace b = star_closure(b_side_generators(h), cfg);
  return b.size() == h.dim_s * h.dim_s;
}

Implementability check_implementable(const Matrix& observable, const BipartiteHamiltonian& h,
                                     const RunConfig& cfg) {
  cfg.validate();
  require_square(observable, "check_implementable");
  if (observable.rows() != h.dim_s)
    throw Error(Errc::dimension_mismatch,
                "check_implementable: observable must live on H_s (dim " +
                    std::to_string(h.dim_s) + ")");
  require_hermitian(observable, "check_implementable");
  require_stripped(h, "check_implementable");
  OperatorSubspace b = star_closure(b_side_generators(h), cfg);
  auto verdict = b.member(observable, cfg.member_tol);
  return {verdict.member, verdict.residual};
}

}  // namespace qcif
