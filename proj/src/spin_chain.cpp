#include "qcif/spin_chain.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "qcif/closure.hpp"
#include "qcif/operator_core.hpp"

namespace qcif {

namespace {

// Embed an operator living on sites [first, first+span) into the full chain.
Matrix embed_block(const Matrix& op, const std::vector<int>& dims, std::size_t first,
                   std::size_t span) {
  int left = 1, right = 1;
  for (std::size_t j = 0; j < first; ++j) left *= dims[j];
  for (std::size_t j = first + span; j < dims.size(); ++j) right *= dims[j];
  Matrix out = tensor(Matrix::Identity(left, left), op);
  return tensor(out, Matrix::Identity(right, right));
}

}  // namespace

int ChainSpec::total_dim() const {
  int d = 1;
  for (int s : site_dims) d *= s;
  return d;
}

void ChainSpec::validate() const {
  if (site_dims.empty()) throw Error(Errc::precondition, "ChainSpec: no sites");
  for (int d : site_dims)
    if (d < 1) throw Error(Errc::precondition, "ChainSpec: site dimension must be >= 1");
  if (couplings.size() + 1 != site_dims.size())
    throw Error(Errc::precondition,
                "ChainSpec: need exactly one coupling list per nearest-neighbor bond");
  for (std::size_t j = 0; j < couplings.size(); ++j) {
    for (const auto& c : couplings[j]) {
      if (c.a.rows() != site_dims[j] || c.b.rows() != site_dims[j + 1])
        throw Error(Errc::dimension_mismatch, "ChainSpec: coupling term dimension mismatch");
      require_hermitian(c.a, "ChainSpec");
      require_hermitian(c.b, "ChainSpec");
      if (std::abs(c.a.trace()) > 1e-12 * std::max(1.0, c.a.norm()))
        throw Error(Errc::not_traceless, "ChainSpec: A-side coupling operator must be traceless");
    }
  }
}

Matrix build_chain_hamiltonian(const ChainSpec& spec, const RunConfig& cfg) {
  cfg.validate();
  spec.validate();
  const int total = spec.total_dim();
  if (total > cfg.dim_cap)
    throw Error(Errc::cap_exceeded, "build_chain_hamiltonian: total dimension " +
                                        std::to_string(total) + " exceeds cap " +
                                        std::to_string(cfg.dim_cap));
  Matrix h = Matrix::Zero(total, total);
  for (std::size_t j = 0; j < spec.couplings.size(); ++j)
    for (const auto& c : spec.couplings[j])
      h += embed_block(tensor(c.a, c.b), spec.site_dims, j, 2);
  return h;
}

bool Theorem2Report::all_pass() const {
  for (bool ok : site_dim_ok)
    if (!ok) return false;
  for (const auto& c : couplings)
    if (!(c.a_traceless && c.a_independent && c.b_generates_full)) return false;
  return true;
}

Theorem2Report verify_theorem2_hypotheses(const ChainSpec& spec, const RunConfig& cfg) {
  cfg.validate();
  spec.validate();
  Theorem2Report report;
  for (int d : spec.site_dims) report.site_dim_ok.push_back(d >= 3);

  for (std::size_t j = 0; j < spec.couplings.size(); ++j) {
    const auto& terms = spec.couplings[j];
    CouplingReport cr;
    cr.max_a_trace = 0.0;
    for (const auto& t : terms)
      cr.max_a_trace = std::max(cr.max_a_trace, std::abs(t.a.trace()));
    cr.a_traceless = cr.max_a_trace <= 1e-12;

    if (!terms.empty()) {
      RealMatrix gram(terms.size(), terms.size());
      for (std::size_t p = 0; p < terms.size(); ++p)
        for (std::size_t q = 0; q < terms.size(); ++q)
          gram(p, q) = hs_inner(terms[p].a, terms[q].a).real();
      Eigen::SelfAdjointEigenSolver<RealMatrix> es(gram);
      double lo = es.eigenvalues()(0), hi = es.eigenvalues()(es.eigenvalues().size() - 1);
      cr.gram_ratio = hi > 0 ? lo / hi : 0.0;
      cr.a_independent = lo > 1e-9 * hi;

      std::vector<Matrix> b_side;
      for (const auto& t : terms) b_side.push_back(t.b);
      OperatorSubspace b = star_closure(b_side, cfg);
      cr.b_closure_dim = b.size();
      int full = spec.site_dims[j + 1] * spec.site_dims[j + 1];
      cr.b_generates_full = cr.b_closure_dim == full;
    }
    report.couplings.push_back(cr);
  }
  return report;
}

CutResult check_cut(const ChainSpec& spec, int m, const RunConfig& cfg) {
  cfg.validate();
  spec.validate();
  const int n_sites = static_cast<int>(spec.site_dims.size());
  if (m < 1 || m > n_sites)
    throw Error(Errc::precondition, "check_cut: cut must lie in [1, number of sites]");
  const int total = spec.total_dim();
  if (total > cfg.dim_cap)
    throw Error(Errc::cap_exceeded,
                "check_cut: total dimension " + std::to_string(total) + " exceeds cap " +
                    std::to_string(cfg.dim_cap) + "; use a smaller chain or raise the cap");

  int controller_dim = 1;
  for (int j = 0; j < m; ++j) controller_dim *= spec.site_dims[j];

  std::vector<Matrix> generators;
  for (const auto& w : traceless_hermitian_basis(controller_dim))
    generators.push_back(tensor(w, Matrix::Identity(total / controller_dim,
                                                    total / controller_dim)));
  Matrix h = build_chain_hamiltonian(spec, cfg);
  if (h.norm() > 0) generators.push_back(h);

  ClosureReport closure = lie_closure(generators, cfg);
  CutResult out;
  out.closure_dim = closure.result.size();
  out.target_dim = total * total - 1;
  out.saturated = closure.saturated;
  out.controllable = out.closure_dim == out.target_dim;
  return out;
}

}  // namespace qcif
