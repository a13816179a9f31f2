#include "qcif/closure.hpp"

#include <cmath>

#include "qcif/operator_core.hpp"

namespace qcif {

namespace {

int check_generators(const std::vector<Matrix>& generators, bool need_traceless,
                     const char* where) {
  if (generators.empty())
    throw Error(Errc::precondition, std::string(where) + ": no generators");
  const int d = static_cast<int>(generators.front().rows());
  for (const auto& g : generators) {
    require_square(g, where);
    if (g.rows() != d)
      throw Error(Errc::dimension_mismatch, std::string(where) + ": mixed generator dimensions");
    require_hermitian(g, where);
    if (need_traceless) {
      double scale = std::max(1.0, g.norm());
      if (std::abs(g.trace()) > kTracelessTol * scale)
        throw Error(Errc::not_traceless, std::string(where) + ": generator is not traceless");
    }
  }
  return d;
}

// Shared sweep: wave-by-wave FIFO over newly accepted elements, each
// commutated (and optionally Jordan-multiplied) against the whole current
// basis. Deterministic; stops at target_dim or when a wave adds nothing.
ClosureReport sweep(OperatorSubspace space, bool with_jordan, int target_dim,
                    const RunConfig& cfg) {
  ClosureReport report{std::move(space), 0, false};
  auto& sp = report.result;
  std::vector<int> frontier(sp.size());
  for (int i = 0; i < sp.size(); ++i) frontier[i] = i;

  const int hard_cap = sp.dim_matrix() * sp.dim_matrix() + 1;
  while (!frontier.empty() && sp.size() < target_dim && report.generations < hard_cap) {
    ++report.generations;
    std::vector<int> next;
    for (int i : frontier) {
      if (sp.size() >= target_dim) break;
      for (int j = 0; j < sp.size(); ++j) {
        if (sp.extend(commutator_i(sp.basis(i), sp.basis(j)), cfg.rank_tol).accepted)
          next.push_back(sp.size() - 1);
        if (with_jordan &&
            sp.extend(jordan_product(sp.basis(i), sp.basis(j)), cfg.rank_tol).accepted)
          next.push_back(sp.size() - 1);
        if (sp.size() >= target_dim) break;
      }
    }
    frontier = std::move(next);
  }
  report.saturated = frontier.empty() || sp.size() >= target_dim;
  return report;
}

}  // namespace

ClosureReport lie_closure(const std::vector<Matrix>& generators, const RunConfig& cfg) {
  cfg.validate();
  const int d = check_generators(generators, /*need_traceless=*/true, "lie_closure");
  OperatorSubspace space(d);
  for (const auto& g : generators) space.extend(g, cfg.rank_tol);
  return sweep(std::move(space), /*with_jordan=*/false, d * d - 1, cfg);
}

ClosureReport star_closure_report(const std::vector<Matrix>& generators, const RunConfig& cfg) {
  cfg.validate();
  const int d = check_generators(generators, /*need_traceless=*/false, "star_closure");
  OperatorSubspace space(d);
  space.extend(Matrix::Identity(d, d), cfg.rank_tol);  // unital
  for (const auto& g : generators) space.extend(g, cfg.rank_tol);
  return sweep(std::move(space), /*with_jordan=*/true, d * d, cfg);
}

OperatorSubspace star_closure(const std::vector<Matrix>& generators, const RunConfig& cfg) {
  return star_closure_report(generators, cfg).result;
}

OperatorSubspace commutator_span(const OperatorSubspace& a, const OperatorSubspace& b,
                                 const RunConfig& cfg) {
  if (a.dim_matrix() != b.dim_matrix())
    throw Error(Errc::dimension_mismatch, "commutator_span: dimension mismatch");
  OperatorSubspace out(a.dim_matrix());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      out.extend(commutator_i(a.basis(i), b.basis(j)), cfg.rank_tol);
  return out;
}

OperatorSubspace::Membership member(const Matrix& x, const OperatorSubspace& space,
                                    const RunConfig& cfg) {
  return space.member(x, cfg.member_tol);
}

}  // namespace qcif
