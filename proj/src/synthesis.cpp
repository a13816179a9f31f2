#include "qcif/synthesis.hpp"

#include <cmath>

#include "qcif/operator_core.hpp"

namespace qcif {

namespace {

Matrix matrix_power(Matrix base, long exponent) {
  Matrix out = Matrix::Identity(base.rows(), base.cols());
  while (exponent > 0) {
    if (exponent & 1) out = out * base;
    base = base * base;
    exponent >>= 1;
  }
  return out;
}

}  // namespace

double ControlProcedure::total_time() const {
  double t = 0.0;
  for (const auto& s : steps) t += s.wait;
  return t;
}

void ControlProcedure::validate() const {
  for (const auto& s : steps) {
    if (s.wait < 0.0)
      throw Error(Errc::precondition, "ControlProcedure: negative wait time");
    if (s.w.rows() != dim_c)
      throw Error(Errc::dimension_mismatch, "ControlProcedure: controller unitary dim mismatch");
    require_unitary(s.w, "ControlProcedure");
  }
}

EvaluatedProcedure evaluate_procedure(const ControlProcedure& p, const BipartiteHamiltonian& h) {
  if (p.dim_c != h.dim_c || p.dim_s != h.dim_s)
    throw Error(Errc::dimension_mismatch, "evaluate_procedure: procedure/Hamiltonian dims differ");
  p.validate();
  const int joint = h.joint_dim();
  Matrix u = Matrix::Identity(joint, joint);
  for (const auto& step : p.steps) {
    if (step.wait > 0.0) u = expm_i(h.full, step.wait) * u;
    u = embed_controller(step.w, h.dim_s) * u;
  }
  return {u, p.total_time()};
}

IrreducibleGroup weyl_group(int dim) {
  if (dim < 2) throw Error(Errc::precondition, "weyl_group: dim must be >= 2");
  Matrix shift = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) shift((k + 1) % dim, k) = 1.0;
  Matrix clock = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k)
    clock(k, k) = std::exp(Complex(0.0, 2.0 * M_PI * k / dim));
  IrreducibleGroup g{dim, {}};
  g.elements.reserve(dim * dim);
  Matrix xa = Matrix::Identity(dim, dim);
  for (int a = 0; a < dim; ++a) {
    Matrix el = xa;
    for (int b = 0; b < dim; ++b) {
      g.elements.push_back(el);
      el = el * clock;
    }
    xa = shift * xa;
  }
  return g;
}

bool closed_up_to_phase(const IrreducibleGroup& g, double tol) {
  for (const auto& x : g.elements) {
    for (const auto& y : g.elements) {
      Matrix p = x * y;
      bool found = false;
      for (const auto& z : g.elements) {
        Complex overlap = hs_inner(z, p) / static_cast<double>(g.dim);
        if (std::abs(std::abs(overlap) - 1.0) < tol && (p - overlap * z).norm() < tol * g.dim) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

double schur_average_defect(const IrreducibleGroup& g, const Matrix& probe) {
  Matrix avg = Matrix::Zero(g.dim, g.dim);
  for (const auto& s : g.elements) avg += s * probe * s.adjoint();
  avg /= static_cast<double>(g.elements.size());
  Matrix expected = (probe.trace() / static_cast<double>(g.dim)) * Matrix::Identity(g.dim, g.dim);
  return (avg - expected).norm();
}

Matrix group_average(const BipartiteHamiltonian& h, const IrreducibleGroup& s) {
  if (s.dim != h.dim_c)
    throw Error(Errc::dimension_mismatch, "group_average: group dim must equal dim_c");
  Matrix out = Matrix::Zero(h.joint_dim(), h.joint_dim());
  for (const auto& el : s.elements) {
    Matrix e = embed_controller(el, h.dim_s);
    out += e * h.full * e.adjoint();
  }
  return out;
}

ControlProcedure inversion_sequence(const BipartiteHamiltonian& h, const IrreducibleGroup& s,
                                    double eps) {
  if (s.dim != h.dim_c)
    throw Error(Errc::dimension_mismatch, "inversion_sequence: group dim must equal dim_c");
  if (eps <= 0.0) throw Error(Errc::precondition, "inversion_sequence: eps must be positive");
  if (!h.locals_stripped(1e-10))
    throw Error(Errc::precondition,
                "inversion_sequence: Hamiltonian has local terms; run strip_locals first");
  // Weyl order puts the identity first; conjugate by the remaining |S|-1.
  std::vector<Matrix> conj(s.elements.begin() + 1, s.elements.end());
  ControlProcedure p{h.dim_c, h.dim_s, {}};
  p.steps.push_back({0.0, conj.front().adjoint()});
  for (std::size_t k = 0; k + 1 < conj.size(); ++k)
    p.steps.push_back({eps, conj[k + 1].adjoint() * conj[k]});
  p.steps.push_back({eps, conj.back()});
  return p;
}

TrotterResult trotter_procedure(const std::vector<TrotterTerm>& terms, int m) {
  if (terms.empty()) throw Error(Errc::precondition, "trotter_procedure: no terms");
  if (m < 1) throw Error(Errc::precondition, "trotter_procedure: m must be >= 1");
  const Eigen::Index d = terms.front().g.rows();
  Matrix total = Matrix::Zero(d, d);
  Matrix step = Matrix::Identity(d, d);
  for (const auto& t : terms) {
    require_same_dim(t.g, terms.front().g, "trotter_procedure");
    require_hermitian(t.g, "trotter_procedure");
    total += t.coeff * t.g;
    step = step * expm_i(t.g, t.coeff / m);
  }
  TrotterResult out;
  out.u = matrix_power(step, m);
  out.target = expm_i(total, 1.0);
  double comm_sum = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      comm_sum += spectral_norm(commutator_i(terms[i].coeff * terms[i].g,
                                             terms[j].coeff * terms[j].g));
  out.error_bound = comm_sum / (2.0 * m);
  out.achieved_error = phase_aligned_distance(out.u, out.target);
  return out;
}

Matrix commutator_procedure(const Matrix& a, const Matrix& b, int m) {
  require_same_dim(a, b, "commutator_procedure");
  require_hermitian(a, "commutator_procedure");
  require_hermitian(b, "commutator_procedure");
  if (m < 1) throw Error(Errc::precondition, "commutator_procedure: m must be >= 1");
  Matrix step = expm_i(a, 1.0 / m) * expm_i(b, 1.0 / m) * expm_i(a, -1.0 / m) *
                expm_i(b, -1.0 / m);
  return matrix_power(step, static_cast<long>(m) * m);
}

}  // namespace qcif
