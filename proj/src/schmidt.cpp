#include "qcif/schmidt.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "qcif/operator_core.hpp"

namespace qcif {

namespace {

// Flip sign so the largest-magnitude entry has positive real part (imaginary
// part breaks ties); fixes the SVD sign gauge deterministically.
void fix_sign(Matrix& a, Matrix& b) {
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (std::abs(a(i, j)) > best) {
        best = std::abs(a(i, j));
        bi = i;
        bj = j;
      }
  Complex v = a(bi, bj);
  bool flip = v.real() < 0.0 || (std::abs(v.real()) < 1e-14 * best && v.imag() < 0.0);
  if (flip) {
    a = -a;
    b = -b;
  }
}

}  // namespace

bool BipartiteHamiltonian::locals_stripped(double tol) const {
  double scale = std::max(1.0, full.norm());
  return local_c.norm() <= tol * scale && local_s.norm() <= tol * scale &&
         std::abs(scalar) <= tol * scale;
}

BipartiteHamiltonian schmidt_decompose(const Matrix& full, int dim_c, int dim_s,
                                       const RunConfig& cfg) {
  cfg.validate();
  if (dim_c < 1 || dim_s < 1 || full.rows() != Eigen::Index(dim_c) * dim_s)
    throw Error(Errc::dimension_mismatch, "schmidt_decompose: full.dim must equal dim_c*dim_s");
  require_square(full, "schmidt_decompose");
  require_hermitian(full, "schmidt_decompose");

  BipartiteHamiltonian h;
  h.dim_c = dim_c;
  h.dim_s = dim_s;
  h.full = full;

  const int joint = dim_c * dim_s;
  h.scalar = full.trace().real() / joint;
  h.local_c = traceless_part(partial_trace_system(full, dim_c, dim_s) / dim_s);
  h.local_s = traceless_part(partial_trace_controller(full, dim_c, dim_s) / dim_c);

  Matrix interaction = full - tensor(h.local_c, Matrix::Identity(dim_s, dim_s)) -
                       tensor(Matrix::Identity(dim_c, dim_c), h.local_s) -
                       h.scalar * Matrix::Identity(joint, joint);

  // Realign over orthonormal traceless local bases; SVD of the resulting real
  // matrix yields the canonical interaction terms.
  auto basis_c = traceless_hermitian_basis(dim_c);
  auto basis_s = traceless_hermitian_basis(dim_s);
  RealMatrix realigned(basis_c.size(), basis_s.size());
  for (std::size_t a = 0; a < basis_c.size(); ++a)
    for (std::size_t b = 0; b < basis_s.size(); ++b)
      realigned(a, b) = hs_inner(tensor(basis_c[a], basis_s[b]), interaction).real();

  Eigen::JacobiSVD<RealMatrix> svd(realigned, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double sv_max = sv.size() ? sv(0) : 0.0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= 1e-10 * sv_max || sv(k) <= 0.0) break;
    double root = std::sqrt(sv(k));
    Matrix a = Matrix::Zero(dim_c, dim_c);
    for (std::size_t q = 0; q < basis_c.size(); ++q) a += svd.matrixU()(q, k) * basis_c[q];
    Matrix b = Matrix::Zero(dim_s, dim_s);
    for (std::size_t q = 0; q < basis_s.size(); ++q) b += svd.matrixV()(q, k) * basis_s[q];
    a *= root;
    b *= root;
    fix_sign(a, b);
    h.terms.push_back({a, b});
    h.singular_values.push_back(sv(k));
  }
  return h;
}

Matrix rebuild_full(const BipartiteHamiltonian& h) {
  const int joint = h.joint_dim();
  Matrix full = h.scalar * Matrix::Identity(joint, joint);
  if (h.local_c.size()) full += tensor(h.local_c, Matrix::Identity(h.dim_s, h.dim_s));
  if (h.local_s.size()) full += tensor(Matrix::Identity(h.dim_c, h.dim_c), h.local_s);
  for (const auto& t : h.terms) full += tensor(t.a, t.b);
  return full;
}

BipartiteHamiltonian strip_locals(const BipartiteHamiltonian& h) {
  BipartiteHamiltonian out = h;
  out.local_c = Matrix::Zero(h.dim_c, h.dim_c);
  out.local_s = Matrix::Zero(h.dim_s, h.dim_s);
  out.scalar = 0.0;
  out.full = rebuild_full(out);
  return out;
}

}  // namespace qcif
