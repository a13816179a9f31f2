#include "qcif/operator_core.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qcif {

bool is_hermitian(const Matrix& x, double tol) {
  if (x.rows() != x.cols()) return false;
  return (x - x.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Matrix d = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
  return d.norm() <= tol;
}

void require_hermitian(const Matrix& x, const char* where, double tol) {
  if (!is_hermitian(x, tol))
    throw Error(Errc::not_hermitian, std::string(where) + ": matrix is not Hermitian");
}

void require_unitary(const Matrix& u, const char* where, double tol) {
  if (!is_unitary(u, tol))
    throw Error(Errc::not_unitary, std::string(where) + ": matrix is not unitary");
}

void require_square(const Matrix& x, const char* where) {
  if (x.rows() != x.cols() || x.rows() < 1)
    throw Error(Errc::dimension_mismatch, std::string(where) + ": matrix is not square");
}

void require_same_dim(const Matrix& x, const Matrix& y, const char* where) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw Error(Errc::dimension_mismatch,
                std::string(where) + ": dimension mismatch (" + std::to_string(x.rows()) +
                    " vs " + std::to_string(y.rows()) + ")");
}

Complex hs_inner(const Matrix& x, const Matrix& y) {
  require_same_dim(x, y, "hs_inner");
  return (x.adjoint() * y).trace();
}

double hs_norm(const Matrix& x) { return x.norm(); }

Matrix traceless_part(const Matrix& x) {
  require_square(x, "traceless_part");
  Complex tr = x.trace();
  return x - (tr / static_cast<double>(x.rows())) * Matrix::Identity(x.rows(), x.cols());
}

Matrix tensor(const Matrix& x, const Matrix& y) {
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

Matrix expm_i(const Matrix& h, double t) {
  require_square(h, "expm");
  require_hermitian(h, "expm");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const auto& w = es.eigenvalues();
  Vector phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k)
    phases(k) = std::exp(Complex(0.0, w(k) * t));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix commutator_i(const Matrix& x, const Matrix& y) {
  return Complex(0, 1) * (x * y - y * x);
}

Matrix jordan_product(const Matrix& x, const Matrix& y) { return 0.5 * (x * y + y * x); }

Matrix partial_trace_system(const Matrix& m, int dim_c, int dim_s) {
  if (m.rows() != Eigen::Index(dim_c) * dim_s)
    throw Error(Errc::dimension_mismatch, "partial_trace_system: bad joint dimension");
  Matrix out = Matrix::Zero(dim_c, dim_c);
  for (int i = 0; i < dim_c; ++i)
    for (int j = 0; j < dim_c; ++j)
      for (int k = 0; k < dim_s; ++k)
        out(i, j) += m(i * dim_s + k, j * dim_s + k);
  return out;
}

Matrix partial_trace_controller(const Matrix& m, int dim_c, int dim_s) {
  if (m.rows() != Eigen::Index(dim_c) * dim_s)
    throw Error(Errc::dimension_mismatch, "partial_trace_controller: bad joint dimension");
  Matrix out = Matrix::Zero(dim_s, dim_s);
  for (int k = 0; k < dim_s; ++k)
    for (int l = 0; l < dim_s; ++l)
      for (int i = 0; i < dim_c; ++i)
        out(k, l) += m(i * dim_s + k, i * dim_s + l);
  return out;
}

std::vector<Matrix> traceless_hermitian_basis(int d) {
  if (d < 1) throw Error(Errc::precondition, "traceless_hermitian_basis: dim must be >= 1");
  std::vector<Matrix> out;
  out.reserve(d * d - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Matrix sym = Matrix::Zero(d, d);
      sym(i, j) = sym(j, i) = inv_sqrt2;
      out.push_back(sym);
      Matrix asym = Matrix::Zero(d, d);
      asym(i, j) = Complex(0, -inv_sqrt2);
      asym(j, i) = Complex(0, inv_sqrt2);
      out.push_back(asym);
    }
  }
  for (int l = 1; l < d; ++l) {
    Matrix diag = Matrix::Zero(d, d);
    double norm = std::sqrt(static_cast<double>(l) * (l + 1));
    for (int q = 0; q < l; ++q) diag(q, q) = 1.0 / norm;
    diag(l, l) = -static_cast<double>(l) / norm;
    out.push_back(diag);
  }
  return out;
}

std::vector<Matrix> hermitian_basis(int d) {
  auto out = traceless_hermitian_basis(d);
  out.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  return out;
}

std::vector<Matrix> pauli_matrices() {
  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  return {sx, sy, sz};
}

std::vector<Matrix> gell_mann_matrices() {
  std::vector<Matrix> l(8, Matrix::Zero(3, 3));
  l[0](0, 1) = l[0](1, 0) = 1;
  l[1](0, 1) = Complex(0, -1);
  l[1](1, 0) = Complex(0, 1);
  l[2](0, 0) = 1;
  l[2](1, 1) = -1;
  l[3](0, 2) = l[3](2, 0) = 1;
  l[4](0, 2) = Complex(0, -1);
  l[4](2, 0) = Complex(0, 1);
  l[5](1, 2) = l[5](2, 1) = 1;
  l[6](1, 2) = Complex(0, -1);
  l[6](2, 1) = Complex(0, 1);
  const double s3 = 1.0 / std::sqrt(3.0);
  l[7](0, 0) = l[7](1, 1) = s3;
  l[7](2, 2) = -2 * s3;
  return l;
}

std::vector<Matrix> spin_operators(int d) {
  if (d < 2) throw Error(Errc::precondition, "spin_operators: dim must be >= 2");
  const double j = (d - 1) / 2.0;
  Matrix jp = Matrix::Zero(d, d);  // raising operator in the m = j..-j basis
  for (int k = 0; k < d - 1; ++k) {
    double m = j - 1 - k;
    jp(k, k + 1) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  Matrix jm = jp.adjoint();
  Matrix jx = 0.5 * (jp + jm);
  Matrix jy = Complex(0, -0.5) * (jp - jm);
  Matrix jz = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) jz(k, k) = j - k;
  return {jx, jy, jz};
}

Matrix embed_controller(const Matrix& w, int dim_s) {
  return tensor(w, Matrix::Identity(dim_s, dim_s));
}

double spectral_norm(const Matrix& x) {
  Eigen::JacobiSVD<Matrix> svd(x);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double phase_aligned_distance(const Matrix& u, const Matrix& v) {
  require_same_dim(u, v, "phase_aligned_distance");
  Complex t = (v.adjoint() * u).trace();
  Complex c = std::abs(t) > 1e-300 ? t / std::abs(t) : Complex(1, 0);
  return spectral_norm(u - c * v);
}

}  // namespace qcif
