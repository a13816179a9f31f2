#include "qcif/subspace.hpp"

#include <cmath>

#include "qcif/operator_core.hpp"

namespace qcif {

OperatorSubspace::OperatorSubspace(int dim_matrix) : dim_(dim_matrix) {
  if (dim_matrix < 1)
    throw Error(Errc::precondition, "OperatorSubspace: dim_matrix must be >= 1");
  coords_.resize(Eigen::Index(dim_) * dim_, 0);
}

RealVector OperatorSubspace::to_coords(const Matrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_)
    throw Error(Errc::dimension_mismatch, "OperatorSubspace: matrix dimension mismatch");
  const double sqrt2 = std::sqrt(2.0);
  RealVector r(Eigen::Index(dim_) * dim_);
  Eigen::Index k = 0;
  for (int i = 0; i < dim_; ++i) r(k++) = x(i, i).real();
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      r(k++) = sqrt2 * x(i, j).real();
      r(k++) = sqrt2 * x(i, j).imag();
    }
  }
  return r;
}

Matrix OperatorSubspace::from_coords(const RealVector& r) const {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix x(dim_, dim_);
  Eigen::Index k = 0;
  for (int i = 0; i < dim_; ++i) x(i, i) = r(k++);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      Complex v(r(k) * inv_sqrt2, r(k + 1) * inv_sqrt2);
      k += 2;
      x(i, j) = v;
      x(j, i) = std::conj(v);
    }
  }
  return x;
}

double OperatorSubspace::project_out(RealVector& r) const {
  if (count_ > 0) {
    auto b = coords_.leftCols(count_);
    r.noalias() -= b * (b.transpose() * r);
    r.noalias() -= b * (b.transpose() * r);
  }
  return r.norm();
}

OperatorSubspace::ExtendResult OperatorSubspace::extend(const Matrix& x, double rel_tol) {
  require_hermitian(x, "OperatorSubspace::extend");
  RealVector r = to_coords(x);
  const double input_norm = r.norm();
  const double residual = project_out(r);
  if (input_norm <= 0.0 || residual <= rel_tol * input_norm)
    return {false, residual};
  r /= residual;
  if (coords_.cols() == count_) coords_.conservativeResize(Eigen::NoChange, 2 * count_ + 8);
  coords_.col(count_) = r;
  basis_.push_back(from_coords(r));
  ++count_;
  return {true, residual};
}

OperatorSubspace::Membership OperatorSubspace::member(const Matrix& x, double tol) const {
  RealVector r = to_coords(x);
  const double input_norm = r.norm();
  if (input_norm == 0.0) return {true, 0.0};
  const double residual = project_out(r) / input_norm;
  return {residual <= tol, residual};
}

double OperatorSubspace::orthonormality_defect() const {
  if (count_ == 0) return 0.0;
  auto b = coords_.leftCols(count_);
  RealMatrix g = b.transpose() * b;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff();
}

}  // namespace qcif
