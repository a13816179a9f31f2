#include "qcif/random.hpp"

#include <Eigen/QR>

#include "qcif/operator_core.hpp"

namespace qcif {

Matrix RandomGen::hermitian(int d) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(gaussian(), gaussian());
  return 0.5 * (g + g.adjoint()).eval();
}

Matrix RandomGen::traceless_hermitian(int d) { return traceless_part(hermitian(d)); }

Vector RandomGen::state(int d) {
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = Complex(gaussian(), gaussian());
  return v / v.norm();
}

Matrix RandomGen::unitary(int d) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(gaussian(), gaussian());
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    Complex rii = r(i, i);
    q.col(i) *= (std::abs(rii) > 0) ? rii / std::abs(rii) : Complex(1, 0);
  }
  return q;
}

BipartiteHamiltonian RandomGen::bipartite(int dim_c, int dim_s, int terms,
                                          const RunConfig& cfg) {
  Matrix full = Matrix::Zero(Eigen::Index(dim_c) * dim_s, Eigen::Index(dim_c) * dim_s);
  for (int t = 0; t < terms; ++t)
    full += tensor(traceless_hermitian(dim_c), traceless_hermitian(dim_s));
  return schmidt_decompose(full, dim_c, dim_s, cfg);
}

}  // namespace qcif
