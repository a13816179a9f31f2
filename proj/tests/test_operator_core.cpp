#include <doctest.h>

#include <cmath>

#include "qcif/operator_core.hpp"
#include "qcif/random.hpp"
#include "qcif/subspace.hpp"

using namespace qcif;

namespace {
const std::vector<Matrix> kPauli = pauli_matrices();
const Matrix kSx = kPauli[0], kSy = kPauli[1], kSz = kPauli[2];
const Matrix kId2 = Matrix::Identity(2, 2);
}  // namespace

TEST_CASE("hs_inner on Pauli matrices") {
  CHECK(hs_inner(kSx, kSx).real() == doctest::Approx(2.0));
  CHECK(std::abs(hs_inner(kSx, kSy)) == doctest::Approx(0.0));
  CHECK(hs_inner(Matrix::Identity(3, 3), Matrix::Identity(3, 3)).real() == doctest::Approx(3.0));
  CHECK_THROWS_AS(hs_inner(kSx, Matrix::Identity(3, 3)), Error);
}

TEST_CASE("hs_inner is the squared Frobenius norm on the diagonal") {
  RandomGen rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix x = rng.hermitian(3);
    double self = hs_inner(x, x).real();
    CHECK(self >= 0.0);
    CHECK(self == doctest::Approx(x.norm() * x.norm()));
  }
}

TEST_CASE("traceless_part") {
  CHECK(traceless_part(kId2).norm() == doctest::Approx(0.0));
  CHECK((traceless_part(kSz) - kSz).norm() == doctest::Approx(0.0));
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 1, 2, 3;
  Matrix expected = Matrix::Zero(3, 3);
  expected.diagonal() << -1, 0, 1;
  CHECK((traceless_part(d) - expected).norm() == doctest::Approx(0.0));
}

TEST_CASE("tensor products") {
  Matrix xsx = tensor(kId2, kSx);
  CHECK((xsx.block(0, 0, 2, 2) - kSx).norm() == doctest::Approx(0.0));
  CHECK((xsx.block(2, 2, 2, 2) - kSx).norm() == doctest::Approx(0.0));
  CHECK(xsx.block(0, 2, 2, 2).norm() == doctest::Approx(0.0));

  Matrix zs1 = tensor(kSz, kId2);
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << 1, 1, -1, -1;
  CHECK((zs1 - expected).norm() == doctest::Approx(0.0));

  Matrix xx = tensor(kSx, kSx);
  for (int i = 0; i < 4; ++i) CHECK(xx(i, 3 - i) == Complex(1, 0));
}

TEST_CASE("tensor is bilinear and multiplicative under the trace") {
  RandomGen rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    Matrix a = rng.hermitian(2), b = rng.hermitian(3), c = rng.hermitian(2);
    CHECK((tensor(a + c, b) - tensor(a, b) - tensor(c, b)).norm() ==
          doctest::Approx(0.0).epsilon(1e-12));
    Complex lhs = tensor(a, b).trace();
    Complex rhs = a.trace() * b.trace();
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("expm basics") {
  CHECK((expm_i(Matrix::Zero(2, 2), 1.7) - kId2).norm() == doctest::Approx(0.0));
  CHECK((expm_i(kSz, M_PI) + kId2).norm() == doctest::Approx(0.0).epsilon(1e-12));
  Matrix half = expm_i(kSx, M_PI / 2);
  CHECK((half - Complex(0, 1) * kSx).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("expm yields unitaries and inverts cleanly") {
  RandomGen rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    Matrix h = rng.hermitian(4);
    double t = rng.gaussian();
    Matrix u = expm_i(h, t);
    CHECK(is_unitary(u, 1e-10));
    CHECK((u * expm_i(h, -t) - Matrix::Identity(4, 4)).norm() <= 1e-10);
  }
}

TEST_CASE("orthonormal Hermitian bases") {
  for (int d : {2, 3, 4}) {
    auto basis = traceless_hermitian_basis(d);
    CHECK(static_cast<int>(basis.size()) == d * d - 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(std::abs(basis[i].trace()) <= 1e-14);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs(hs_inner(basis[i], basis[j]).real() - expected) <= 1e-12);
      }
    }
  }
}

TEST_CASE("partial traces") {
  RandomGen rng(14);
  Matrix a = rng.hermitian(3), b = rng.hermitian(2);
  Matrix joint = tensor(a, b);
  CHECK((partial_trace_system(joint, 3, 2) - b.trace() * a).norm() <= 1e-12);
  CHECK((partial_trace_controller(joint, 3, 2) - a.trace() * b).norm() <= 1e-12);
}

TEST_CASE("spin operators close the angular momentum algebra") {
  for (int d : {2, 3, 4}) {
    auto j = spin_operators(d);
    CHECK((commutator_i(j[0], j[1]) + j[2]).norm() <= 1e-12);  // i[Jx,Jy] = -Jz
    CHECK(std::abs(j[0].trace()) <= 1e-14);
    CHECK(std::abs(j[1].trace()) <= 1e-14);
  }
}

TEST_CASE("subspace extension: worked examples") {
  OperatorSubspace s(2);
  CHECK(s.extend(kSx).accepted);

  auto again = s.extend(kSx);
  CHECK_FALSE(again.accepted);
  CHECK(again.residual_norm <= 1e-12);

  OperatorSubspace s2(2);
  s2.extend(kSx);
  auto ortho = s2.extend(kSy);
  CHECK(ortho.accepted);
  CHECK(ortho.residual_norm == doctest::Approx(std::sqrt(2.0)));

  OperatorSubspace s3(2);
  s3.extend(kSx);
  auto mixed = s3.extend(kSx + kSz);  // Gram-Schmidt by hand: residual is sz
  CHECK(mixed.accepted);
  CHECK(mixed.residual_norm == doctest::Approx(std::sqrt(2.0)));
  CHECK((s3.basis(1) - kSz / std::sqrt(2.0)).norm() <= 1e-12);
}

TEST_CASE("subspace extension is idempotent on the span") {
  RandomGen rng(15);
  OperatorSubspace s(3);
  for (int k = 0; k < 4; ++k) s.extend(rng.hermitian(3));
  const int dim = s.size();
  for (int rep = 0; rep < 10; ++rep) {
    Matrix combo = Matrix::Zero(3, 3);
    for (int k = 0; k < dim; ++k) combo += rng.gaussian() * s.basis(k);
    CHECK_FALSE(s.extend(combo).accepted);
  }
  CHECK(s.size() == dim);
  CHECK(s.orthonormality_defect() <= 1e-9);
}

TEST_CASE("membership residuals") {
  OperatorSubspace su2(2);
  for (const auto& p : kPauli) su2.extend(p);
  auto in = su2.member(kSz);
  CHECK(in.member);
  CHECK(in.residual <= 1e-12);

  OperatorSubspace only_x(2);
  only_x.extend(kSx);
  auto out = only_x.member(kSz);
  CHECK_FALSE(out.member);
  CHECK(out.residual == doctest::Approx(1.0));
  auto half = only_x.member(kSx + kSz);
  CHECK_FALSE(half.member);
  CHECK(half.residual == doctest::Approx(1.0 / std::sqrt(2.0)));

  CHECK(only_x.member(Matrix::Zero(2, 2)).member);  // zero belongs everywhere
}

TEST_CASE("orthonormality holds after many random extensions") {
  RandomGen rng(16);
  OperatorSubspace s(4);
  while (s.size() < 16) s.extend(rng.hermitian(4));
  CHECK(s.size() == 16);
  CHECK(s.orthonormality_defect() <= 1e-9);
}

TEST_CASE("phase alignment ignores global phases") {
  RandomGen rng(17);
  Matrix u = rng.unitary(3);
  Matrix v = std::exp(Complex(0, 0.7)) * u;
  CHECK(phase_aligned_distance(u, v) <= 1e-12);
  CHECK(phase_aligned_distance(u, rng.unitary(3)) > 0.1);
}
