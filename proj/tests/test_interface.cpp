#include <doctest.h>

#include "oracles.hpp"
#include "qcif/interface_algebra.hpp"
#include "qcif/operator_core.hpp"
#include "qcif/random.hpp"

using namespace qcif;

namespace {

const std::vector<Matrix> kPauli = pauli_matrices();
const std::vector<Matrix> kGm = gell_mann_matrices();

BipartiteHamiltonian xy_model() {
  Matrix h = tensor(kPauli[0], kPauli[0]) + tensor(kPauli[1], kPauli[1]);
  return schmidt_decompose(h, 2, 2);
}

// interaction with prescribed B-side factors and independent random A sides
BipartiteHamiltonian coupled(RandomGen& rng, int dim_c, const std::vector<Matrix>& b_side) {
  const int dim_s = static_cast<int>(b_side.front().rows());
  Matrix h = Matrix::Zero(dim_c * dim_s, dim_c * dim_s);
  for (const auto& b : b_side)
    h += tensor(rng.traceless_hermitian(dim_c), traceless_part(b));
  return schmidt_decompose(h, dim_c, dim_s);
}

}  // namespace

TEST_CASE("brute force: xy model has dimension 10") {
  CHECK(interface_bruteforce(xy_model()).size() == 10);
}

TEST_CASE("brute force: H = 0 leaves just the controller algebra") {
  BipartiteHamiltonian h = schmidt_decompose(Matrix::Zero(4, 4), 2, 2);
  CHECK(interface_bruteforce(h).size() == 3);
}

TEST_CASE("brute force: full B-side coupling on 3x2 reaches su(6)") {
  RandomGen rng(41);
  BipartiteHamiltonian h = coupled(rng, 3, {kPauli[0], kPauli[2]});
  REQUIRE(test::word_span_dim({kPauli[0], kPauli[2]}) == 4);
  OperatorSubspace brute = interface_bruteforce(h);
  CHECK(brute.size() == 35);  // structural count 8*4 + 3
}

TEST_CASE("brute force requires stripped locals and respects the cap") {
  Matrix mixed = tensor(kPauli[2], Matrix::Identity(2, 2)) + tensor(kPauli[0], kPauli[0]);
  BipartiteHamiltonian h = schmidt_decompose(mixed, 2, 2);
  CHECK_THROWS_WITH_AS(interface_bruteforce(h),
                       doctest::Contains("strip_locals"), Error);

  RandomGen rng(42);
  BipartiteHamiltonian big = rng.bipartite(3, 2, 2);
  RunConfig tiny;
  tiny.dim_cap = 4;
  CHECK_THROWS_AS(interface_bruteforce(big, tiny), Error);
}

TEST_CASE("structural analysis on a full-rank 3x3 coupling") {
  RandomGen rng(43);
  BipartiteHamiltonian h = rng.bipartite(3, 3, 3);
  InterfaceAnalysis a = interface_structural(h);
  REQUIRE(a.structural.has_value());
  CHECK(a.algebra_b.size() == 9);
  CHECK(a.space_l.size() == 8);
  CHECK(a.structural->size() == 80);  // 8*9 + 8 = dim su(9)
  CHECK(a.agree.value_or(false));
}

TEST_CASE("structural analysis of a single sigma-like term") {
  RandomGen rng(44);
  BipartiteHamiltonian h = coupled(rng, 3, {kPauli[2]});
  InterfaceAnalysis a = interface_structural(h);
  CHECK(a.algebra_b.size() == 2);  // span{1, sz}
  CHECK(a.space_l.size() == 0);
  REQUIRE(a.structural.has_value());
  CHECK(a.structural->size() == 16);  // 8*2
  CHECK(a.agree.value_or(false));
}

TEST_CASE("structural formula is refused below dim_c = 3") {
  CHECK_THROWS_WITH_AS(interface_structural(xy_model()),
                       doctest::Contains("can not be dropped"), Error);
  InterfaceAnalysis a = analyze_interface(xy_model());
  CHECK_FALSE(a.structural.has_value());
  CHECK_FALSE(a.theorem1_applicable);
  REQUIRE(a.brute.has_value());
  CHECK(a.brute->size() == 10);
  CHECK(a.naive_structural_dim == 15);
}

TEST_CASE("structural basis splits into a direct sum") {
  RandomGen rng(45);
  BipartiteHamiltonian h = rng.bipartite(3, 2, 2);
  InterfaceAnalysis a = interface_structural(h);
  REQUIRE(a.structural.has_value());
  CHECK(a.structural->size() ==
        (h.dim_c * h.dim_c - 1) * a.algebra_b.size() + a.space_l.size());
  // the W ⊗ B block has vanishing controller partial trace
  for (const auto& w : traceless_hermitian_basis(3))
    for (int k = 0; k < a.algebra_b.size(); ++k)
      CHECK(partial_trace_controller(tensor(w, a.algebra_b.basis(k)), 3, 2).norm() <= 1e-10);
}

TEST_CASE("ancilla extension leaves B and L unchanged") {
  RandomGen rng(46);
  BipartiteHamiltonian h = rng.bipartite(3, 2, 2);
  InterfaceAnalysis base = analyze_interface(h);

  Matrix extended = tensor(Matrix::Identity(2, 2), h.full);  // ancilla ⊗ controller, system last
  BipartiteHamiltonian wide = schmidt_decompose(extended, 6, 2);
  InterfaceAnalysis lift = analyze_interface(wide);

  CHECK(lift.algebra_b.size() == base.algebra_b.size());
  CHECK(lift.space_l.size() == base.space_l.size());
  for (int k = 0; k < base.algebra_b.size(); ++k)
    CHECK(lift.algebra_b.member(base.algebra_b.basis(k)).residual <= 1e-8);
  for (int k = 0; k < base.space_l.size(); ++k)
    CHECK(lift.space_l.member(base.space_l.basis(k)).residual <= 1e-8);
}

TEST_CASE("controller conjugation covariance of the brute-force algebra") {
  RandomGen rng(47);
  BipartiteHamiltonian h = rng.bipartite(3, 2, 2);
  OperatorSubspace brute = interface_bruteforce(h);

  Matrix w = rng.unitary(3);
  Matrix wj = embed_controller(w, 2);
  BipartiteHamiltonian rotated = schmidt_decompose(wj * h.full * wj.adjoint(), 3, 2);
  OperatorSubspace rotated_brute = interface_bruteforce(rotated);

  CHECK(rotated_brute.size() == brute.size());
  for (int k = 0; k < brute.size(); ++k) {
    Matrix conj = wj * brute.basis(k) * wj.adjoint();
    CHECK(rotated_brute.member(conj).residual <= 1e-8);
  }
}

TEST_CASE("universal control predicate") {
  RandomGen rng(48);
  CHECK(check_universal_control(coupled(rng, 3, {kPauli[0], kPauli[2]})));
  CHECK_FALSE(check_universal_control(coupled(rng, 3, {kPauli[2]})));
  // l1,l4 generate the full 3x3 algebra; l1,l2 stay inside a 5-dim block algebra
  CHECK(check_universal_control(coupled(rng, 3, {kGm[0], kGm[3]})));
  CHECK_FALSE(check_universal_control(coupled(rng, 3, {kGm[0], kGm[1]})));
}

TEST_CASE("implementability via membership in the coupling algebra") {
  RandomGen rng(49);
  BipartiteHamiltonian hz = coupled(rng, 3, {kPauli[2]});
  CHECK(check_implementable(kPauli[2], hz).implementable);
  auto no = check_implementable(kPauli[0], hz);
  CHECK_FALSE(no.implementable);
  CHECK(no.residual == doctest::Approx(1.0));

  // Jordan product route: l1 l4 + l4 l1 = l6, so l6 is inside the algebra
  CHECK((kGm[0] * kGm[3] + kGm[3] * kGm[0] - kGm[5]).norm() <= 1e-14);
  BipartiteHamiltonian hl = coupled(rng, 3, {kGm[0], kGm[3]});
  CHECK(check_implementable(kGm[5], hl).implementable);

  CHECK_THROWS_AS(check_implementable(Matrix::Identity(5, 5), hz), Error);
}
