#include <doctest.h>

#include "oracles.hpp"
#include "qcif/closure.hpp"
#include "qcif/operator_core.hpp"
#include "qcif/random.hpp"

using namespace qcif;

namespace {
const std::vector<Matrix> kPauli = pauli_matrices();
const std::vector<Matrix> kGm = gell_mann_matrices();
}  // namespace

TEST_CASE("lie_closure of Pauli pairs") {
  ClosureReport r = lie_closure({kPauli[0], kPauli[1]});
  CHECK(r.result.size() == 3);  // i[sx,sy] = -2 sz
  CHECK(r.saturated);

  ClosureReport abelian = lie_closure({kPauli[2]});
  CHECK(abelian.result.size() == 1);
  CHECK(abelian.saturated);
  CHECK(abelian.generations >= 1);
}

TEST_CASE("lie_closure of the xy model spans 10 directions") {
  Matrix h = tensor(kPauli[0], kPauli[0]) + tensor(kPauli[1], kPauli[1]);
  std::vector<Matrix> gens;
  for (const auto& w : traceless_hermitian_basis(2)) gens.push_back(embed_controller(w, 2));
  gens.push_back(h);
  ClosureReport r = lie_closure(gens);
  CHECK(r.result.size() == 10);
  CHECK(r.saturated);
}

TEST_CASE("lie_closure rejects traceful generators") {
  CHECK_THROWS_AS(lie_closure({Matrix::Identity(2, 2)}), Error);
}

TEST_CASE("closure contains its generators") {
  RandomGen rng(31);
  std::vector<Matrix> gens = {rng.traceless_hermitian(3), rng.traceless_hermitian(3)};
  ClosureReport r = lie_closure(gens);
  for (const auto& g : gens) CHECK(r.result.member(g).residual <= 1e-10);
}

TEST_CASE("saturation: all commutators stay inside") {
  RandomGen rng(32);
  ClosureReport r = lie_closure({rng.traceless_hermitian(3), rng.traceless_hermitian(3)});
  REQUIRE(r.saturated);
  double worst = 0.0;
  for (int i = 0; i < r.result.size(); ++i)
    for (int j = 0; j < r.result.size(); ++j)
      worst = std::max(
          worst, r.result.member(commutator_i(r.result.basis(i), r.result.basis(j))).residual);
  CHECK(worst <= 1e-8);
}

TEST_CASE("generic pairs generate the full special-unitary algebra") {
  for (int d : {2, 3, 4}) {
    for (int seed = 0; seed < 10; ++seed) {
      RandomGen rng(100 * d + seed);
      ClosureReport r = lie_closure({rng.traceless_hermitian(d), rng.traceless_hermitian(d)});
      CHECK(r.result.size() == d * d - 1);
    }
  }
}

TEST_CASE("adding a generator never shrinks the closure") {
  for (int seed = 0; seed < 10; ++seed) {
    RandomGen rng(300 + seed);
    // sparse commuting-ish seeds so the base closure is not already full
    Matrix diag = Matrix::Zero(3, 3);
    diag.diagonal() << rng.gaussian(), rng.gaussian(), 0.0;
    diag = traceless_part(diag);
    std::vector<Matrix> gens = {diag};
    int base = lie_closure(gens).result.size();
    gens.push_back(rng.traceless_hermitian(3));
    CHECK(lie_closure(gens).result.size() >= base);
  }
}

TEST_CASE("star_closure worked examples") {
  CHECK(star_closure({kPauli[0]}).size() == 2);  // span{1, sx}
  CHECK(star_closure({Matrix::Identity(2, 2)}).size() == 1);

  OperatorSubspace full = star_closure({kPauli[0], kPauli[2]});
  CHECK(full.size() == 4);
  CHECK(full.size() == test::word_span_dim({kPauli[0], kPauli[2]}));
}

TEST_CASE("star_closure matches the word-span oracle on Gell-Mann pairs") {
  // l1, l4 connect all three levels; l1, l2 only touch the (1,2) block
  CHECK(test::word_span_dim({kGm[0], kGm[3]}) == 9);
  CHECK(star_closure({kGm[0], kGm[3]}).size() == 9);

  CHECK(test::word_span_dim({kGm[0], kGm[1]}) == 5);
  CHECK(star_closure({kGm[0], kGm[1]}).size() == 5);

  // commuting diagonals generate the diagonal algebra
  CHECK(star_closure({kGm[2], kGm[7]}).size() == 3);
}

TEST_CASE("star_closure result is closed under squaring") {
  RandomGen rng(33);
  OperatorSubspace b = star_closure({rng.hermitian(3)});
  for (int i = 0; i < b.size(); ++i) {
    Matrix sq = b.basis(i) * b.basis(i);
    CHECK(b.member(sq).residual <= 1e-8);
  }
}

TEST_CASE("commutator_span") {
  OperatorSubspace su2(2);
  for (const auto& p : kPauli) su2.extend(p);
  CHECK(commutator_span(su2, su2).size() == 3);

  OperatorSubspace just_z(2);
  just_z.extend(kPauli[2]);
  CHECK(commutator_span(just_z, just_z).size() == 0);

  OperatorSubspace herm2(2);
  for (const auto& b : hermitian_basis(2)) herm2.extend(b);
  CHECK(commutator_span(herm2, herm2).size() == 3);  // the identity commutes out
}

TEST_CASE("member verdicts respect the configured tolerance") {
  OperatorSubspace su2(2);
  for (const auto& p : kPauli) su2.extend(p);
  RunConfig loose;
  CHECK(member(kPauli[2] + 1e-10 * Matrix::Identity(2, 2), su2, loose).member);
  RunConfig tight;
  tight.member_tol = 1e-12;
  CHECK_FALSE(member(kPauli[2] + 1e-6 * Matrix::Identity(2, 2), su2, tight).member);
}

TEST_CASE("config window is enforced") {
  RunConfig cfg;
  cfg.member_tol = 0.5;  // outside (0, 1e-3)
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = RunConfig{};
  cfg.dim_cap = 1000;
  CHECK_THROWS_AS(cfg.validate(), Error);
}
