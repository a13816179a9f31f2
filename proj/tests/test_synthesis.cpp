#include <doctest.h>

#include <cmath>

#include "qcif/operator_core.hpp"
#include "qcif/random.hpp"
#include "qcif/selftest.hpp"
#include "qcif/synthesis.hpp"

using namespace qcif;

namespace {

const std::vector<Matrix> kPauli = pauli_matrices();
const Matrix kId2 = Matrix::Identity(2, 2);

BipartiteHamiltonian random_stripped(RandomGen& rng, int dc, int ds, double spec_norm = 0.0) {
  BipartiteHamiltonian h = rng.bipartite(dc, ds, 2);
  if (spec_norm > 0.0)
    h = schmidt_decompose(h.full * (spec_norm / spectral_norm(h.full)), dc, ds);
  return h;
}

}  // namespace

TEST_CASE("evaluate_procedure basics") {
  RandomGen rng(51);
  BipartiteHamiltonian h = random_stripped(rng, 2, 2);

  ControlProcedure wait{2, 2, {{0.7, kId2}}};
  EvaluatedProcedure ev = evaluate_procedure(wait, h);
  CHECK(ev.time == doctest::Approx(0.7));
  CHECK((ev.u - expm_i(h.full, 0.7)).norm() <= 1e-12);

  Matrix w = expm_i(kPauli[1], 0.3);
  ControlProcedure instant{2, 2, {{0.0, w}}};
  CHECK((evaluate_procedure(instant, h).u - embed_controller(w, 2)).norm() <= 1e-12);

  ControlProcedure twice{2, 2, {{0.4, kId2}, {0.4, kId2}}};
  CHECK((evaluate_procedure(twice, h).u - expm_i(h.full, 0.8)).norm() <= 1e-11);
}

TEST_CASE("concatenation composes as u_p u_r = u_rp") {
  RandomGen rng(52);
  BipartiteHamiltonian h = random_stripped(rng, 2, 2);
  ControlProcedure p{2, 2, {{0.3, expm_i(kPauli[0], 0.4)}, {0.2, expm_i(kPauli[2], 1.1)}}};
  ControlProcedure r{2, 2, {{0.5, expm_i(kPauli[1], 0.8)}}};
  ControlProcedure rp = p;  // run p first, then r
  rp.steps.insert(rp.steps.end(), r.steps.begin(), r.steps.end());
  Matrix composed = evaluate_procedure(r, h).u * evaluate_procedure(p, h).u;
  CHECK((evaluate_procedure(rp, h).u - composed).norm() <= 1e-11);
}

TEST_CASE("procedure validation") {
  ControlProcedure bad_wait{2, 2, {{-0.1, kId2}}};
  CHECK_THROWS_AS(bad_wait.validate(), Error);
  ControlProcedure bad_w{2, 2, {{0.1, 2.0 * kId2}}};
  CHECK_THROWS_AS(bad_w.validate(), Error);
}

TEST_CASE("weyl_group structure") {
  IrreducibleGroup g2 = weyl_group(2);
  CHECK(g2.elements.size() == 4);  // 1, X=sx, Z=sz, XZ
  CHECK((g2.elements[0] - kId2).norm() <= 1e-14);
  CHECK((g2.elements[1] - kPauli[2]).norm() <= 1e-14);   // Z at (a=0,b=1)
  CHECK((g2.elements[2] - kPauli[0]).norm() <= 1e-14);   // X at (a=1,b=0)
  CHECK(closed_up_to_phase(g2));

  for (int d : {2, 3, 4}) {
    IrreducibleGroup g = weyl_group(d);
    CHECK(static_cast<int>(g.elements.size()) == d * d);
    CHECK(closed_up_to_phase(g));
    RandomGen rng(53 + d);
    CHECK(schur_average_defect(g, rng.hermitian(d)) <= 1e-10);
    // traceless probes average to zero, forced by irreducibility
    Matrix t = rng.traceless_hermitian(d);
    Matrix avg = Matrix::Zero(d, d);
    for (const auto& s : g.elements) avg += s * t * s.adjoint();
    CHECK(avg.norm() <= 1e-10 * g.elements.size() * t.norm());
  }
}

TEST_CASE("group_average vanishes exactly on stripped Hamiltonians") {
  RandomGen rng(54);
  // xy-type coupling with the controller embedded into three levels
  Matrix sx3 = Matrix::Zero(3, 3), sy3 = Matrix::Zero(3, 3);
  sx3.block(0, 0, 2, 2) = kPauli[0];
  sy3.block(0, 0, 2, 2) = kPauli[1];
  Matrix h = tensor(sx3, kPauli[0]) + tensor(sy3, kPauli[1]);
  BipartiteHamiltonian xy3 = schmidt_decompose(h, 3, 2);
  IrreducibleGroup s3 = weyl_group(3);
  CHECK(group_average(xy3, s3).norm() <= 1e-9 * s3.elements.size() * h.norm());

  // identity-coupled locals survive averaging
  BipartiteHamiltonian local = schmidt_decompose(tensor(kId2, kPauli[2]), 2, 2);
  IrreducibleGroup s2 = weyl_group(2);
  Matrix avg = group_average(local, s2);
  CHECK((avg - 4.0 * tensor(kId2, kPauli[2])).norm() <= 1e-10);

  BipartiteHamiltonian big = random_stripped(rng, 4, 2);
  IrreducibleGroup s4 = weyl_group(4);
  CHECK(group_average(big, s4).norm() <= 1e-9 * s4.elements.size() * big.full.norm());
}

TEST_CASE("inversion sequence: time accounting and limits") {
  RandomGen rng(55);
  BipartiteHamiltonian h = random_stripped(rng, 3, 2, 1.0);
  IrreducibleGroup s = weyl_group(3);

  ControlProcedure p = inversion_sequence(h, s, 0.1);
  CHECK(p.total_time() == doctest::Approx(0.8));  // (9-1) * 0.1
  p.validate();

  // eps -> 0: both the procedure and the target tend to the identity
  ControlProcedure tiny = inversion_sequence(h, s, 1e-4);
  EvaluatedProcedure ev = evaluate_procedure(tiny, h);
  CHECK(phase_aligned_distance(ev.u, expm_i(h.full, -1e-4)) <= 1e-6);
  CHECK(spectral_norm(ev.u - Matrix::Identity(6, 6)) <= 1e-2);
}

TEST_CASE("inversion sequence error scales as eps^2") {
  RandomGen rng(56);
  BipartiteHamiltonian h = random_stripped(rng, 3, 2, 1.0);
  IrreducibleGroup s = weyl_group(3);
  std::vector<double> eps = {0.2, 0.1, 0.05, 0.025}, errs;
  for (double e : eps) {
    EvaluatedProcedure ev = evaluate_procedure(inversion_sequence(h, s, e), h);
    errs.push_back(phase_aligned_distance(ev.u, expm_i(h.full, -e)));
  }
  double slope = loglog_slope(eps, errs);
  CHECK(slope >= 1.8);
  CHECK(slope <= 2.2);
}

TEST_CASE("inversion sequence rejects unstripped Hamiltonians") {
  Matrix mixed = tensor(kPauli[2], kId2) + tensor(kPauli[0], kPauli[0]);
  BipartiteHamiltonian h = schmidt_decompose(mixed, 2, 2);
  CHECK_THROWS_AS(inversion_sequence(h, weyl_group(2), 0.1), Error);
}

TEST_CASE("trotter_procedure") {
  // commuting terms: exact for any m
  Matrix za = kPauli[2], zb = 0.5 * kPauli[2];
  TrotterResult commuting = trotter_procedure({{za, 1.0}, {zb, 1.0}}, 3);
  CHECK(commuting.achieved_error <= 1e-10);

  TrotterResult single = trotter_procedure({{kPauli[0], 0.9}}, 1);
  CHECK(single.achieved_error <= 1e-12);

  std::vector<double> ms = {8, 16, 32, 64}, errs;
  for (double m : ms) {
    TrotterResult r = trotter_procedure({{kPauli[0], 1.0}, {kPauli[2], 1.0}}, int(m));
    CHECK(r.achieved_error <= r.error_bound + 1e-12);
    errs.push_back(r.achieved_error);
  }
  double slope = loglog_slope(ms, errs);
  CHECK(std::abs(slope + 1.0) <= 0.3);
}

TEST_CASE("commutator_procedure") {
  // commuting inputs give the identity for every m
  Matrix u = commutator_procedure(kPauli[2], 2.0 * kPauli[2], 5);
  CHECK((u - Matrix::Identity(2, 2)).norm() <= 1e-12);

  // e^{-[sx,sy]} = e^{-2 i sz}
  Matrix target = expm_i(commutator_i(kPauli[0], kPauli[1]), 1.0);
  std::vector<double> ms = {8, 16, 32, 64}, errs;
  for (double m : ms)
    errs.push_back(phase_aligned_distance(commutator_procedure(kPauli[0], kPauli[1], int(m)),
                                          target));
  for (std::size_t i = 0; i + 1 < errs.size(); ++i) CHECK(errs[i] > errs[i + 1]);
  CHECK(errs.back() <= 0.05);

  // pi/2-scaled case from the worked examples
  Matrix a = std::sqrt(M_PI / 2) * kPauli[0], b = std::sqrt(M_PI / 2) * kPauli[1];
  Matrix t2 = expm_i(commutator_i(a, b), 1.0);
  std::vector<double> ms2 = {4, 8, 16, 32}, errs2;
  for (double m : ms2)
    errs2.push_back(phase_aligned_distance(commutator_procedure(a, b, int(m)), t2));
  for (std::size_t i = 0; i + 1 < errs2.size(); ++i) CHECK(errs2[i] > errs2[i + 1]);
}

TEST_CASE("unitarity survives long factor chains") {
  // m = 100 multiplies 4 * 100^2 = 4e4 factors into the result
  Matrix u = commutator_procedure(kPauli[0], kPauli[1], 100);
  CHECK((u.adjoint() * u - Matrix::Identity(2, 2)).norm() <= 1e-9);
}
