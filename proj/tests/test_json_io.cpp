#include <doctest.h>

#include <nlohmann/json.hpp>

#include "qcif/json_io.hpp"
#include "qcif/measurement.hpp"
#include "qcif/operator_core.hpp"
#include "qcif/random.hpp"

using namespace qcif;

TEST_CASE("matrix round trip is lossless") {
  RandomGen rng(71);
  Matrix m = rng.hermitian(4);
  Json j = matrix_to_json(m);
  Matrix back = matrix_from_json(j, "test", true);
  CHECK((m - back).cwiseAbs().maxCoeff() <= 1e-15);

  // via text, as the CLI does it
  Matrix back2 = matrix_from_json(parse_json(j.dump(), "test"), "test", true);
  CHECK((m - back2).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("missing imaginary part defaults to zero") {
  Json j{{"dim", 2}, {"re", {{0.0, 1.0}, {1.0, 0.0}}}};
  Matrix m = matrix_from_json(j, "test", true);
  CHECK((m - pauli_matrices()[0]).norm() <= 1e-15);
}

TEST_CASE("hermiticity is validated on load") {
  Json j{{"dim", 2}, {"re", {{0.0, 1.0}, {0.0, 0.0}}}};
  CHECK_THROWS_AS(matrix_from_json(j, "test", true), Error);
  CHECK_NOTHROW(matrix_from_json(j, "test", false));
}

TEST_CASE("malformed input maps to parse errors") {
  CHECK_THROWS_AS(parse_json("{ nope", "test"), Error);
  Json j{{"dim", 3}, {"re", {{1.0, 0.0}, {0.0, 1.0}}}};  // rows don't match dim
  CHECK_THROWS_AS(matrix_from_json(j, "test", false), Error);
}

TEST_CASE("hamiltonian accepts both wire forms") {
  RandomGen rng(72);
  Matrix full = Matrix::Zero(6, 6);
  full += tensor(rng.traceless_hermitian(3), rng.traceless_hermitian(2));

  Json matrix_form{{"dim_c", 3}, {"dim_s", 2}, {"matrix", matrix_to_json(full)}};
  BipartiteHamiltonian a = hamiltonian_from_json(matrix_form);
  CHECK((a.full - full).norm() <= 1e-9 * full.norm());

  Json decomposed = hamiltonian_to_json(a);
  BipartiteHamiltonian b = hamiltonian_from_json(decomposed);
  CHECK((b.full - full).norm() <= 1e-9 * full.norm());
  CHECK(b.terms.size() == a.terms.size());
}

TEST_CASE("scheme round trip preserves the measurement data") {
  MeasurementScheme s = build_cqnd_scheme(pauli_matrices()[2], 3);
  Json j = scheme_to_json(s);
  MeasurementScheme back = scheme_from_json(j);
  CHECK(back.kind == s.kind);
  CHECK(back.dim_c == s.dim_c);
  CHECK((back.effective_h - s.effective_h).norm() <= 1e-12);
  CHECK(back.evolution_time == doctest::Approx(s.evolution_time));
  CHECK(back.pointer_states.size() == s.pointer_states.size());

  // corrupted projections are rejected
  Json broken = j;
  broken["projections"][0]["re"][0][0] = 0.5;
  CHECK_THROWS_AS(scheme_from_json(broken), Error);
}

TEST_CASE("procedure and chain round trips") {
  ControlProcedure p{2, 2, {{0.25, expm_i(pauli_matrices()[0], 0.3)}}};
  ControlProcedure back = procedure_from_json(procedure_to_json(p));
  CHECK(back.steps.size() == 1);
  CHECK(back.steps[0].wait == doctest::Approx(0.25));
  CHECK((back.steps[0].w - p.steps[0].w).cwiseAbs().maxCoeff() <= 1e-15);

  auto gm = gell_mann_matrices();
  ChainSpec spec;
  spec.site_dims = {3, 3};
  spec.couplings = {{{gm[0], gm[0]}, {gm[2], gm[2]}}};
  ChainSpec chain_back = chain_from_json(chain_to_json(spec));
  CHECK(chain_back.site_dims == spec.site_dims);
  CHECK(chain_back.couplings[0].size() == 2);
}

TEST_CASE("generator lists accept both bare arrays and objects") {
  auto pauli = pauli_matrices();
  Json bare = Json::array({matrix_to_json(pauli[0]), matrix_to_json(pauli[1])});
  CHECK(generators_from_json(bare).size() == 2);
  Json wrapped{{"generators", bare}};
  CHECK(generators_from_json(wrapped).size() == 2);
}
