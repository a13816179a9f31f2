#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qcif/interface_algebra.hpp"
#include "qcif/measurement.hpp"
#include "qcif/schmidt.hpp"
#include "qcif/spin_chain.hpp"
#include "qcif/subspace.hpp"
#include "qcif/synthesis.hpp"
#include "qcif/types.hpp"

namespace qcif {

using Json = nlohmann::json;

// Matrix wire format: { "dim": n, "re": [[..]], "im": [[..]] }, row-major.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const char* where, bool require_herm = false);

// Vector wire format: { "dim": n, "re": [..], "im": [..] }.
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, const char* where);

// Hamiltonian input: either {"dim_c","dim_s","matrix":{..}} (decomposed on
// load) or a decomposition object as written by hamiltonian_to_json.
Json hamiltonian_to_json(const BipartiteHamiltonian& h);
BipartiteHamiltonian hamiltonian_from_json(const Json& j, const RunConfig& cfg = {});

std::vector<Matrix> generators_from_json(const Json& j, bool require_herm = true);
Json subspace_to_json(const OperatorSubspace& s);
Json closure_to_json(const ClosureReport& r, const std::string& kind);

Json analysis_to_json(const InterfaceAnalysis& a);

Json procedure_to_json(const ControlProcedure& p);
ControlProcedure procedure_from_json(const Json& j);

Json scheme_to_json(const MeasurementScheme& s);
MeasurementScheme scheme_from_json(const Json& j);

Json chain_to_json(const ChainSpec& spec);
ChainSpec chain_from_json(const Json& j);

Json outcome_to_json(const MeasurementOutcome& o);

// Parses text, mapping json exceptions to Errc::parse.
Json parse_json(const std::string& text, const char* where);

}  // namespace qcif
