#include "qcif/json_io.hpp"

#include <nlohmann/json.hpp>

#include "qcif/operator_core.hpp"

namespace qcif {

namespace {

const Json& field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw Error(Errc::parse, std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

std::vector<std::vector<double>> plane_to_rows(const Matrix& m, bool imag) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      rows[i][j] = imag ? m(i, j).imag() : m(i, j).real();
  return rows;
}

}  // namespace

Json parse_json(const std::string& text, const char* where) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::parse, std::string(where) + ": " + e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  return Json{{"dim", m.rows()}, {"re", plane_to_rows(m, false)}, {"im", plane_to_rows(m, true)}};
}

Matrix matrix_from_json(const Json& j, const char* where, bool require_herm) {
  if (!j.is_object()) throw Error(Errc::parse, std::string(where) + ": matrix must be an object");
  const int dim = field(j, "dim", where).get<int>();
  if (dim < 1) throw Error(Errc::parse, std::string(where) + ": dim must be >= 1");
  const auto& re = field(j, "re", where);
  const Json* im = j.contains("im") ? &j["im"] : nullptr;
  if (re.size() != static_cast<std::size_t>(dim) ||
      (im && im->size() != static_cast<std::size_t>(dim)))
    throw Error(Errc::parse, std::string(where) + ": matrix rows do not match dim");
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& rrow = re[i];
    if (rrow.size() != static_cast<std::size_t>(dim))
      throw Error(Errc::parse, std::string(where) + ": matrix row length does not match dim");
    for (int k = 0; k < dim; ++k) {
      double imval = 0.0;
      if (im) {
        const auto& irow = (*im)[i];
        if (irow.size() != static_cast<std::size_t>(dim))
          throw Error(Errc::parse, std::string(where) + ": matrix row length does not match dim");
        imval = irow[k].get<double>();
      }
      m(i, k) = Complex(rrow[k].get<double>(), imval);
    }
  }
  if (require_herm) require_hermitian(m, where);
  return m;
}

Json vector_to_json(const Vector& v) {
  std::vector<double> re(v.size()), im(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re[i] = v(i).real();
    im[i] = v(i).imag();
  }
  return Json{{"dim", v.size()}, {"re", re}, {"im", im}};
}

Vector vector_from_json(const Json& j, const char* where) {
  if (!j.is_object()) throw Error(Errc::parse, std::string(where) + ": vector must be an object");
  const int dim = field(j, "dim", where).get<int>();
  const auto& re = field(j, "re", where);
  const Json* im = j.contains("im") ? &j["im"] : nullptr;
  if (re.size() != static_cast<std::size_t>(dim) ||
      (im && im->size() != static_cast<std::size_t>(dim)))
    throw Error(Errc::parse, std::string(where) + ": vector length does not match dim");
  Vector v(dim);
  for (int i = 0; i < dim; ++i)
    v(i) = Complex(re[i].get<double>(), im ? (*im)[i].get<double>() : 0.0);
  return v;
}

Json hamiltonian_to_json(const BipartiteHamiltonian& h) {
  Json terms = Json::array();
  for (const auto& t : h.terms)
    terms.push_back(Json{{"a", matrix_to_json(t.a)}, {"b", matrix_to_json(t.b)}});
  return Json{{"dim_c", h.dim_c},
              {"dim_s", h.dim_s},
              {"scalar", h.scalar},
              {"singular_values", h.singular_values},
              {"interaction_terms", terms},
              {"local_c", matrix_to_json(h.local_c)},
              {"local_s", matrix_to_json(h.local_s)}};
}

BipartiteHamiltonian hamiltonian_from_json(const Json& j, const RunConfig& cfg) {
  const char* where = "hamiltonian";
  const int dim_c = field(j, "dim_c", where).get<int>();
  const int dim_s = field(j, "dim_s", where).get<int>();
  if (j.contains("matrix"))
    return schmidt_decompose(matrix_from_json(j["matrix"], where, /*require_herm=*/true), dim_c,
                             dim_s, cfg);
  if (!j.contains("interaction_terms"))
    throw Error(Errc::parse,
                std::string(where) + ": expected either \"matrix\" or \"interaction_terms\"");
  BipartiteHamiltonian h;
  h.dim_c = dim_c;
  h.dim_s = dim_s;
  for (const auto& t : j["interaction_terms"]) {
    SchmidtTerm term{matrix_from_json(field(t, "a", where), where, true),
                     matrix_from_json(field(t, "b", where), where, true)};
    if (term.a.rows() != dim_c || term.b.rows() != dim_s)
      throw Error(Errc::dimension_mismatch,
                  std::string(where) + ": interaction term dimension mismatch");
    h.terms.push_back(std::move(term));
  }
  h.local_c = j.contains("local_c") ? matrix_from_json(j["local_c"], where, true)
                                    : Matrix::Zero(dim_c, dim_c);
  h.local_s = j.contains("local_s") ? matrix_from_json(j["local_s"], where, true)
                                    : Matrix::Zero(dim_s, dim_s);
  h.scalar = j.value("scalar", 0.0);
  if (j.contains("singular_values"))
    h.singular_values = j["singular_values"].get<std::vector<double>>();
  h.full = rebuild_full(h);
  return h;
}

std::vector<Matrix> generators_from_json(const Json& j, bool require_herm) {
  const Json& list = j.is_array() ? j : field(j, "generators", "generators");
  if (!list.is_array()) throw Error(Errc::parse, "generators: expected an array of matrices");
  std::vector<Matrix> out;
  for (const auto& g : list) out.push_back(matrix_from_json(g, "generators", require_herm));
  return out;
}

Json subspace_to_json(const OperatorSubspace& s) {
  Json basis = Json::array();
  for (int k = 0; k < s.size(); ++k) basis.push_back(matrix_to_json(s.basis(k)));
  return Json{{"dim_matrix", s.dim_matrix()}, {"dimension", s.size()}, {"basis", basis}};
}

Json closure_to_json(const ClosureReport& r, const std::string& kind) {
  Json out = subspace_to_json(r.result);
  out["kind"] = kind;
  out["generations"] = r.generations;
  out["saturated"] = r.saturated;
  return out;
}

Json analysis_to_json(const InterfaceAnalysis& a) {
  Json out{{"dim_c", a.dim_c},
           {"dim_s", a.dim_s},
           {"algebra_b_dimension", a.algebra_b.size()},
           {"space_l_dimension", a.space_l.size()},
           {"algebra_b", subspace_to_json(a.algebra_b)},
           {"space_l", subspace_to_json(a.space_l)},
           {"naive_structural_dimension", a.naive_structural_dim},
           {"theorem1_applicable", a.theorem1_applicable},
           {"universal_control", a.universal_control}};
  out["structural_dimension"] = a.structural ? Json(a.structural->size()) : Json(nullptr);
  out["brute_dimension"] = a.brute ? Json(a.brute->size()) : Json(nullptr);
  if (a.structural) out["structural"] = subspace_to_json(*a.structural);
  if (a.brute) out["brute"] = subspace_to_json(*a.brute);
  if (a.agree) {
    out["agree"] = *a.agree;
    out["max_mutual_residual"] = a.max_mutual_residual;
  }
  if (!a.note.empty()) out["note"] = a.note;
  return out;
}

Json procedure_to_json(const ControlProcedure& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps)
    steps.push_back(Json{{"t", s.wait}, {"w", matrix_to_json(s.w)}});
  return Json{{"dim_c", p.dim_c}, {"dim_s", p.dim_s}, {"steps", steps},
              {"t_p", p.total_time()}};
}

ControlProcedure procedure_from_json(const Json& j) {
  const char* where = "procedure";
  ControlProcedure p;
  p.dim_c = field(j, "dim_c", where).get<int>();
  p.dim_s = field(j, "dim_s", where).get<int>();
  for (const auto& s : field(j, "steps", where))
    p.steps.push_back({field(s, "t", where).get<double>(),
                       matrix_from_json(field(s, "w", where), where)});
  p.validate();
  return p;
}

Json scheme_to_json(const MeasurementScheme& s) {
  Json projections = Json::array(), pointers = Json::array();
  for (const auto& p : s.projections) projections.push_back(matrix_to_json(p));
  for (const auto& p : s.pointer_states) pointers.push_back(vector_to_json(p));
  Json out{{"kind", s.kind},
           {"dim_c", s.dim_c},
           {"dim_s", s.dim_s},
           {"observable", matrix_to_json(s.observable)},
           {"eigenvalues", s.eigenvalues},
           {"projections", projections},
           {"effective_h", matrix_to_json(s.effective_h)},
           {"controller_init", vector_to_json(s.controller_init)},
           {"evolution_time", s.evolution_time},
           {"pointer_states", pointers},
           {"trotter_m", s.trotter_m},
           {"notes", s.notes}};
  if (s.realized_u) out["realized_u"] = matrix_to_json(*s.realized_u);
  return out;
}

MeasurementScheme scheme_from_json(const Json& j) {
  const char* where = "scheme";
  MeasurementScheme s;
  s.kind = field(j, "kind", where).get<std::string>();
  s.dim_c = field(j, "dim_c", where).get<int>();
  s.dim_s = field(j, "dim_s", where).get<int>();
  s.observable = matrix_from_json(field(j, "observable", where), where, true);
  s.eigenvalues = field(j, "eigenvalues", where).get<std::vector<double>>();
  for (const auto& p : field(j, "projections", where))
    s.projections.push_back(matrix_from_json(p, where, true));
  s.effective_h = matrix_from_json(field(j, "effective_h", where), where, true);
  s.controller_init = vector_from_json(field(j, "controller_init", where), where);
  s.evolution_time = field(j, "evolution_time", where).get<double>();
  for (const auto& p : field(j, "pointer_states", where))
    s.pointer_states.push_back(vector_from_json(p, where));
  s.trotter_m = j.value("trotter_m", 0);
  if (j.contains("notes")) s.notes = j["notes"].get<std::vector<std::string>>();
  if (j.contains("realized_u")) s.realized_u = matrix_from_json(j["realized_u"], where);

  if (std::abs(s.controller_init.norm() - 1.0) > 1e-12)
    throw Error(Errc::not_normalized, "scheme: controller_init is not normalized");
  // projections must be a complete orthogonal family
  Matrix sum = Matrix::Zero(s.dim_s, s.dim_s);
  for (std::size_t a = 0; a < s.projections.size(); ++a) {
    sum += s.projections[a];
    for (std::size_t b = 0; b < s.projections.size(); ++b) {
      Matrix prod = s.projections[a] * s.projections[b];
      Matrix expect = (a == b) ? s.projections[a] : Matrix::Zero(s.dim_s, s.dim_s);
      if ((prod - expect).cwiseAbs().maxCoeff() > 1e-10)
        throw Error(Errc::precondition, "scheme: projections are not orthogonal idempotents");
    }
  }
  if ((sum - Matrix::Identity(s.dim_s, s.dim_s)).cwiseAbs().maxCoeff() > 1e-10)
    throw Error(Errc::precondition, "scheme: projections do not sum to the identity");
  return s;
}

Json chain_to_json(const ChainSpec& spec) {
  Json couplings = Json::array();
  for (const auto& bond : spec.couplings) {
    Json terms = Json::array();
    for (const auto& t : bond)
      terms.push_back(Json{{"a", matrix_to_json(t.a)}, {"b", matrix_to_json(t.b)}});
    couplings.push_back(terms);
  }
  return Json{{"site_dims", spec.site_dims}, {"couplings", couplings}};
}

ChainSpec chain_from_json(const Json& j) {
  const char* where = "chain";
  ChainSpec spec;
  spec.site_dims = field(j, "site_dims", where).get<std::vector<int>>();
  for (const auto& bond : field(j, "couplings", where)) {
    std::vector<ChainCoupling> terms;
    for (const auto& t : bond)
      terms.push_back({matrix_from_json(field(t, "a", where), where, true),
                       matrix_from_json(field(t, "b", where), where, true)});
    spec.couplings.push_back(std::move(terms));
  }
  spec.validate();
  return spec;
}

Json outcome_to_json(const MeasurementOutcome& o) {
  Json posts = Json::array();
  for (const auto& p : o.post_states) posts.push_back(vector_to_json(p));
  return Json{
      {"probabilities", o.probabilities}, {"post_states", posts}, {"leakage", o.leakage}};
}

}  // namespace qcif
