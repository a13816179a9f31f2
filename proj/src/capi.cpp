#include "qcif.h"

#include <cstring>
#include <new>
#include <string>

#include <nlohmann/json.hpp>

#include "qcif/closure.hpp"
#include "qcif/interface_algebra.hpp"
#include "qcif/json_io.hpp"
#include "qcif/measurement.hpp"
#include "qcif/operator_core.hpp"
#include "qcif/schmidt.hpp"
#include "qcif/selftest.hpp"
#include "qcif/spin_chain.hpp"
#include "qcif/subspace.hpp"
#include "qcif/synthesis.hpp"
#include "qcif/types.hpp"

struct qcif_context {
  qcif::RunConfig cfg;
  std::string last_error;
};

struct qcif_matrix {
  qcif::Matrix m;
};

struct qcif_subspace {
  qcif::OperatorSubspace s;
};

namespace {

using qcif::Json;

qcif_status map_errc(qcif::Errc code) {
  switch (code) {
    case qcif::Errc::dimension_mismatch:
      return QCIF_ERR_DIMENSION;
    case qcif::Errc::not_hermitian:
      return QCIF_ERR_NOT_HERMITIAN;
    case qcif::Errc::not_unitary:
      return QCIF_ERR_NOT_UNITARY;
    case qcif::Errc::not_traceless:
    case qcif::Errc::not_normalized:
    case qcif::Errc::precondition:
      return QCIF_ERR_PRECONDITION;
    case qcif::Errc::parse:
      return QCIF_ERR_PARSE;
    case qcif::Errc::cap_exceeded:
      return QCIF_ERR_CAP_EXCEEDED;
    case qcif::Errc::invalid_config:
      return QCIF_ERR_CONFIG;
  }
  return QCIF_ERR_INTERNAL;
}

template <typename Fn>
qcif_status guarded(qcif_context* ctx, Fn&& fn) {
  if (!ctx) return QCIF_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    fn();
    return QCIF_OK;
  } catch (const qcif::Error& e) {
    ctx->last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return QCIF_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qcif_status emit(qcif_context* ctx, const Json& j, char** out_json) {
  if (!out_json) {
    ctx->last_error = "output pointer is null";
    return QCIF_ERR_INVALID_ARGUMENT;
  }
  *out_json = dup_string(j.dump(2));
  return *out_json ? QCIF_OK : QCIF_ERR_INTERNAL;
}

// every CLI-visible output records the active configuration
void stamp(Json& j, const qcif::RunConfig& cfg) {
  j["seed"] = cfg.seed;
  j["tolerances"] = Json{{"rank_tol", cfg.rank_tol}, {"member_tol", cfg.member_tol}};
}

qcif::Matrix require_matrix(const qcif_matrix* m, const char* where) {
  if (!m) throw qcif::Error(qcif::Errc::precondition, std::string(where) + ": null matrix");
  return m->m;
}

}  // namespace

extern "C" {

const char* qcif_version(void) { return "1.0.0"; }

qcif_context* qcif_context_new(void) { return new (std::nothrow) qcif_context(); }

void qcif_context_free(qcif_context* ctx) { delete ctx; }

const char* qcif_context_error(const qcif_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

qcif_status qcif_context_set_member_tol(qcif_context* ctx, double tol) {
  return guarded(ctx, [&] {
    qcif::RunConfig next = ctx->cfg;
    next.member_tol = tol;
    next.validate();
    ctx->cfg = next;
  });
}

qcif_status qcif_context_set_rank_tol(qcif_context* ctx, double tol) {
  return guarded(ctx, [&] {
    qcif::RunConfig next = ctx->cfg;
    next.rank_tol = tol;
    next.validate();
    ctx->cfg = next;
  });
}

qcif_status qcif_context_set_cap(qcif_context* ctx, int cap) {
  return guarded(ctx, [&] {
    qcif::RunConfig next = ctx->cfg;
    next.dim_cap = cap;
    next.validate();
    ctx->cfg = next;
  });
}

qcif_status qcif_context_set_seed(qcif_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] { ctx->cfg.seed = seed; });
}

void qcif_string_free(char* s) { delete[] s; }

qcif_status qcif_matrix_new(qcif_context* ctx, int dim, const double* re, const double* im,
                            int hermitian, qcif_matrix** out) {
  return guarded(ctx, [&] {
    if (dim < 1 || !re || !out)
      throw qcif::Error(qcif::Errc::precondition, "qcif_matrix_new: bad arguments");
    qcif::Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        m(i, j) = qcif::Complex(re[i * dim + j], im ? im[i * dim + j] : 0.0);
    if (hermitian) qcif::require_hermitian(m, "qcif_matrix_new");
    *out = new qcif_matrix{std::move(m)};
  });
}

qcif_status qcif_matrix_from_json(qcif_context* ctx, const char* json, int hermitian,
                                  qcif_matrix** out) {
  return guarded(ctx, [&] {
    if (!json || !out)
      throw qcif::Error(qcif::Errc::precondition, "qcif_matrix_from_json: bad arguments");
    Json j = qcif::parse_json(json, "qcif_matrix_from_json");
    *out = new qcif_matrix{qcif::matrix_from_json(j, "qcif_matrix_from_json", hermitian != 0)};
  });
}

qcif_status qcif_matrix_to_json(qcif_context* ctx, const qcif_matrix* m, char** out_json) {
  return guarded(ctx, [&] {
    Json j = qcif::matrix_to_json(require_matrix(m, "qcif_matrix_to_json"));
    if (emit(ctx, j, out_json) != QCIF_OK)
      throw qcif::Error(qcif::Errc::precondition, ctx->last_error);
  });
}

int qcif_matrix_dim(const qcif_matrix* m) { return m ? static_cast<int>(m->m.rows()) : 0; }

qcif_status qcif_matrix_get(const qcif_matrix* m, double* re, double* im) {
  if (!m || !re) return QCIF_ERR_INVALID_ARGUMENT;
  const int dim = static_cast<int>(m->m.rows());
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      re[i * dim + j] = m->m(i, j).real();
      if (im) im[i * dim + j] = m->m(i, j).imag();
    }
  return QCIF_OK;
}

void qcif_matrix_free(qcif_matrix* m) { delete m; }

qcif_status qcif_matrix_expm(qcif_context* ctx, const qcif_matrix* h, double t,
                             qcif_matrix** out) {
  return guarded(ctx, [&] {
    *out = new qcif_matrix{qcif::expm_i(require_matrix(h, "qcif_matrix_expm"), t)};
  });
}

qcif_status qcif_matrix_tensor(qcif_context* ctx, const qcif_matrix* x, const qcif_matrix* y,
                               qcif_matrix** out) {
  return guarded(ctx, [&] {
    *out = new qcif_matrix{qcif::tensor(require_matrix(x, "qcif_matrix_tensor"),
                                        require_matrix(y, "qcif_matrix_tensor"))};
  });
}

qcif_status qcif_matrix_traceless_part(qcif_context* ctx, const qcif_matrix* x,
                                       qcif_matrix** out) {
  return guarded(ctx, [&] {
    *out = new qcif_matrix{
        qcif::traceless_part(require_matrix(x, "qcif_matrix_traceless_part"))};
  });
}

qcif_status qcif_hs_inner(qcif_context* ctx, const qcif_matrix* x, const qcif_matrix* y,
                          double* re, double* im) {
  return guarded(ctx, [&] {
    qcif::Complex v = qcif::hs_inner(require_matrix(x, "qcif_hs_inner"),
                                     require_matrix(y, "qcif_hs_inner"));
    if (re) *re = v.real();
    if (im) *im = v.imag();
  });
}

namespace {

std::vector<qcif::Matrix> collect(const qcif_matrix* const* generators, int count,
                                  const char* where) {
  if (!generators || count < 1)
    throw qcif::Error(qcif::Errc::precondition, std::string(where) + ": no generators");
  std::vector<qcif::Matrix> gens;
  gens.reserve(count);
  for (int i = 0; i < count; ++i) gens.push_back(require_matrix(generators[i], where));
  return gens;
}

}  // namespace

qcif_status qcif_lie_closure(qcif_context* ctx, const qcif_matrix* const* generators, int count,
                             qcif_subspace** out) {
  return guarded(ctx, [&] {
    auto gens = collect(generators, count, "qcif_lie_closure");
    *out = new qcif_subspace{qcif::lie_closure(gens, ctx->cfg).result};
  });
}

qcif_status qcif_star_closure(qcif_context* ctx, const qcif_matrix* const* generators, int count,
                              qcif_subspace** out) {
  return guarded(ctx, [&] {
    auto gens = collect(generators, count, "qcif_star_closure");
    *out = new qcif_subspace{qcif::star_closure(gens, ctx->cfg)};
  });
}

int qcif_subspace_dim(const qcif_subspace* s) { return s ? s->s.size() : 0; }

int qcif_subspace_matrix_dim(const qcif_subspace* s) { return s ? s->s.dim_matrix() : 0; }

qcif_status qcif_subspace_basis(qcif_context* ctx, const qcif_subspace* s, int index,
                                qcif_matrix** out) {
  return guarded(ctx, [&] {
    if (!s || index < 0 || index >= s->s.size())
      throw qcif::Error(qcif::Errc::precondition, "qcif_subspace_basis: index out of range");
    *out = new qcif_matrix{s->s.basis(index)};
  });
}

qcif_status qcif_subspace_member(qcif_context* ctx, const qcif_subspace* s, const qcif_matrix* x,
                                 int* member, double* residual) {
  return guarded(ctx, [&] {
    if (!s) throw qcif::Error(qcif::Errc::precondition, "qcif_subspace_member: null subspace");
    auto verdict = s->s.member(require_matrix(x, "qcif_subspace_member"), ctx->cfg.member_tol);
    if (member) *member = verdict.member ? 1 : 0;
    if (residual) *residual = verdict.residual;
  });
}

void qcif_subspace_free(qcif_subspace* s) { delete s; }

qcif_status qcif_run_decompose(qcif_context* ctx, const char* h_json, int strip,
                               char** out_json) {
  return guarded(ctx, [&] {
    Json in = qcif::parse_json(h_json, "decompose");
    qcif::BipartiteHamiltonian h = qcif::hamiltonian_from_json(in, ctx->cfg);
    if (strip) h = qcif::strip_locals(h);
    Json out = qcif::hamiltonian_to_json(h);
    out["stripped"] = h.locals_stripped();
    stamp(out, ctx->cfg);
    emit(ctx, out, out_json);
  });
}

qcif_status qcif_run_closure(qcif_context* ctx, const char* kind, const char* generators_json,
                             char** out_json) {
  return guarded(ctx, [&] {
    std::string k = kind ? kind : "";
    Json in = qcif::parse_json(generators_json, "closure");
    auto gens = qcif::generators_from_json(in);
    qcif::ClosureReport report = k == "lie"    ? qcif::lie_closure(gens, ctx->cfg)
                                 : k == "star" ? qcif::star_closure_report(gens, ctx->cfg)
                                               : throw qcif::Error(qcif::Errc::precondition,
                                                                   "closure kind must be "
                                                                   "\"lie\" or \"star\"");
    Json out = qcif::closure_to_json(report, k);
    stamp(out, ctx->cfg);
    emit(ctx, out, out_json);
  });
}

qcif_status qcif_run_interface(qcif_context* ctx, const char* h_json, int brute_force,
                               char** out_json) {
  return guarded(ctx, [&] {
    Json in = qcif::parse_json(h_json, "interface");
    qcif::BipartiteHamiltonian h = qcif::hamiltonian_from_json(in, ctx->cfg);
    qcif::InterfaceAnalysis a = qcif::analyze_interface(h, ctx->cfg, brute_force != 0);
    Json out = qcif::analysis_to_json(a);
    stamp(out, ctx->cfg);
    emit(ctx, out, out_json);
  });
}

qcif_status qcif_run_check_control(qcif_context* ctx, const char* h_json, char** out_json,
                                   int* verdict) {
  return guarded(ctx, [&] {
    Json in = qcif::parse_json(h_json, "check-control");
    qcif::BipartiteHamiltonian h = qcif::hamiltonian_from_json(in, ctx->cfg);
    qcif::OperatorSubspace b = qcif::star_closure(
        [&] {
          std::vector<qcif::Matrix> gens;
          for (const auto& t : h.terms) gens.push_back(t.b);
          if (gens.empty()) gens.push_back(qcif::Matrix::Zero(h.dim_s, h.dim_s));
          return gens;
        }(),
        ctx->cfg);
    bool ok = qcif::check_universal_control(h, ctx->cfg);
    Json out{{"universal_control", ok},
             {"algebra_b_dimension", b.size()},
             {"full_dimension", h.dim_s * h.dim_s}};
    stamp(out, ctx->cfg);
    emit(ctx, out, out_json);
    if (verdict) *verdict = ok ? 1 : 0;
  });
}

qcif_status qcif_run_check_measure(qcif_context* ctx, const char* h_json,
                                   const char* observable_json, char** out_json, int* verdict) {
  return guarded(ctx, [&] {
    Json in = qcif::parse_json(h_json, "check-measure");
    Json obs_j = qcif::parse_json(observable_json, "check-measure observable");
    qcif::BipartiteHamiltonian h = qcif::hamiltonian_from_json(in, ctx->cfg);
    qcif::Matrix obs = qcif::matrix_from_json(obs_j, "observable", /*require_herm=*/true);
    qcif::Implementability r = qcif::check_implementable(obs, h, ctx->cfg);
    Json out{{"implementable", r.implementable},
             {"cqnd_measurable", r.implementable},  // Theorem 3: same predicate
             {"residual", r.residual}};
    stamp(out, ctx->cfg);
    emit(ctx, out, out_json);
    if (verdict) *verdict = r.implementable ? 1 : 0;
  });
}

qcif_status qcif_run_synthesize(qcif_context* ctx, const char* kind, const char* in_json,
                                char** out_json) {
  return guarded(ctx, [&] {
    std::string k = kind ? kind : "";
    Json in = qcif::parse_json(in_json, "synthesize");
    Json out;
    if (k == "invert") {
      if (!in.contains("hamiltonian") || !in.contains("eps"))
        throw qcif::Error(qcif::Errc::parse,
                          "synthesize invert: need \"hamiltonian\" and \"eps\"");
      qcif::BipartiteHamiltonian h = qcif::hamiltonian_from_json(in["hamiltonian"], ctx->cfg);
      double eps = in["eps"].get<double>();
      qcif::IrreducibleGroup s = qcif::weyl_group(h.dim_c);
      qcif::ControlProcedure p = qcif::inversion_sequence(h, s, eps);
      qcif::EvaluatedProcedure ev = qcif::evaluate_procedure(p, h);
      qcif::Matrix target = qcif::expm_i(h.full, -eps);
      out = qcif::procedure_to_json(p);
      out["kind"] = "invert";
      out["eps"] = eps;
      out["group_order"] = s.elements.size();
      out["target"] = qcif::matrix_to_json(target);
      out["achieved_error"] = qcif::phase_aligned_distance(ev.u, target);
    } else if (k == "trotter") {
      if (!in.contains("terms") || !in.contains("m"))
        throw qcif::Error(qcif::Errc::parse, "synthesize trotter: need \"terms\" and \"m\"");
      std::vector<qcif::TrotterTerm> terms;
      for (const auto& t : in["terms"])
        terms.push_back({qcif::matrix_from_json(t.at("matrix"), "trotter term", true),
                         t.value("coeff", 1.0)});
      qcif::TrotterResult r = qcif::trotter_procedure(terms, in["m"].get<int>());
      out = Json{{"kind", "trotter"},
                 {"m", in["m"].get<int>()},
                 {"unitary", qcif::matrix_to_json(r.u)},
                 {"target", qcif::matrix_to_json(r.target)},
                 {"error_bound", r.error_bound},
                 {"achieved_error", r.achieved_error}};
    } else if (k == "commutator") {
      if (!in.contains("a") || !in.contains("b") || !in.contains("m"))
        throw qcif::Error(qcif::Errc::parse,
                          "synthesize commutator: need \"a\", \"b\" and \"m\"");
      qcif::Matrix a = qcif::matrix_from_json(in["a"], "commutator a", true);
      qcif::Matrix b = qcif::matrix_from_json(in["b"], "commutator b", true);
      int m = in["m"].get<int>();
      qcif::Matrix u = qcif::commutator_procedure(a, b, m);
      qcif::Matrix target = qcif::expm_i(qcif::commutator_i(a, b), 1.0);  // e^{-[A,B]}
      out = Json{{"kind", "commutator"},
                 {"m", m},
                 {"unitary", qcif::matrix_to_json(u)},
                 {"target", qcif::matrix_to_json(target)},
                 {"achieved_error", qcif::phase_aligned_distance(u, target)}};
    } else {
      throw qcif::Error(qcif::Errc::precondition,
                        "synthesize kind must be \"invert\", \"trotter\" or \"commutator\"");
    }
    stamp(out, ctx->cfg);
    emit(ctx, out, out_json);
  });
}

qcif_status qcif_run_simulate_measurement(qcif_context* ctx, const char* scheme_json,
                                          const char* state_json, char** out_json) {
  return guarded(ctx, [&] {
    qcif::MeasurementScheme scheme =
        qcif::scheme_from_json(qcif::parse_json(scheme_json, "simulate-measurement"));
    qcif::Vector psi = qcif::vector_from_json(
        qcif::parse_json(state_json, "simulate-measurement state"), "state");
    qcif::MeasurementOutcome realized = qcif::simulate_measurement(scheme, psi);
    qcif::MeasurementOutcome exact = qcif::simulate_measurement_exact(scheme, psi);

    const std::size_t k = scheme.pointer_states.size();
    std::vector<std::vector<double>> overlaps(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        overlaps[i][j] = std::abs(scheme.pointer_states[i].dot(scheme.pointer_states[j]));

    Json out = qcif::outcome_to_json(realized);
    out["exact_probabilities"] = exact.probabilities;
    out["pointer_overlaps"] = overlaps;
    out["max_disturbance"] = qcif::cqnd_check(scheme, scheme.observable, 20);
    out["eigenvalues"] = scheme.eigenvalues;
    stamp(out, ctx->cfg);
    emit(ctx, out, out_json);
  });
}

qcif_status qcif_run_compose(qcif_context* ctx, const char* op, const char* a_json,
                             const char* b_json, int m, char** out_json) {
  return guarded(ctx, [&] {
    std::string kind = op ? op : "";
    Json aj = qcif::parse_json(a_json, "compose a");
    Json bj = qcif::parse_json(b_json, "compose b");
    auto load = [](const Json& j, const char* where) {
      return qcif::MeasurementHamiltonian{
          qcif::matrix_from_json(j.at("controller"), where, true),
          qcif::matrix_from_json(j.at("system"), where, true)};
    };
    qcif::MeasurementHamiltonian ha = load(aj, "compose a");
    qcif::MeasurementHamiltonian hb = load(bj, "compose b");
    qcif::MeasurementScheme scheme =
        kind == "sum"          ? qcif::scheme_sum(ha, hb, m)
        : kind == "commutator" ? qcif::scheme_commutator(ha, hb, m)
        : kind == "jordan"
            ? qcif::scheme_jordan(ha, hb, m)
            : throw qcif::Error(qcif::Errc::precondition,
                                "compose op must be \"sum\", \"commutator\" or \"jordan\"");
    Json out = qcif::scheme_to_json(scheme);
    stamp(out, ctx->cfg);
    emit(ctx, out, out_json);
  });
}

qcif_status qcif_run_chain_check(qcif_context* ctx, const char* chain_json, int cut, int slow,
                                 char** out_json, int* verdict) {
  return guarded(ctx, [&] {
    qcif::ChainSpec spec = qcif::chain_from_json(qcif::parse_json(chain_json, "chain-check"));
    if (!slow && spec.total_dim() > 10)
      throw qcif::Error(qcif::Errc::precondition,
                        "chain-check: total dimension " + std::to_string(spec.total_dim()) +
                            " needs --slow (closure may take minutes)");
    qcif::Theorem2Report hyp = qcif::verify_theorem2_hypotheses(spec, ctx->cfg);
    qcif::CutResult cr = qcif::check_cut(spec, cut, ctx->cfg);

    Json hyp_json = Json::array();
    for (std::size_t j = 0; j < hyp.couplings.size(); ++j) {
      const auto& r = hyp.couplings[j];
      hyp_json.push_back(Json{{"bond", j},
                              {"a_traceless", r.a_traceless},
                              {"a_independent", r.a_independent},
                              {"b_generates_full", r.b_generates_full},
                              {"b_closure_dim", r.b_closure_dim},
                              {"gram_ratio", r.gram_ratio}});
    }
    Json out{{"site_dim_ok", hyp.site_dim_ok},
             {"hypotheses", hyp_json},
             {"hypotheses_pass", hyp.all_pass()},
             {"cut", cut},
             {"closure_dimension", cr.closure_dim},
             {"target_dimension", cr.target_dim},
             {"saturated", cr.saturated},
             {"controllable", cr.controllable}};
    stamp(out, ctx->cfg);
    emit(ctx, out, out_json);
    if (verdict) *verdict = cr.controllable ? 1 : 0;
  });
}

qcif_status qcif_run_selftest(qcif_context* ctx, int slow, char** out_json, int* all_pass) {
  return guarded(ctx, [&] {
    std::vector<qcif::CriterionResult> results = qcif::run_acceptance(ctx->cfg, slow != 0);
    bool ok = true;
    Json arr = Json::array();
    for (const auto& r : results) {
      ok = ok && r.pass;
      arr.push_back(Json{{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"details", r.details},
                         {"seconds", r.seconds}});
    }
    Json out{{"criteria", arr}, {"all_pass", ok}, {"slow", slow != 0}};
    stamp(out, ctx->cfg);
    emit(ctx, out, out_json);
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

}  // extern "C"
