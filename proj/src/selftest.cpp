#include "qcif/selftest.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "qcif/closure.hpp"
#include "qcif/interface_algebra.hpp"
#include "qcif/measurement.hpp"
#include "qcif/operator_core.hpp"
#include "qcif/random.hpp"
#include "qcif/schmidt.hpp"
#include "qcif/spin_chain.hpp"
#include "qcif/subspace.hpp"
#include "qcif/synthesis.hpp"

namespace qcif {

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

struct Check {
  bool pass = true;
  std::ostringstream details;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details << "FAIL[" << what << "] ";
    }
  }
};

using Clock = std::chrono::steady_clock;

BipartiteHamiltonian xy_model(const RunConfig& cfg) {
  auto pauli = pauli_matrices();
  Matrix h = tensor(pauli[0], pauli[0]) + tensor(pauli[1], pauli[1]);
  return schmidt_decompose(h, 2, 2, cfg);
}

// criterion 1: xy-model interface algebra, dimension 10 and the paper's basis
// directions (read in the toolkit's controller-first factor order).
CriterionResult criterion_xy(const RunConfig& cfg) {
  Check c;
  auto pauli = pauli_matrices();
  Matrix id2 = Matrix::Identity(2, 2);
  OperatorSubspace brute = interface_bruteforce(xy_model(cfg), cfg);
  c.expect(brute.size() == 10, "dimension == 10, got " + std::to_string(brute.size()));
  std::vector<Matrix> directions;
  for (const auto& s : pauli) directions.push_back(tensor(s, pauli[0]));
  for (const auto& s : pauli) directions.push_back(tensor(s, pauli[1]));
  directions.push_back(tensor(id2, pauli[2]));
  for (const auto& s : pauli) directions.push_back(tensor(s, id2));
  double worst = 0.0;
  for (const auto& dir : directions) worst = std::max(worst, brute.member(dir).residual);
  c.expect(worst <= 1e-8, "membership residual of the 10 directions");
  c.details << "dim=" << brute.size() << " max_residual=" << worst;
  return {1, "xy-model interface algebra (dim 10 + basis membership)", c.pass,
          c.details.str(), 0};
}

// criterion 2: brute-force / structural agreement on random Hamiltonians.
CriterionResult criterion_theorem1(const RunConfig& cfg) {
  Check c;
  RandomGen rng(cfg.seed + 2);
  const std::pair<int, int> dims[] = {{3, 2}, {3, 3}, {4, 2}, {4, 3}};
  int count = 0;
  double worst = 0.0;
  for (const auto& [dc, ds] : dims) {
    for (int rep = 0; rep < 5; ++rep, ++count) {
      BipartiteHamiltonian h = rng.bipartite(dc, ds, 2 + rep % 2, cfg);
      InterfaceAnalysis a = interface_structural(h, cfg);
      c.expect(a.brute.has_value() && a.structural.has_value(),
               "both routes computed at (" + std::to_string(dc) + "," + std::to_string(ds) + ")");
      if (!a.brute || !a.structural) continue;
      c.expect(a.agree.value_or(false), "agreement at (" + std::to_string(dc) + "," +
                                            std::to_string(ds) + ") rep " + std::to_string(rep));
      worst = std::max(worst, a.max_mutual_residual);
    }
  }
  c.details << count << " Hamiltonians, max mutual residual=" << worst;
  return {2, "Theorem 1 equivalence on random Hamiltonians", c.pass, c.details.str(), 0};
}

// criterion 3: Lemma 1 group averaging.
CriterionResult criterion_lemma1(const RunConfig& cfg) {
  Check c;
  RandomGen rng(cfg.seed + 3);
  double worst_ratio = 0.0;
  for (int dc : {2, 3, 4}) {
    IrreducibleGroup s = weyl_group(dc);
    for (int rep = 0; rep < 10; ++rep) {
      BipartiteHamiltonian h = rng.bipartite(dc, 2, 2, cfg);
      double avg = group_average(h, s).norm();
      double bound = 1e-10 * s.elements.size() * h.full.norm();
      worst_ratio = std::max(worst_ratio, avg / bound);
      c.expect(avg <= bound, "group average zero at dim " + std::to_string(dc));
    }
  }
  c.details << "worst |avg| / bound = " << worst_ratio;
  return {3, "Lemma 1: Weyl-group average annihilates stripped Hamiltonians", c.pass,
          c.details.str(), 0};
}

// criterion 4: inversion-sequence error scaling O(eps^2).
CriterionResult criterion_inversion(const RunConfig& cfg) {
  Check c;
  RandomGen rng(cfg.seed + 4);
  IrreducibleGroup s = weyl_group(3);
  const std::vector<double> eps = {0.2, 0.1, 0.05, 0.025};
  for (int rep = 0; rep < 5; ++rep) {
    BipartiteHamiltonian h = rng.bipartite(3, 2, 2, cfg);
    // normalize to spectral norm 1 so all eps sit in the asymptotic regime
    h = schmidt_decompose(h.full / spectral_norm(h.full), 3, 2, cfg);
    std::vector<double> errs;
    for (double e : eps) {
      ControlProcedure p = inversion_sequence(h, s, e);
      EvaluatedProcedure ev = evaluate_procedure(p, h);
      errs.push_back(phase_aligned_distance(ev.u, expm_i(h.full, -e)));
    }
    double slope = loglog_slope(eps, errs);
    c.expect(slope >= 1.8 && slope <= 2.2,
             "slope in [1.8,2.2], got " + std::to_string(slope));
    c.details << "slope[" << rep << "]=" << slope << " ";
  }
  return {4, "inversion sequence error is O(eps^2)", c.pass, c.details.str(), 0};
}

// criterion 5: Trotter and Eq.-(1) convergence.
CriterionResult criterion_product_formulas(const RunConfig& cfg) {
  Check c;
  auto pauli = pauli_matrices();
  const std::vector<double> ms = {8, 16, 32, 64};

  std::vector<double> terrs;
  for (double m : ms) {
    TrotterResult r =
        trotter_procedure({{pauli[0], 1.0}, {pauli[2], 1.0}}, static_cast<int>(m));
    terrs.push_back(r.achieved_error);
    c.expect(r.achieved_error <= r.error_bound + 1e-12, "Trotter bound holds");
  }
  double tslope = loglog_slope(ms, terrs);
  c.expect(std::abs(tslope + 1.0) <= 0.3, "Trotter slope -1±0.3, got " + std::to_string(tslope));

  Matrix target = expm_i(commutator_i(pauli[0], pauli[1]), 1.0);  // e^{-2 i sz}
  std::vector<double> cerrs;
  for (double m : ms)
    cerrs.push_back(
        phase_aligned_distance(commutator_procedure(pauli[0], pauli[1], int(m)), target));
  for (std::size_t i = 0; i + 1 < cerrs.size(); ++i)
    c.expect(cerrs[i] > cerrs[i + 1], "commutator error monotone decreasing");
  double cslope = loglog_slope(ms, cerrs);
  c.expect(std::abs(cslope + 1.0) <= 0.3,
           "commutator slope -1±0.3, got " + std::to_string(cslope));
  c.expect(cerrs.back() <= 0.05, "sigma_x/sigma_y distance at m=64 <= 0.05");
  c.details << "trotter_slope=" << tslope << " commutator_slope=" << cslope
            << " dist(m=64)=" << cerrs.back();
  return {5, "Trotter and group-commutator convergence", c.pass, c.details.str(), 0};
}

// criterion 6: CQND schemes (Born rule, pointer orthogonality, intermediate
// non-disturbance, repeatability).
CriterionResult criterion_cqnd(const RunConfig& cfg) {
  Check c;
  RandomGen rng(cfg.seed + 6);
  auto pauli = pauli_matrices();
  Matrix deg(3, 3);
  deg.setZero();
  deg.diagonal() << 5, 5, -1;
  struct Case {
    Matrix a;
    int dim_c;
  };
  std::vector<Case> cases = {{pauli[2], 3}, {deg, 3}, {rng.hermitian(3), 4}};
  double worst_born = 0.0, worst_overlap = 0.0, worst_disturbance = 0.0, worst_repeat = 0.0;
  for (const auto& [a, dim_c] : cases) {
    MeasurementScheme scheme = build_cqnd_scheme(a, dim_c);
    worst_overlap = std::max(worst_overlap, scheme.pointer_overlap());
    Spectrum spec = spectral_projections(a);
    const int dim_s = static_cast<int>(a.rows());
    for (int rep = 0; rep < 50; ++rep) {
      Vector psi = rng.state(dim_s);
      MeasurementOutcome out = simulate_measurement(scheme, psi);
      for (std::size_t j = 0; j < spec.projections.size(); ++j) {
        double born = (psi.adjoint() * spec.projections[j] * psi)(0).real();
        worst_born = std::max(worst_born, std::abs(out.probabilities[j] - born));
        // repeatability: remeasure the post state
        if (out.probabilities[j] > 1e-6) {
          MeasurementOutcome again = simulate_measurement(scheme, out.post_states[j]);
          worst_repeat = std::max(worst_repeat, std::abs(again.probabilities[j] - 1.0));
        }
      }
    }
    worst_disturbance = std::max(worst_disturbance, cqnd_check(scheme, a, 20));
  }
  c.expect(worst_born <= 1e-9, "Born rule to 1e-9");
  c.expect(worst_overlap <= 1e-9, "pointer orthogonality to 1e-9");
  c.expect(worst_disturbance <= 1e-9, "intermediate-time disturbance <= 1e-9");
  c.expect(worst_repeat <= 1e-9, "repeatability to 1e-9");
  c.details << "born=" << worst_born << " overlap=" << worst_overlap
            << " disturbance=" << worst_disturbance << " repeat=" << worst_repeat;
  return {6, "CQND schemes: Born rule, pointers, non-disturbance, repeatability", c.pass,
          c.details.str(), 0};
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
  return 0.5 * tv;
}

// criterion 7: composite schemes converge to the composite observable's Born
// distribution.
CriterionResult criterion_composite(const RunConfig& cfg) {
  Check c;
  auto pauli = pauli_matrices();
  auto gm = gell_mann_matrices();
  const std::vector<int> ms = {8, 16, 32, 64};

  struct Case {
    std::string name;
    std::function<MeasurementScheme(int)> make;
    Vector psi;
    std::vector<double> frozen;  // expected exact Born distribution; empty = derive
  };
  Matrix d3 = clock_generator(3);
  Vector e0(2), plus(2), e1(3);
  e0 << 1, 0;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  e1 << 0, 1, 0;

  std::vector<Case> cases;
  cases.push_back({"A+B (sz,sx)",
                   [&](int m) {
                     return scheme_sum({d3, pauli[2]}, {d3, pauli[0]}, m);
                   },
                   e0,
                   // eigenvalues of sz+sx are ±sqrt2, ascending order
                   {std::sin(M_PI / 8) * std::sin(M_PI / 8),
                    std::cos(M_PI / 8) * std::cos(M_PI / 8)}});
  cases.push_back({"i[A,B] (sx,sy)",
                   [&](int m) {
                     return scheme_commutator({d3, pauli[0]}, {d3, pauli[1]}, m);
                   },
                   plus,
                   {}});
  cases.push_back({"AB+BA (l1,l4)",
                   [&](int m) {
                     return scheme_jordan({gm[0], gm[3]}, {gm[1], gm[4]}, m);
                   },
                   e1,
                   {}});

  for (auto& cs : cases) {
    std::vector<double> tvs;
    for (int m : ms) {
      MeasurementScheme scheme = cs.make(m);
      MeasurementOutcome trotterized = simulate_measurement(scheme, cs.psi);
      MeasurementOutcome exact = simulate_measurement_exact(scheme, cs.psi);
      // exact Born from the spectral projections, independent of the readout
      std::vector<double> born;
      for (const auto& p : scheme.projections)
        born.push_back((cs.psi.adjoint() * p * cs.psi)(0).real());
      c.expect(total_variation(exact.probabilities, born) <= 1e-9,
               cs.name + ": exact evolution reproduces Born");
      if (!cs.frozen.empty())
        c.expect(total_variation(born, cs.frozen) <= 1e-12, cs.name + ": frozen Born values");
      tvs.push_back(total_variation(trotterized.probabilities, born));
    }
    for (std::size_t i = 0; i + 1 < tvs.size(); ++i)
      c.expect(tvs[i] > tvs[i + 1], cs.name + ": TV monotone decreasing");
    c.expect(tvs.back() <= 1e-3, cs.name + ": TV at m=64 <= 1e-3");
    c.details << cs.name << " TV(m=64)=" << tvs.back() << "; ";
  }

  // i[sx,sy] = -2 sz: statistics must match a relabeled sz measurement
  MeasurementScheme comm = scheme_commutator({d3, pauli[0]}, {d3, pauli[1]}, 64);
  c.expect(comm.eigenvalues.size() == 2 && std::abs(comm.eigenvalues[0] + 2) < 1e-9 &&
               std::abs(comm.eigenvalues[1] - 2) < 1e-9,
           "i[sx,sy] eigenvalues are -/+2");
  // AB+BA for (l1,l4) equals l6
  c.expect((gm[0] * gm[3] + gm[3] * gm[0] - gm[5]).norm() <= 1e-12, "l1 l4 + l4 l1 == l6");
  return {7, "composite schemes: A+B, i[A,B], AB+BA statistics", c.pass, c.details.str(), 0};
}

ChainSpec gell_mann_chain(int sites) {
  auto gm = gell_mann_matrices();
  ChainSpec spec;
  spec.site_dims.assign(sites, 3);
  for (int b = 0; b + 1 < sites; ++b) {
    std::vector<ChainCoupling> bond;
    for (const auto& l : gm) bond.push_back({l, l});
    spec.couplings.push_back(bond);
  }
  return spec;
}

// criterion 8: Theorem 2 at desk scale.
CriterionResult criterion_theorem2(const RunConfig& cfg, bool slow) {
  Check c;
  auto gm = gell_mann_matrices();

  ChainSpec two = gell_mann_chain(2);
  Theorem2Report hyp = verify_theorem2_hypotheses(two, cfg);
  c.expect(hyp.all_pass(), "hypotheses pass for the full Gell-Mann coupling");
  CutResult cut = check_cut(two, 1, cfg);
  c.expect(cut.controllable && cut.closure_dim == 80,
           "2-qutrit closure dim 80, got " + std::to_string(cut.closure_dim));

  ChainSpec bad;
  bad.site_dims = {3, 3};
  bad.couplings = {{{gm[2], gm[2]}, {gm[7], gm[7]}}};  // commuting diagonal B side
  Theorem2Report bad_hyp = verify_theorem2_hypotheses(bad, cfg);
  c.expect(!bad_hyp.couplings[0].b_generates_full, "commuting B side fails the hypothesis");
  CutResult bad_cut = check_cut(bad, 1, cfg);
  c.expect(!bad_cut.controllable && bad_cut.closure_dim < 80,
           "commuting B side not controllable, dim " + std::to_string(bad_cut.closure_dim));
  c.details << "2-qutrit dim=" << cut.closure_dim << " bad dim=" << bad_cut.closure_dim;

  if (slow) {
    ChainSpec three = gell_mann_chain(3);
    CutResult cut3 = check_cut(three, 1, cfg);
    c.expect(cut3.controllable && cut3.closure_dim == 728,
             "3-qutrit closure dim 728, got " + std::to_string(cut3.closure_dim));
    c.details << " 3-qutrit dim=" << cut3.closure_dim;
  } else {
    c.details << " (3-qutrit stress case under --slow)";
  }
  return {8, "Theorem 2: first site controls the chain", c.pass, c.details.str(), 0};
}

// criterion 9: Theorem 3 membership consistency for B = span{1, sz}.
CriterionResult criterion_theorem3(const RunConfig& cfg) {
  Check c;
  auto pauli = pauli_matrices();
  auto gm = gell_mann_matrices();
  Matrix h_full = tensor(gm[2], pauli[2]);  // lambda_3 ⊗ sz on 3⊗2
  BipartiteHamiltonian h = schmidt_decompose(h_full, 3, 2, cfg);

  Implementability yes = check_implementable(pauli[2], h, cfg);
  Implementability no = check_implementable(pauli[0], h, cfg);
  c.expect(yes.implementable, "sz implementable");
  c.expect(!no.implementable, "sx not implementable");

  OperatorSubspace brute = interface_bruteforce(h, cfg);
  double min_residual = 1.0;
  for (const auto& w : traceless_hermitian_basis(3)) {
    double r = brute.member(tensor(w, pauli[0])).residual;
    min_residual = std::min(min_residual, r);
  }
  c.expect(min_residual > 0.1, "no D ⊗ sx inside the brute-force interface algebra");
  c.details << "sz_residual=" << yes.residual << " sx_residual=" << no.residual
            << " min_Dsx_residual=" << min_residual;
  return {9, "Theorem 3: implementable iff inside the coupling algebra", c.pass,
          c.details.str(), 0};
}

// criterion 10: dim_c = 2 counterexample guard.
CriterionResult criterion_counterexample(const RunConfig& cfg) {
  Check c;
  BipartiteHamiltonian h = xy_model(cfg);
  bool refused = false;
  try {
    interface_structural(h, cfg);
  } catch (const Error& e) {
    refused = e.code() == Errc::precondition;
  }
  c.expect(refused, "structural formula refused at dim_c = 2");
  InterfaceAnalysis a = analyze_interface(h, cfg);
  c.expect(!a.structural.has_value(), "no structural basis emitted");
  c.expect(a.brute && a.brute->size() == 10, "brute dimension 10");
  c.expect(a.naive_structural_dim == 15, "naive structural count 15");
  c.expect(a.brute->size() != a.naive_structural_dim, "10 != 15 recorded");
  c.details << "brute=" << (a.brute ? a.brute->size() : -1)
            << " naive_structural=" << a.naive_structural_dim;
  return {10, "counterexample guard at dim_c = 2", c.pass, c.details.str(), 0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, bool slow) {
  cfg.validate();
  std::vector<CriterionResult> results;
  auto timed = [&](auto&& fn) {
    auto t0 = Clock::now();
    CriterionResult r = fn();
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    results.push_back(std::move(r));
  };
  timed([&] { return criterion_xy(cfg); });
  timed([&] { return criterion_theorem1(cfg); });
  timed([&] { return criterion_lemma1(cfg); });
  timed([&] { return criterion_inversion(cfg); });
  timed([&] { return criterion_product_formulas(cfg); });
  timed([&] { return criterion_cqnd(cfg); });
  timed([&] { return criterion_composite(cfg); });
  timed([&] { return criterion_theorem2(cfg, slow); });
  timed([&] { return criterion_theorem3(cfg); });
  timed([&] { return criterion_counterexample(cfg); });
  return results;
}

}  // namespace qcif
