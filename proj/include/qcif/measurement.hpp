#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcif/types.hpp"

namespace qcif {

// Spectral decomposition with eigenvalues grouped at relative tolerance.
struct Spectrum {
  std::vector<double> values;       // one per group, ascending
  std::vector<Matrix> projections;  // complete orthogonal family
};
Spectrum spectral_projections(const Matrix& a, double rel_tol = 1e-9);

// Traceless clock generator diag(1..n) - ((n+1)/2)·1.
Matrix clock_generator(int n);

// A pointer measurement: evolve |phi> ⊗ |psi> under the effective Hamiltonian
// for evolution_time, then read out against the orthogonal pointer family.
struct MeasurementScheme {
  std::string kind;  // "cqnd", "sum", "commutator", "jordan"
  int dim_c = 0;
  int dim_s = 0;
  Matrix observable;                // measured observable on H_s
  std::vector<double> eigenvalues;  // grouped spectrum
  std::vector<Matrix> projections;
  Matrix effective_h;  // target generator on the joint space
  Vector controller_init;
  double evolution_time = 0.0;
  std::vector<Vector> pointer_states;
  std::optional<Matrix> realized_u;  // product-formula unitary (composite schemes)
  int trotter_m = 0;
  std::vector<std::string> notes;

  bool degenerate() const { return projections.size() <= 1; }
  // Product-formula unitary when present, else exp(i effective_h s).
  Matrix evolution_unitary() const;
  // max off-diagonal |<phi_i|phi_j>|.
  double pointer_overlap() const;
};

// Theorem-3 (3 => 1) construction: effective H = sum_j j (D ⊗ P_j), uniform
// controller start, s = 2 pi / dim_c. Requires dim_c >= number of spectral
// projections.
MeasurementScheme build_cqnd_scheme(const Matrix& a, int dim_c);

struct MeasurementOutcome {
  std::vector<double> probabilities;
  std::vector<Vector> post_states;  // on H_s; zero vector for zero-probability branches
  double leakage = 0.0;             // 1 - sum probabilities
};
MeasurementOutcome simulate_measurement(const MeasurementScheme& scheme, const Vector& psi);
// Same readout but under the exact target evolution (ignores realized_u).
MeasurementOutcome simulate_measurement_exact(const MeasurementScheme& scheme, const Vector& psi);

// Max over eigenvectors of a and over n_times intermediate times r in (0, s]
// of 1 - |(1 ⊗ |psi><psi|) state(r)|^2 under the effective-Hamiltonian flow.
double cqnd_check(const MeasurementScheme& scheme, const Matrix& a, int n_times);

// Measurement Hamiltonian E ⊗ A (controller factor, system observable).
struct MeasurementHamiltonian {
  Matrix controller;
  Matrix system;
};

// Composite schemes (§-style constructions): controller sides are retargeted
// so the effective generator is exactly D ⊗ (composite observable); the
// realized unitary is a product-formula approximation with parameter m.
MeasurementScheme scheme_sum(const MeasurementHamiltonian& ha, const MeasurementHamiltonian& hb,
                             int m);
MeasurementScheme scheme_commutator(const MeasurementHamiltonian& ha,
                                    const MeasurementHamiltonian& hb, int m);
MeasurementScheme scheme_jordan(const MeasurementHamiltonian& ha,
                                const MeasurementHamiltonian& hb, int m);

// Evolution time making e^{i mu_j D s}|phi> exactly orthogonal: eigenvalue
// differences are rationalized to a base unit delta and s = 2 pi/(delta n).
// Throws when the spectrum is incommensurate or labels alias mod n.
double find_orthogonal_time(const std::vector<double>& mus, int n);

}  // namespace qcif
