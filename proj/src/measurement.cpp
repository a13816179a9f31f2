#include "qcif/measurement.hpp"

#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "qcif/operator_core.hpp"

namespace qcif {

namespace {

constexpr double kNormTol = 1e-12;

Matrix matrix_power(Matrix base, long exponent) {
  Matrix out = Matrix::Identity(base.rows(), base.cols());
  while (exponent > 0) {
    if (exponent & 1) out = out * base;
    base = base * base;
    exponent >>= 1;
  }
  return out;
}

// One Eq.-(1) block approximating e^{i tau i[P,Q]} with inner parameter m.
Matrix group_commutator_block(const Matrix& p, const Matrix& q, double tau, int m) {
  const double r = std::sqrt(tau) / m;
  Matrix step = expm_i(p, r) * expm_i(q, r) * expm_i(p, -r) * expm_i(q, -r);
  return matrix_power(step, static_cast<long>(m) * m);
}

// Commuting traceless diagonals g, g' with g ⊙ g' = clock_generator(n).
// Needs n >= 3: on C^2 any such product is a multiple of the identity.
std::pair<Matrix, Matrix> clock_factors(int n) {
  if (n < 3)
    throw Error(Errc::precondition,
                "clock factorization into traceless commuting diagonals needs dim_c >= 3");
  Eigen::VectorXd d(n), g(n);
  for (int q = 0; q < n; ++q) d(q) = (q + 1) - (n + 1) / 2.0;
  if (n % 2 == 1) {
    g.setOnes();
    g(n / 2) = -(n - 1);
  } else {
    for (int q = 0; q < n / 2; ++q) {
      double c = (q + 1 < n / 2) ? 1.0 : -(n / 2 - 1.0);
      g(q) = c;
      g(n - 1 - q) = c;
    }
  }
  Eigen::VectorXd gp(n);
  for (int q = 0; q < n; ++q) gp(q) = (g(q) != 0.0) ? d(q) / g(q) : 0.0;
  Matrix gm = Matrix::Zero(n, n), gpm = Matrix::Zero(n, n);
  gm.diagonal() = g.cast<Complex>();
  gpm.diagonal() = gp.cast<Complex>();
  return {gm, gpm};
}

Vector uniform_state(int n) {
  return Vector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
}

void require_state(const Vector& psi, int dim, const char* where) {
  if (psi.size() != dim)
    throw Error(Errc::dimension_mismatch, std::string(where) + ": state dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > kNormTol)
    throw Error(Errc::not_normalized, std::string(where) + ": state is not normalized");
}

// Smallest-denominator rational approximation of x within tol.
bool rationalize(double x, int max_den, double tol, long& num, long& den) {
  for (int q = 1; q <= max_den; ++q) {
    double p = std::round(x * q);
    if (std::abs(x - p / q) <= tol) {
      num = static_cast<long>(p);
      den = q;
      return true;
    }
  }
  return false;
}

MeasurementOutcome readout(const MeasurementScheme& scheme, const Vector& psi, const Matrix& u) {
  require_state(psi, scheme.dim_s, "simulate_measurement");
  Vector joint = Vector::Zero(Eigen::Index(scheme.dim_c) * scheme.dim_s);
  for (int q = 0; q < scheme.dim_c; ++q)
    joint.segment(Eigen::Index(q) * scheme.dim_s, scheme.dim_s) = scheme.controller_init(q) * psi;
  Vector state = u * joint;

  MeasurementOutcome out;
  double total = 0.0;
  for (const auto& pointer : scheme.pointer_states) {
    Vector amp = Vector::Zero(scheme.dim_s);
    for (int q = 0; q < scheme.dim_c; ++q)
      amp += std::conj(pointer(q)) * state.segment(Eigen::Index(q) * scheme.dim_s, scheme.dim_s);
    double prob = amp.squaredNorm();
    out.probabilities.push_back(prob);
    out.post_states.push_back(prob > 1e-14 ? Vector(amp / amp.norm()) : Vector(amp));
    total += prob;
  }
  out.leakage = 1.0 - total;
  return out;
}

MeasurementScheme composite_scheme(const std::string& kind, const Matrix& observable, int dim_c,
                                   int m) {
  require_hermitian(observable, "composite scheme");
  if (m < 1) throw Error(Errc::precondition, "composite scheme: m must be >= 1");
  const int dim_s = static_cast<int>(observable.rows());
  Spectrum spec = spectral_projections(observable);
  const int k = static_cast<int>(spec.values.size());
  if (dim_c < k)
    throw Error(Errc::precondition,
                "composite scheme: dim_c = " + std::to_string(dim_c) + " < " +
                    std::to_string(k) + " distinct eigenvalues of the composite observable");

  MeasurementScheme s;
  s.kind = kind;
  s.dim_c = dim_c;
  s.dim_s = dim_s;
  s.observable = observable;
  s.eigenvalues = spec.values;
  s.projections = spec.projections;
  s.controller_init = uniform_state(dim_c);
  s.trotter_m = m;
  s.effective_h = tensor(clock_generator(dim_c), observable);
  if (k <= 1) {
    s.evolution_time = 2.0 * M_PI / dim_c;
    s.notes.push_back("degenerate composite observable: single outcome");
  } else {
    s.evolution_time = find_orthogonal_time(spec.values, dim_c);
  }
  Matrix d = clock_generator(dim_c);
  for (double mu : spec.values)
    s.pointer_states.push_back(expm_i(d, mu * s.evolution_time) * s.controller_init);
  return s;
}

}  // namespace

Spectrum spectral_projections(const Matrix& a, double rel_tol) {
  require_square(a, "spectral_projections");
  require_hermitian(a, "spectral_projections");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  const auto& w = es.eigenvalues();
  const auto& v = es.eigenvectors();
  const double scale = std::max(1.0, std::max(std::abs(w(0)), std::abs(w(w.size() - 1))));
  Spectrum out;
  Eigen::Index i = 0;
  while (i < w.size()) {
    Eigen::Index j = i;
    while (j + 1 < w.size() && std::abs(w(j + 1) - w(i)) <= rel_tol * scale) ++j;
    Matrix p = Matrix::Zero(a.rows(), a.cols());
    double mean = 0.0;
    for (Eigen::Index q = i; q <= j; ++q) {
      p += v.col(q) * v.col(q).adjoint();
      mean += w(q);
    }
    out.values.push_back(mean / (j - i + 1));
    out.projections.push_back(p);
    i = j + 1;
  }
  return out;
}

Matrix clock_generator(int n) {
  if (n < 1) throw Error(Errc::precondition, "clock_generator: n must be >= 1");
  Matrix d = Matrix::Zero(n, n);
  for (int q = 0; q < n; ++q) d(q, q) = (q + 1) - (n + 1) / 2.0;
  return d;
}

Matrix MeasurementScheme::evolution_unitary() const {
  return realized_u ? *realized_u : expm_i(effective_h, evolution_time);
}

double MeasurementScheme::pointer_overlap() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < pointer_states.size(); ++i)
    for (std::size_t j = i + 1; j < pointer_states.size(); ++j)
      worst = std::max(worst, std::abs(pointer_states[i].dot(pointer_states[j])));
  return worst;
}

MeasurementScheme build_cqnd_scheme(const Matrix& a, int dim_c) {
  require_square(a, "build_cqnd_scheme");
  require_hermitian(a, "build_cqnd_scheme");
  Spectrum spec = spectral_projections(a);
  const int k = static_cast<int>(spec.values.size());
  if (dim_c < k)
    throw Error(Errc::precondition, "build_cqnd_scheme: dim_c = " + std::to_string(dim_c) +
                                        " < " + std::to_string(k) + " spectral projections");

  MeasurementScheme s;
  s.kind = "cqnd";
  s.dim_c = dim_c;
  s.dim_s = static_cast<int>(a.rows());
  s.observable = a;
  s.eigenvalues = spec.values;
  s.projections = spec.projections;
  s.controller_init = uniform_state(dim_c);
  s.evolution_time = 2.0 * M_PI / dim_c;

  Matrix d = clock_generator(dim_c);
  s.effective_h = Matrix::Zero(Eigen::Index(dim_c) * s.dim_s, Eigen::Index(dim_c) * s.dim_s);
  for (int j = 0; j < k; ++j) s.effective_h += (j + 1.0) * tensor(d, spec.projections[j]);
  for (int j = 0; j < k; ++j)
    s.pointer_states.push_back(expm_i(d, (j + 1.0) * s.evolution_time) * s.controller_init);

  for (int j = 0; j < k; ++j) {
    int rank = static_cast<int>(std::lround(spec.projections[j].trace().real()));
    if (rank > 1)
      s.notes.push_back("eigenvalue " + std::to_string(spec.values[j]) +
                        " grouped with multiplicity " + std::to_string(rank));
  }
  return s;
}

MeasurementOutcome simulate_measurement(const MeasurementScheme& scheme, const Vector& psi) {
  return readout(scheme, psi, scheme.evolution_unitary());
}

MeasurementOutcome simulate_measurement_exact(const MeasurementScheme& scheme, const Vector& psi) {
  return readout(scheme, psi, expm_i(scheme.effective_h, scheme.evolution_time));
}

double cqnd_check(const MeasurementScheme& scheme, const Matrix& a, int n_times) {
  require_square(a, "cqnd_check");
  require_hermitian(a, "cqnd_check");
  if (a.rows() != scheme.dim_s)
    throw Error(Errc::dimension_mismatch, "cqnd_check: observable dimension mismatch");
  if (n_times < 1) throw Error(Errc::precondition, "cqnd_check: n_times must be >= 1");

  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  double worst = 0.0;
  for (int t = 1; t <= n_times; ++t) {
    const double r = scheme.evolution_time * t / n_times;
    Matrix u = expm_i(scheme.effective_h, r);
    for (Eigen::Index col = 0; col < es.eigenvectors().cols(); ++col) {
      Vector psi = es.eigenvectors().col(col);
      Vector joint = Vector::Zero(Eigen::Index(scheme.dim_c) * scheme.dim_s);
      for (int q = 0; q < scheme.dim_c; ++q)
        joint.segment(Eigen::Index(q) * scheme.dim_s, scheme.dim_s) =
            scheme.controller_init(q) * psi;
      Vector state = u * joint;
      // overlap of each controller row with psi
      double kept = 0.0;
      for (int q = 0; q < scheme.dim_c; ++q)
        kept += std::norm(psi.dot(state.segment(Eigen::Index(q) * scheme.dim_s, scheme.dim_s)));
      worst = std::max(worst, 1.0 - kept);
    }
  }
  return worst;
}

double find_orthogonal_time(const std::vector<double>& mus, int n) {
  const int k = static_cast<int>(mus.size());
  if (k <= 1) return 2.0 * M_PI / n;
  std::vector<double> sorted = mus;
  std::sort(sorted.begin(), sorted.end());
  const double scale = std::max(1.0, std::abs(sorted.back() - sorted.front()));

  std::vector<double> diffs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) diffs.push_back(sorted[j] - sorted[i]);
  double base = *std::min_element(diffs.begin(), diffs.end());

  long lcm = 1;
  for (double d : diffs) {
    long num = 0, den = 0;
    if (!rationalize(d / base, 64, 1e-9 * scale / base, num, den))
      throw Error(Errc::precondition,
                  "composite observable has an incommensurate spectrum; no exactly "
                  "orthogonal pointer family exists for finite dim_c");
    lcm = std::lcm(lcm, den);
  }
  double delta = base / lcm;

  std::vector<long> labels;
  for (int i = 0; i < k; ++i) labels.push_back(std::lround((sorted[i] - sorted[0]) / delta));
  long g = 0;
  for (long l : labels) g = std::gcd(g, l);
  if (g > 1) {
    for (auto& l : labels) l /= g;
    delta *= g;
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if ((labels[j] - labels[i]) % n == 0)
        throw Error(Errc::precondition,
                    "pointer labels alias modulo dim_c = " + std::to_string(n) +
                        "; increase the controller dimension");
  return 2.0 * M_PI / (delta * n);
}

MeasurementScheme scheme_sum(const MeasurementHamiltonian& ha, const MeasurementHamiltonian& hb,
                             int m) {
  require_hermitian(ha.controller, "scheme_sum");
  require_hermitian(hb.controller, "scheme_sum");
  require_hermitian(ha.system, "scheme_sum");
  require_hermitian(hb.system, "scheme_sum");
  require_same_dim(ha.controller, hb.controller, "scheme_sum");
  require_same_dim(ha.system, hb.system, "scheme_sum");
  const int n = static_cast<int>(ha.controller.rows());

  MeasurementScheme s = composite_scheme("sum", ha.system + hb.system, n, m);
  s.notes.push_back("controller factors retargeted E -> D, F -> D (R-linear map on W)");
  if (!s.degenerate()) {
    Matrix d = clock_generator(n);
    Matrix da = tensor(d, ha.system), db = tensor(d, hb.system);
    const double tau = s.evolution_time / m;
    Matrix half = expm_i(da, tau / 2.0);
    s.realized_u = matrix_power(half * expm_i(db, tau) * half, m);
  } else {
    s.realized_u = s.evolution_unitary();
  }
  return s;
}

MeasurementScheme scheme_commutator(const MeasurementHamiltonian& ha,
                                    const MeasurementHamiltonian& hb, int m) {
  require_hermitian(ha.controller, "scheme_commutator");
  require_hermitian(hb.controller, "scheme_commutator");
  require_hermitian(ha.system, "scheme_commutator");
  require_hermitian(hb.system, "scheme_commutator");
  require_same_dim(ha.controller, hb.controller, "scheme_commutator");
  require_same_dim(ha.system, hb.system, "scheme_commutator");
  const int n = static_cast<int>(ha.controller.rows());

  Matrix c = commutator_i(ha.system, hb.system);
  MeasurementScheme s = composite_scheme("commutator", c, n, m);
  if (s.degenerate()) {
    s.notes.push_back("i[A,B] = 0: nothing to measure");
    s.realized_u = s.evolution_unitary();
    return s;
  }
  auto [g, gp] = clock_factors(n);
  s.notes.push_back(
      "controller factors retargeted to commuting traceless diagonals G, G' with G G' = D; "
      "Eq.-(1) blocks composed in " + std::to_string(m) + " subdivisions");
  Matrix p = tensor(g, ha.system), q = tensor(gp, hb.system);
  s.realized_u = matrix_power(group_commutator_block(p, q, s.evolution_time / m, m), m);
  return s;
}

MeasurementScheme scheme_jordan(const MeasurementHamiltonian& ha,
                                const MeasurementHamiltonian& hb, int m) {
  require_hermitian(ha.controller, "scheme_jordan");
  require_hermitian(hb.controller, "scheme_jordan");
  require_hermitian(ha.system, "scheme_jordan");
  require_hermitian(hb.system, "scheme_jordan");
  require_same_dim(ha.controller, hb.controller, "scheme_jordan");
  require_same_dim(ha.system, hb.system, "scheme_jordan");
  const int n = static_cast<int>(ha.controller.rows());

  Matrix ef = ha.controller * hb.controller - hb.controller * ha.controller;
  double scale = std::max(1.0, ha.controller.norm() * hb.controller.norm());
  if (ef.norm() <= 1e-12 * scale)
    throw Error(Errc::precondition,
                "scheme_jordan: controller factors E and F must not commute");

  Matrix c = ha.system * hb.system + hb.system * ha.system;
  MeasurementScheme s = composite_scheme("jordan", c, n, m);
  if (s.degenerate()) {
    s.notes.push_back("AB+BA is a multiple of the identity: single outcome");
    s.realized_u = s.evolution_unitary();
    return s;
  }
  if (n < 3)
    throw Error(Errc::precondition, "scheme_jordan: spin retargeting needs dim_c >= 3");
  auto spin = spin_operators(n);  // i[Jx, Jy] = -Jz = D
  s.notes.push_back(
      "controller pair retargeted to spin operators (Jx, Jy) with i[Jx,Jy] = D; cross terms "
      "Jx ⊗ B, Jy ⊗ A simulated by exchanging the controller factors");
  Matrix pa = tensor(spin[0], ha.system), qa = tensor(spin[1], hb.system);
  Matrix pb = tensor(spin[0], hb.system), qb = tensor(spin[1], ha.system);
  const double tau = s.evolution_time / m;
  Matrix half = group_commutator_block(pa, qa, tau / 2.0, m);
  Matrix step = half * group_commutator_block(pb, qb, tau, m) * half;
  s.realized_u = matrix_power(step, m);
  return s;
}

}  // namespace qcif
