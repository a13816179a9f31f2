#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qcif {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

enum class Errc {
  dimension_mismatch,
  not_hermitian,
  not_unitary,
  not_traceless,
  not_normalized,
  precondition,
  parse,
  cap_exceeded,
  invalid_config,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Runtime knobs shared across modules. Defaults match the documented
// tolerances; validate() enforces the sanity window.
struct RunConfig {
  double rank_tol = 1e-9;    // Gram-Schmidt acceptance threshold, relative to input norm
  double member_tol = 1e-8;  // membership verdict threshold, relative
  int dim_cap = 81;          // joint-dimension cap for brute-force closures
  std::uint64_t seed = 20260809;
  int verbosity = 0;

  void validate() const {
    if (!(rank_tol > 0.0 && rank_tol < 1e-3))
      throw Error(Errc::invalid_config, "rank_tol must lie in (0, 1e-3)");
    if (!(member_tol > 0.0 && member_tol < 1e-3))
      throw Error(Errc::invalid_config, "member_tol must lie in (0, 1e-3)");
    if (dim_cap < 1 || dim_cap > 256)
      throw Error(Errc::invalid_config, "dim_cap must lie in [1, 256]");
  }
};

}  // namespace qcif
