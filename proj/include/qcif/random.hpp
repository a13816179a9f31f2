#pragma once

#include <random>

#include "qcif/schmidt.hpp"
#include "qcif/types.hpp"

namespace qcif {

// Seeded generator for the randomized test families (Gaussian Hermitian
// factors). Deterministic for a fixed seed.
class RandomGen {
 public:
  explicit RandomGen(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  Matrix hermitian(int d);
  Matrix traceless_hermitian(int d);
  Vector state(int d);  // Haar-ish unit vector
  Matrix unitary(int d);

  // Stripped interaction sum_{j<terms} A_j ⊗ B_j with Gaussian traceless
  // factors, canonicalized by schmidt_decompose.
  BipartiteHamiltonian bipartite(int dim_c, int dim_s, int terms, const RunConfig& cfg = {});

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qcif
