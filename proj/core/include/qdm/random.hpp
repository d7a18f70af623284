#pragma once

#include <random>

#include "qdm/states.hpp"

namespace qdm {

/// Seeded generators for random matrices and states, used by the invariant
/// check suites and the tests.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

    Complex complex_gaussian() { return {gaussian(), gaussian()}; }

    Matrix ginibre(int dim);
    Matrix hermitian(int dim);
    /// Haar-distributed via QR of a Ginibre matrix with phase fixing.
    Matrix unitary(int dim);
    Vector state_vector(int dim);
    Eigen::Vector3d unit_vector();

    DensityMatrix density(Dims dims);
    DensityMatrix pure(Dims dims);
    /// Random two-qubit classical-quantum state (random flag basis on A,
    /// random conditional states on B).
    ClassicalQuantumSpec cq_spec();

  private:
    std::mt19937_64 engine_;
};

}  // namespace qdm
