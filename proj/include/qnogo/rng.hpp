#pragma once

#include <cstdint>
#include <random>

#include "qnogo/types.hpp"

namespace qnogo {

class StateVector;
class Observable;

// Deterministic random source. Gaussian sampling is done by explicit
// Box-Muller over bit-derived uniforms rather than std::normal_distribution,
// whose output sequence is implementation-defined; fixed seeds must mean
// fixed outputs everywhere results are reported.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal.
    double gaussian();

    /// Re(z), Im(z) independent standard normals.
    Complex complex_gaussian();

    /// Exactly Hermitian d x d matrix with GUE-like scale.
    Matrix hermitian(int dim);

    /// Haar-distributed unitary (QR of a complex Gaussian, phases fixed).
    Matrix unitary(int dim);

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-uniform state: d complex Gaussian amplitudes, normalized.
/// Deterministic for fixed (dim, seed).
StateVector random_state(int dim, std::uint64_t seed);

/// Same draw protocol, but advancing a caller-owned stream.
StateVector random_state(int dim, Rng& rng);

Observable random_observable(int dim, Rng& rng);

}  // namespace qnogo
