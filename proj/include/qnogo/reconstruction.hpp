#pragma once

#include <cstdint>
#include <vector>

#include "qnogo/functionals.hpp"
#include "qnogo/hilbert.hpp"

namespace qnogo {

/// Residuals from probing the three density-theorem axioms:
/// normalization E(1) = 1, real-linearity in the observable argument, and
/// nonnegativity on projectors. Verdicts are taken at 1e-8.
struct AxiomReport {
    double normalization_residual = 0.0;
    double linearity_max_residual = 0.0;
    // worst residual among probed pairs with a non-vanishing commutator,
    // reported separately because linearity across non-commuting pairs is
    // exactly the physically contested assumption
    double linearity_max_residual_noncommuting = 0.0;
    int noncommuting_pairs = 0;
    double projector_min_value = 0.0;
    bool normalization_pass = false;
    bool linearity_pass = false;
    bool positivity_pass = false;
    int probes = 0;
    std::uint64_t seed = 0;

    bool all_pass() const { return normalization_pass && linearity_pass && positivity_pass; }
};

/// The candidate density operator assembled from rank-1 functional values,
/// with the residuals that certify (or refute) the trace form.
struct ReconstructionResult {
    Matrix candidate;
    double trace_form_max_residual = 0.0;  // max |E(A) - Tr(candidate A)| over probes
    double min_eigenvalue = 0.0;           // of the Hermitized candidate
    double trace_residual = 0.0;           // |Tr(candidate) - 1|
    double anti_hermitian_residual = 0.0;  // discarded when Hermitizing
    int trace_form_probes = 0;
};

struct ReconstructionOptions {
    int trace_form_probes = 50;
    std::uint64_t probe_seed = 1932;
};

/// Extension of E to arbitrary operators: E(A+) + i E(A-) over the
/// Hermitian split. Agrees with E itself on Hermitian input.
Complex extend_complex(const ExpectationFunctional& e, const Matrix& a);

/// Assembles the density candidate from E evaluated on the rank-1 units of
/// an orthonormal basis, then certifies the trace form on random Hermitian
/// probes. The assembly is basis-independent up to numerical noise.
ReconstructionResult reconstruct_density(const ExpectationFunctional& e,
                                         const std::vector<StateVector>& basis,
                                         const ReconstructionOptions& options = {});

/// Canonical-basis convenience overload.
ReconstructionResult reconstruct_density(const ExpectationFunctional& e,
                                         const ReconstructionOptions& options = {});

/// Probes the three axioms on `probes` random linearity tuples and `probes`
/// random rank-1 projectors. Every fourth linearity pair is built
/// non-commuting by construction; E(0) = 0 is checked as the degenerate
/// alpha = beta = 0 probe. Deterministic given seed.
AxiomReport verify_vn_axioms(const ExpectationFunctional& e, int probes, std::uint64_t seed);

/// Orthonormal basis of C^dim as StateVectors, |0>, |1>, ...
std::vector<StateVector> canonical_basis(int dim);

/// Columns of a Haar-random unitary as StateVectors.
std::vector<StateVector> random_orthonormal_basis(int dim, std::uint64_t seed);

}  // namespace qnogo
