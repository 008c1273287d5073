#pragma once

#include <vector>

#include "qnogo/hilbert.hpp"

namespace qnogo {

/// Measurement statistics of one observable in one state. Eigenvalues are
/// merged within kEigenMergeTol, so each outcome appears once; probabilities
/// are clamped at -1e-12 and listed in ascending eigenvalue order.
struct OutcomeDistribution {
    struct Outcome {
        double eigenvalue;
        double probability;
    };
    std::vector<Outcome> outcomes;

    double total_probability() const;
    double mean() const;
};

/// <psi|O|psi>. An imaginary residue above 1e-10 means a non-Hermitian
/// matrix slipped through and is reported as NonRealExpectation.
double expectation(const StateVector& psi, const Observable& o);

OutcomeDistribution outcome_probabilities(const StateVector& psi, const Observable& o);

/// E(O^2) - E(O)^2, clamped to 0 from below.
double dispersion(const StateVector& psi, const Observable& o);

/// | f(E(O)) - E(f(O)) |.  Zero on eigenstates; positive in general, which
/// is the quantitative gap a dispersion-free completion would have to close.
double function_compatibility_gap(const StateVector& psi, const Observable& o,
                                  const Polynomial& f);

}  // namespace qnogo
