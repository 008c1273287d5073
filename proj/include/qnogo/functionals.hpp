#pragma once

#include <functional>
#include <string>

#include "qnogo/born.hpp"
#include "qnogo/hilbert.hpp"

namespace qnogo {

/// A black-box real-valued map over observables for one fixed state.
/// evaluate must be deterministic; callers probe it, so the same observable
/// has to give the same number every time.
struct ExpectationFunctional {
    int dim;
    std::function<double(const Observable&)> evaluate;
    std::string label;

    double operator()(const Observable& o) const { return evaluate(o); }
};

/// E(A) = <psi|A|psi>.
ExpectationFunctional born_functional(const StateVector& psi);

/// E(A) = Tr(rho A).
ExpectationFunctional mixed_functional(const DensityOperator& rho);

/// E(A) = Tr(A)/d, the maximally mixed expectation.
ExpectationFunctional trace_functional(int dim);

/// E(A) = largest eigenvalue of A. Satisfies normalization and projector
/// positivity but not linearity; used as the standard failing probe target.
ExpectationFunctional max_eigenvalue_functional(int dim);

}  // namespace qnogo
