#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnogo/reconstruction.hpp"

namespace qnogo {

/// Candidate dispersion-free valuation: observable label -> measured value.
/// Insertion order is preserved; values are meant to be eigenvalues of the
/// labelled observables (within 1e-8), which enumeration guarantees.
struct ValueAssignment {
    std::vector<std::pair<std::string, double>> entries;
};

enum class ConstantBranch { zero, one };

/// Outcome of pushing a constant projector valuation through the density
/// reconstruction: the implied trace lands on 0 or d, never on 1.
struct ContradictionReport {
    ConstantBranch branch;
    double implied_trace = 0.0;
    double required_trace = 1.0;
    bool conflict = false;
    int dim = 0;
};

/// One additivity violation: assignment, the target value, the linear
/// combination it should equal, and the gap between them.
struct ViolationRecord {
    ValueAssignment assignment;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
};

struct JointSearchResult {
    std::optional<ValueAssignment> satisfying;
    std::vector<ViolationRecord> violations;  // ascending gap, then assignment order
    std::size_t tuples_searched = 0;

    bool found_satisfying() const { return satisfying.has_value(); }
};

/// Evaluates E on rank-1 projectors and classifies each value to {0, 1}.
/// A value with |v^2 - v| > 1e-8 cannot come from a dispersion-free state
/// and is reported as DichotomyViolation carrying the witness. For Born
/// functionals on non-eigenstate projectors that throw IS the expected
/// outcome.
std::vector<double> projector_valuation_dichotomy(const ExpectationFunctional& e,
                                                  const std::vector<Projector>& projectors);

/// The expectation functional a constant projector valuation induces:
/// E(A) = c * Tr(A). Feeding it to reconstruct_density yields the implied
/// operator of the contradiction argument.
ExpectationFunctional constant_valuation(int dim, ConstantBranch branch);

/// Builds the operator the constant valuation implies (0 or the identity)
/// and compares its trace against the required unit trace. Conflict is
/// unavoidable for every dim >= 2.
ContradictionReport vn_contradiction(int dim, ConstantBranch branch);

/// Spin components along x, y and their bisector b, in spin units
/// (eigenvalues +-1/2). Exposed for reporting.
struct SpinTriple {
    Observable sigma_x;
    Observable sigma_y;
    Observable sigma_b;
};
SpinTriple spin_triple();

/// All eight sign assignments to (s_x, s_y, s_b) scored against
/// s_b = (s_x + s_y)/sqrt(2). None closes the gap: the minimum over the
/// eight is 1/sqrt(2) - 1/2. Records come back ascending by gap.
std::vector<ViolationRecord> spin_additivity_counterexample();

/// Exhaustive search for an eigenvalue assignment consistent with
/// sum_k c_k O_k = O_target (target last). The operator identity itself is
/// checked first at 1e-8; assignment tuples run over merged spectra.
JointSearchResult joint_assignment_search(const std::vector<Observable>& observables,
                                          const std::vector<double>& coefficients,
                                          const std::vector<std::string>& labels = {});

}  // namespace qnogo
