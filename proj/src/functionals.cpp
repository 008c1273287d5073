#include "qnogo/functionals.hpp"

#include <Eigen/Eigenvalues>

namespace qnogo {

ExpectationFunctional born_functional(const StateVector& psi) {
    return {psi.dim(), [psi](const Observable& o) { return expectation(psi, o); },
            "born(d=" + std::to_string(psi.dim()) + ")"};
}

ExpectationFunctional mixed_functional(const DensityOperator& rho) {
    const Matrix m = rho.matrix();
    return {rho.dim(),
            [m](const Observable& o) { return (m * o.matrix()).trace().real(); },
            "mixed(d=" + std::to_string(rho.dim()) + ")"};
}

ExpectationFunctional trace_functional(int dim) {
    return {dim,
            [dim](const Observable& o) { return o.matrix().trace().real() / dim; },
            "trace(d=" + std::to_string(dim) + ")"};
}

ExpectationFunctional max_eigenvalue_functional(int dim) {
    return {dim,
            [](const Observable& o) {
                Eigen::SelfAdjointEigenSolver<Matrix> solver(o.matrix(),
                                                             Eigen::EigenvaluesOnly);
                if (solver.info() != Eigen::Success)
                    throw NonConvergence("max_eigenvalue_functional: eigensolver failed");
                return solver.eigenvalues().maxCoeff();
            },
            "maxeig(d=" + std::to_string(dim) + ")"};
}

}  // namespace qnogo
