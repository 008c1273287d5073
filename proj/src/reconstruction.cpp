#include "qnogo/reconstruction.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "qnogo/rng.hpp"

namespace qnogo {

namespace {

void check_orthonormal(const std::vector<StateVector>& basis, int dim) {
    if (static_cast<int>(basis.size()) != dim)
        throw NonOrthonormalBasis("reconstruct_density: basis must span the space (length " +
                                  std::to_string(dim) + ")");
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].dim() != dim) throw DimensionMismatch("reconstruct_density: basis dim");
        for (std::size_t k = 0; k <= j; ++k) {
            const Complex inner = basis[k].amplitudes().dot(basis[j].amplitudes());
            const Complex expected = (j == k) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(inner - expected) > 1e-9)
                throw NonOrthonormalBasis("reconstruct_density: basis is not orthonormal");
        }
    }
}

}  // namespace

Complex extend_complex(const ExpectationFunctional& e, const Matrix& a) {
    if (a.rows() != e.dim || a.cols() != e.dim)
        throw DimensionMismatch("extend_complex: operator dim " + std::to_string(a.rows()) +
                                " vs functional dim " + std::to_string(e.dim));
    const auto [plus, minus] = hermitian_split(a);
    return {e.evaluate(plus), e.evaluate(minus)};
}

ReconstructionResult reconstruct_density(const ExpectationFunctional& e,
                                         const std::vector<StateVector>& basis,
                                         const ReconstructionOptions& options) {
    const int d = e.dim;
    check_orthonormal(basis, d);

    // Entry (n,m) holds E on the rank-1 unit |phi_m><phi_n|; that index
    // order is the one that makes Tr(U A) reproduce E(A).
    Matrix coeffs(d, d);
    for (int n = 0; n < d; ++n) {
        for (int m = 0; m < d; ++m) {
            const Matrix unit = basis[m].amplitudes() * basis[n].amplitudes().adjoint();
            coeffs(n, m) = extend_complex(e, unit);
        }
    }
    Matrix frame(d, d);
    for (int n = 0; n < d; ++n) frame.col(n) = basis[n].amplitudes();
    ReconstructionResult result;
    result.candidate = frame * coeffs * frame.adjoint();

    result.trace_residual = std::abs(result.candidate.trace() - Complex(1.0, 0.0));

    const Matrix anti = 0.5 * (result.candidate - Matrix(result.candidate.adjoint()));
    result.anti_hermitian_residual = max_abs(anti);
    Matrix herm = 0.5 * (result.candidate + Matrix(result.candidate.adjoint()));
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NonConvergence("reconstruct_density: eigensolver did not converge");
    result.min_eigenvalue = solver.eigenvalues().minCoeff();

    // In finite dimension the rank-1 expansion already covers every
    // operator, so the trace form is certified on random probes instead of
    // a density argument.
    result.trace_form_probes = options.trace_form_probes;
    Rng rng(options.probe_seed);
    double worst = 0.0;
    for (int p = 0; p < options.trace_form_probes; ++p) {
        const Observable probe = random_observable(d, rng);
        const double direct = e.evaluate(probe);
        const Complex via_trace = (result.candidate * probe.matrix()).trace();
        worst = std::max(worst, std::abs(via_trace - Complex(direct, 0.0)));
    }
    result.trace_form_max_residual = worst;
    return result;
}

ReconstructionResult reconstruct_density(const ExpectationFunctional& e,
                                         const ReconstructionOptions& options) {
    return reconstruct_density(e, canonical_basis(e.dim), options);
}

AxiomReport verify_vn_axioms(const ExpectationFunctional& e, int probes, std::uint64_t seed) {
    if (probes < 1) throw Error("verify_vn_axioms: probes must be >= 1");
    const int d = e.dim;
    AxiomReport report;
    report.probes = probes;
    report.seed = seed;

    report.normalization_residual = std::abs(e.evaluate(Observable::identity(d)) - 1.0);

    Rng rng(seed);
    // linearity forces E(0) = 0; fold that in as the alpha = beta = 0 probe
    report.linearity_max_residual =
        std::abs(e.evaluate(Observable(Matrix::Zero(d, d))));

    for (int p = 0; p < probes; ++p) {
        Matrix a;
        Matrix b;
        if (d >= 2 && p % 4 == 3) {
            // a conjugated Pauli pair: commutator norm 2 exactly, so the
            // non-commuting regime is guaranteed to be probed
            Matrix x = Matrix::Zero(d, d);
            x(0, 1) = 1.0;
            x(1, 0) = 1.0;
            Matrix y = Matrix::Zero(d, d);
            y(0, 1) = Complex(0.0, -1.0);
            y(1, 0) = Complex(0.0, 1.0);
            const Matrix u = rng.unitary(d);
            a = u * x * u.adjoint();
            b = u * y * u.adjoint();
            a = 0.5 * (a + Matrix(a.adjoint()));
            b = 0.5 * (b + Matrix(b.adjoint()));
        } else {
            a = rng.hermitian(d);
            b = rng.hermitian(d);
        }
        const double alpha = rng.uniform(-2.0, 2.0);
        const double beta = rng.uniform(-2.0, 2.0);
        const Matrix combo = alpha * a + beta * b;
        const double lhs = e.evaluate(Observable(combo));
        const double rhs = alpha * e.evaluate(Observable(a)) + beta * e.evaluate(Observable(b));
        const double residual = std::abs(lhs - rhs);
        report.linearity_max_residual = std::max(report.linearity_max_residual, residual);
        if (max_abs(a * b - b * a) > 1e-9) {
            ++report.noncommuting_pairs;
            report.linearity_max_residual_noncommuting =
                std::max(report.linearity_max_residual_noncommuting, residual);
        }
    }

    report.projector_min_value = e.evaluate(projector_onto(random_state(d, rng)).as_observable());
    for (int p = 1; p < probes; ++p) {
        const double value =
            e.evaluate(projector_onto(random_state(d, rng)).as_observable());
        report.projector_min_value = std::min(report.projector_min_value, value);
    }

    report.normalization_pass = report.normalization_residual <= 1e-8;
    report.linearity_pass = report.linearity_max_residual <= 1e-8;
    report.positivity_pass = report.projector_min_value >= -1e-8;
    return report;
}

std::vector<StateVector> canonical_basis(int dim) {
    std::vector<StateVector> basis;
    basis.reserve(dim);
    for (int k = 0; k < dim; ++k) basis.push_back(StateVector::basis(dim, k));
    return basis;
}

std::vector<StateVector> random_orthonormal_basis(int dim, std::uint64_t seed) {
    Rng rng(seed);
    const Matrix u = rng.unitary(dim);
    std::vector<StateVector> basis;
    basis.reserve(dim);
    for (int k = 0; k < dim; ++k) {
        Vector col = u.col(k);
        col /= col.norm();
        basis.push_back(StateVector(std::move(col)));
    }
    return basis;
}

}  // namespace qnogo
