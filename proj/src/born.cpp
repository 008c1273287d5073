#include "qnogo/born.hpp"

#include <cmath>

namespace qnogo {

namespace {
constexpr double kProbabilityClamp = -1e-12;
constexpr double kImagResidueTol = 1e-10;
}  // namespace

double OutcomeDistribution::total_probability() const {
    double total = 0.0;
    for (const auto& o : outcomes) total += o.probability;
    return total;
}

double OutcomeDistribution::mean() const {
    double mean = 0.0;
    for (const auto& o : outcomes) mean += o.eigenvalue * o.probability;
    return mean;
}

double expectation(const StateVector& psi, const Observable& o) {
    if (psi.dim() != o.dim())
        throw DimensionMismatch("expectation: state dim " + std::to_string(psi.dim()) +
                                " vs observable dim " + std::to_string(o.dim()));
    const Complex value = psi.amplitudes().dot(o.matrix() * psi.amplitudes());
    if (std::abs(value.imag()) > kImagResidueTol)
        throw NonRealExpectation("expectation: imaginary residue " +
                                 std::to_string(value.imag()));
    return value.real();
}

OutcomeDistribution outcome_probabilities(const StateVector& psi, const Observable& o) {
    if (psi.dim() != o.dim())
        throw DimensionMismatch("outcome_probabilities: dimension mismatch");
    const auto dec = spectral_decompose(o);
    OutcomeDistribution dist;
    for (const auto& [eigenvalue, members] : dec.merged_eigenvalues()) {
        double p = 0.0;  // ||P_mu psi||^2 over the eigenspace
        for (int k : members) p += std::norm(dec.eigenvectors.col(k).dot(psi.amplitudes()));
        if (p < kProbabilityClamp)
            throw Error("outcome_probabilities: probability below clamp");
        dist.outcomes.push_back({eigenvalue, std::max(p, 0.0)});
    }
    return dist;
}

double dispersion(const StateVector& psi, const Observable& o) {
    if (psi.dim() != o.dim()) throw DimensionMismatch("dispersion: dimension mismatch");
    const Matrix& m = o.matrix();
    Matrix squared = m * m;
    squared = 0.5 * (squared + Matrix(squared.adjoint()));
    const double second_moment = expectation(psi, Observable(std::move(squared)));
    const double mean = expectation(psi, o);
    return std::max(second_moment - mean * mean, 0.0);
}

double function_compatibility_gap(const StateVector& psi, const Observable& o,
                                  const Polynomial& f) {
    if (psi.dim() != o.dim())
        throw DimensionMismatch("function_compatibility_gap: dimension mismatch");
    const double of_expectation = f(expectation(psi, o));
    const double expectation_of = expectation(psi, apply_polynomial(o, f));
    return std::abs(of_expectation - expectation_of);
}

}  // namespace qnogo
