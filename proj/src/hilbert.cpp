#include "qnogo/hilbert.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qnogo {

namespace {

void require_square_finite(const Matrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw DimensionMismatch(std::string(what) + ": matrix must be square and non-empty");
    if (!all_finite(m)) throw Error(std::string(what) + ": non-finite entries");
}

// Largest-magnitude component made real positive. Ties go to the lowest
// index so the convention is total.
void fix_phase(Eigen::Ref<Vector> v) {
    int arg = 0;
    double best = -1.0;
    for (int k = 0; k < v.size(); ++k) {
        const double mag = std::abs(v(k));
        if (mag > best + 1e-15) {
            best = mag;
            arg = k;
        }
    }
    const Complex z = v(arg);
    if (std::abs(z) > 0.0) v *= std::conj(z) / std::abs(z);
}

}  // namespace

Matrix adjoint(const Matrix& m) { return m.adjoint(); }

Complex trace(const Matrix& m) { return m.trace(); }

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - Matrix(m.adjoint())) <= tol;
}

StateVector::StateVector(Vector amplitudes, double norm_tol) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1) throw DimensionMismatch("StateVector: dimension must be positive");
    if (!all_finite(amplitudes_)) throw Error("StateVector: non-finite amplitudes");
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > norm_tol)
        throw Error("StateVector: norm " + std::to_string(norm) + " is not 1 within tolerance");
}

StateVector StateVector::basis(int dim, int k) {
    Vector v = Vector::Zero(dim);
    v(k) = 1.0;
    return StateVector(std::move(v));
}

Observable::Observable(Matrix m, double herm_tol) : matrix_(std::move(m)) {
    require_square_finite(matrix_, "Observable");
    if (!is_hermitian(matrix_, herm_tol)) throw Error("Observable: matrix is not Hermitian");
}

Observable Observable::identity(int dim) { return Observable(Matrix::Identity(dim, dim)); }

Projector::Projector(Matrix m, double tol) : matrix_(std::move(m)) {
    require_square_finite(matrix_, "Projector");
    if (!is_hermitian(matrix_, tol)) throw Error("Projector: matrix is not Hermitian");
    if (max_abs(matrix_ * matrix_ - matrix_) > tol) throw Error("Projector: matrix is not idempotent");
    const Complex tr = matrix_.trace();
    rank_ = static_cast<int>(std::lround(tr.real()));
    if (std::abs(tr - Complex(rank_, 0.0)) > 1e-8 || rank_ < 0)
        throw Error("Projector: trace is not a non-negative integer");
}

Matrix SpectralDecomposition::reassemble() const {
    const int d = dim();
    Matrix m = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k)
        m += eigenvalues(k) * (eigenvectors.col(k) * eigenvectors.col(k).adjoint());
    return m;
}

std::vector<std::pair<double, std::vector<int>>> SpectralDecomposition::merged_eigenvalues(
    double tol) const {
    std::vector<std::pair<double, std::vector<int>>> merged;
    const int d = dim();
    int k = 0;
    while (k < d) {
        int j = k + 1;
        // eigenvalues are ascending: chain neighbors within tol
        while (j < d && eigenvalues(j) - eigenvalues(j - 1) <= tol) ++j;
        std::vector<int> members;
        double sum = 0.0;
        for (int i = k; i < j; ++i) {
            members.push_back(i);
            sum += eigenvalues(i);
        }
        merged.emplace_back(sum / static_cast<double>(members.size()), std::move(members));
        k = j;
    }
    return merged;
}

Polynomial::Polynomial(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) throw Error("Polynomial: needs at least one coefficient");
    for (double c : coefficients_)
        if (!std::isfinite(c)) throw Error("Polynomial: non-finite coefficient");
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    std::vector<double> prod(coefficients_.size() + other.coefficients_.size() - 1, 0.0);
    for (std::size_t a = 0; a < coefficients_.size(); ++a)
        for (std::size_t b = 0; b < other.coefficients_.size(); ++b)
            prod[a + b] += coefficients_[a] * other.coefficients_[b];
    return Polynomial(std::move(prod));
}

SpectralDecomposition spectral_decompose(const Observable& o) {
    const int d = o.dim();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(o.matrix());
    if (solver.info() != Eigen::Success)
        throw NonConvergence("spectral_decompose: eigensolver did not converge");

    SpectralDecomposition dec;
    dec.eigenvalues = solver.eigenvalues();
    dec.eigenvectors = solver.eigenvectors();

    // Re-base each degenerate cluster deterministically: project ascending
    // canonical basis vectors onto the eigenspace and Gram-Schmidt them.
    const auto clusters = dec.merged_eigenvalues(kEigenMergeTol);
    for (const auto& [value, members] : clusters) {
        (void)value;
        const int m = static_cast<int>(members.size());
        if (m == 1) continue;
        Matrix sub(d, m);
        for (int i = 0; i < m; ++i) sub.col(i) = dec.eigenvectors.col(members[i]);
        const Matrix onto = sub * sub.adjoint();

        Matrix rebased(d, m);
        int taken = 0;
        for (int j = 0; j < d && taken < m; ++j) {
            Vector w = onto.col(j);  // projection of |j>
            for (int i = 0; i < taken; ++i) w -= rebased.col(i).dot(w) * rebased.col(i);
            const double norm = w.norm();
            if (norm > 1e-6) rebased.col(taken++) = w / norm;
        }
        // a rank-m projector always yields m independent projections; the
        // fallback keeps the original columns orthonormalized if rounding
        // ever says otherwise
        for (int i = 0; taken < m && i < m; ++i) {
            Vector w = sub.col(i);
            for (int t = 0; t < taken; ++t) w -= rebased.col(t).dot(w) * rebased.col(t);
            const double norm = w.norm();
            if (norm > 1e-6) rebased.col(taken++) = w / norm;
        }
        for (int i = 0; i < m; ++i) dec.eigenvectors.col(members[i]) = rebased.col(i);
    }
    for (int k = 0; k < d; ++k) fix_phase(dec.eigenvectors.col(k));
    return dec;
}

Observable apply_polynomial(const Observable& o, const Polynomial& f) {
    const auto dec = spectral_decompose(o);
    const int d = o.dim();
    Matrix result = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k)
        result +=
            f(dec.eigenvalues(k)) * (dec.eigenvectors.col(k) * dec.eigenvectors.col(k).adjoint());
    // the spectral sum is Hermitian up to rounding; symmetrize so the
    // Observable invariant is met exactly
    result = 0.5 * (result + Matrix(result.adjoint()));
    return Observable(std::move(result));
}

std::pair<Observable, Observable> hermitian_split(const Matrix& a) {
    require_square_finite(a, "hermitian_split");
    const int d = static_cast<int>(a.rows());
    Matrix plus(d, d);
    Matrix minus(d, d);
    const Complex half_over_i(0.0, -0.5);  // 1/(2i)
    for (int j = 0; j < d; ++j) {
        plus(j, j) = Complex(a(j, j).real(), 0.0);
        minus(j, j) = Complex(a(j, j).imag(), 0.0);
        for (int k = j + 1; k < d; ++k) {
            const Complex u = a(j, k);
            const Complex v = std::conj(a(k, j));
            const Complex p = 0.5 * (u + v);
            const Complex q = half_over_i * (u - v);
            plus(j, k) = p;
            plus(k, j) = std::conj(p);
            minus(j, k) = q;
            minus(k, j) = std::conj(q);
        }
    }
    return {Observable(std::move(plus)), Observable(std::move(minus))};
}

Projector projector_onto(const StateVector& chi) {
    Matrix p = chi.amplitudes() * chi.amplitudes().adjoint();
    // outer products of conjugate pairs are Hermitian in exact arithmetic
    // but not bit-exactly in floating point; mirror the lower triangle
    for (int j = 0; j < p.rows(); ++j) {
        p(j, j) = Complex(p(j, j).real(), 0.0);
        for (int k = 0; k < j; ++k) p(k, j) = std::conj(p(j, k));
    }
    return Projector(std::move(p));
}

DensityOperator::DensityOperator(Matrix m) : matrix_(std::move(m)) {
    require_square_finite(matrix_, "DensityOperator");
    if (matrix_.rows() < 2) throw InvalidDensity("DensityOperator: dimension must be >= 2");
    if (!is_hermitian(matrix_, kHermTol)) throw InvalidDensity("DensityOperator: not Hermitian");
    if (std::abs(matrix_.trace() - Complex(1.0, 0.0)) > 1e-9)
        throw InvalidDensity("DensityOperator: trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_);
    if (solver.info() != Eigen::Success)
        throw NonConvergence("DensityOperator: eigensolver did not converge");
    min_eigenvalue_ = solver.eigenvalues().minCoeff();
    if (min_eigenvalue_ < -1e-10) throw InvalidDensity("DensityOperator: negative eigenvalue");
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
    return DensityOperator(projector_onto(psi).matrix());
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
    return DensityOperator(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

}  // namespace qnogo
