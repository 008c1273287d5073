#pragma once

#include <utility>
#include <vector>

#include "qnogo/errors.hpp"
#include "qnogo/types.hpp"

namespace qnogo {

// Construction-time tolerances. Derived-identity checks use the looser
// 1e-8/1e-9 values quoted at each call site.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kIdempotentTol = 1e-10;
inline constexpr double kEigenMergeTol = 1e-8;

Matrix adjoint(const Matrix& m);

Complex trace(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = kHermTol);

/// Unit vector in C^d. Norm is checked once here; all downstream code may
/// assume it.
class StateVector {
  public:
    explicit StateVector(Vector amplitudes, double norm_tol = kNormTol);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Vector& amplitudes() const { return amplitudes_; }
    Complex amplitude(int k) const { return amplitudes_(k); }

    /// Canonical basis state |k>.
    static StateVector basis(int dim, int k);

  private:
    Vector amplitudes_;
};

/// Hermitian matrix. Entries within kHermTol of Hermitian are accepted and
/// stored as given (not symmetrized).
class Observable {
  public:
    explicit Observable(Matrix m, double herm_tol = kHermTol);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const Matrix& matrix() const { return matrix_; }

    static Observable identity(int dim);

  private:
    Matrix matrix_;
};

/// Hermitian idempotent. rank is read off the trace.
class Projector {
  public:
    explicit Projector(Matrix m, double tol = kIdempotentTol);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    int rank() const { return rank_; }
    const Matrix& matrix() const { return matrix_; }
    Observable as_observable() const { return Observable(matrix_); }

  private:
    Matrix matrix_;
    int rank_;
};

/// Eigenvalues ascending; eigenvector column k pairs with eigenvalue k.
/// Degenerate subspaces carry the deterministic basis fixed by
/// spectral_decompose, so equal inputs give equal decompositions.
struct SpectralDecomposition {
    RealVector eigenvalues;
    Matrix eigenvectors;

    int dim() const { return static_cast<int>(eigenvalues.size()); }

    /// Sum of eigenvalue * |phi><phi| — should reproduce the input.
    Matrix reassemble() const;

    /// Distinct eigenvalues after merging within tol, with the member
    /// column indices of each cluster. Cluster value is the member mean.
    std::vector<std::pair<double, std::vector<int>>> merged_eigenvalues(
        double tol = kEigenMergeTol) const;
};

/// Real-coefficient polynomial, ascending degree order.
class Polynomial {
  public:
    explicit Polynomial(std::vector<double> coefficients);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<double>& coefficients() const { return coefficients_; }

    double operator()(double x) const;
    Polynomial operator*(const Polynomial& other) const;

    static Polynomial identity() { return Polynomial({0.0, 1.0}); }

  private:
    std::vector<double> coefficients_;
};

/// Eigensystem with deterministic degenerate-subspace convention:
/// each degenerate eigenspace is re-based by Gram-Schmidt against
/// ascending canonical basis vectors, and every eigenvector's
/// largest-magnitude component is made real positive.
SpectralDecomposition spectral_decompose(const Observable& o);

/// f(O) through the spectral decomposition.
Observable apply_polynomial(const Observable& o, const Polynomial& f);

/// A = A+ + i A-  with both parts Hermitian by construction.
std::pair<Observable, Observable> hermitian_split(const Matrix& a);

/// Rank-1 projector |chi><chi|.
Projector projector_onto(const StateVector& chi);

/// Positive unit-trace operator. Validation thresholds follow the frame
/// check contract: eigenvalues >= -1e-10 and |trace - 1| <= 1e-9.
class DensityOperator {
  public:
    explicit DensityOperator(Matrix m);

    int dim() const { return static_cast<int>(matrix_.rows()); }
    const Matrix& matrix() const { return matrix_; }
    double min_eigenvalue() const { return min_eigenvalue_; }

    static DensityOperator pure(const StateVector& psi);
    static DensityOperator maximally_mixed(int dim);

  private:
    Matrix matrix_;
    double min_eigenvalue_;
};

}  // namespace qnogo
