#include "qnogo/rng.hpp"

#include <cmath>

#include "qnogo/hilbert.hpp"

namespace qnogo {

double Rng::uniform() {
    // 53 random bits -> [0, 1); avoids generate_canonical, whose output
    // sequence differs between standard libraries
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

Matrix Rng::hermitian(int dim) {
    // lower triangle drawn, upper mirrored, diagonal real: exactly Hermitian
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        m(j, j) = Complex(gaussian(), 0.0);
        for (int k = 0; k < j; ++k) {
            const Complex z = complex_gaussian() * M_SQRT1_2;
            m(j, k) = z;
            m(k, j) = std::conj(z);
        }
    }
    return m;
}

Matrix Rng::unitary(int dim) {
    Matrix g(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) g(j, k) = complex_gaussian();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fix column phases by the R diagonal so the distribution is Haar
    for (int k = 0; k < dim; ++k) {
        const Complex d = r(k, k);
        const double mag = std::abs(d);
        if (mag > 0.0) q.col(k) *= d / mag;
    }
    return q;
}

StateVector random_state(int dim, Rng& rng) {
    Vector amps(dim);
    double norm_sq = 0.0;
    do {
        for (int k = 0; k < dim; ++k) amps(k) = rng.complex_gaussian();
        norm_sq = amps.squaredNorm();
    } while (norm_sq == 0.0);
    amps /= std::sqrt(norm_sq);
    return StateVector(std::move(amps));
}

StateVector random_state(int dim, std::uint64_t seed) {
    Rng rng(seed);
    return random_state(dim, rng);
}

Observable random_observable(int dim, Rng& rng) { return Observable(rng.hermitian(dim)); }

}  // namespace qnogo
