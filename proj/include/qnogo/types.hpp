#pragma once

#include <complex>
#include <Eigen/Dense>

namespace qnogo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool all_finite(const Matrix& m) {
    for (Eigen::Index j = 0; j < m.rows(); ++j)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            if (!is_finite(m(j, k))) return false;
    return true;
}

inline bool all_finite(const Vector& v) {
    for (Eigen::Index k = 0; k < v.size(); ++k)
        if (!is_finite(v(k))) return false;
    return true;
}

/// Largest entry magnitude, the norm used by most toolkit tolerances.
inline double max_abs(const Matrix& m) {
    double r = 0.0;
    for (Eigen::Index j = 0; j < m.rows(); ++j)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            r = std::max(r, std::abs(m(j, k)));
    return r;
}

}  // namespace qnogo
