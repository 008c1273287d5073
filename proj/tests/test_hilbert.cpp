#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnogo/hilbert.hpp"
#include "qnogo/rng.hpp"
#include "test_support.hpp"

using namespace qnogo;
using namespace qnogo::test;

TEST_CASE("adjoint: conjugate transpose") {
    CHECK(entry_distance(adjoint(Matrix::Identity(2, 2)), Matrix::Identity(2, 2)) == 0.0);

    Matrix upper(2, 2);
    upper << 0.0, 1.0, 0.0, 0.0;
    Matrix lower(2, 2);
    lower << 0.0, 0.0, 1.0, 0.0;
    CHECK(entry_distance(adjoint(upper), lower) == 0.0);

    // Pauli-Y is Hermitian: conjugate-transpose reproduces it
    CHECK(entry_distance(adjoint(pauli_y()), pauli_y()) == 0.0);
}

TEST_CASE("trace: diagonal sum") {
    CHECK(trace(Matrix::Identity(3, 3)) == Complex(3.0, 0.0));
    CHECK(trace(pauli_z()) == Complex(0.0, 0.0));

    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
        const StateVector psi = random_state(5, rng);
        const Matrix p = psi.amplitudes() * psi.amplitudes().adjoint();
        CHECK(std::abs(trace(p) - Complex(1.0, 0.0)) < 1e-12);
    }
}

TEST_CASE("trace cyclicity") {
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        Matrix a(4, 4);
        Matrix b(4, 4);
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                a(j, k) = rng.complex_gaussian();
                b(j, k) = rng.complex_gaussian();
            }
        CHECK(std::abs(trace(a * b) - trace(b * a)) < 1e-9);
    }
}

TEST_CASE("is_hermitian") {
    CHECK(is_hermitian(pauli_x(), 1e-10));
    Matrix upper(2, 2);
    upper << 0.0, 1.0, 0.0, 0.0;
    CHECK_FALSE(is_hermitian(upper, 1e-10));

    Matrix perturbed = pauli_x();
    perturbed(0, 1) += Complex(0.0, 1e-12);
    CHECK(is_hermitian(perturbed, 1e-10));
}

TEST_CASE("StateVector rejects non-unit and non-finite input") {
    Vector v(2);
    v << 1.0, 1.0;
    CHECK_THROWS_AS(StateVector{v}, Error);
    v << 1.0, std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(StateVector{v}, Error);
}

TEST_CASE("Observable rejects non-Hermitian input") {
    Matrix upper(2, 2);
    upper << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(Observable{upper}, Error);
    CHECK_NOTHROW(Observable{pauli_x()});
}

TEST_CASE("spectral_decompose: Pauli-Z") {
    const auto dec = spectral_decompose(Observable(pauli_z()));
    CHECK(dec.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(dec.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));
    // ascending order pairs |1> with -1 and |0> with +1
    CHECK(std::abs(dec.eigenvectors(1, 0) - Complex(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(dec.eigenvectors(0, 1) - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("spectral_decompose: (X+Y)/sqrt(2) has eigenvalues -1, 1") {
    const Matrix m = (pauli_x() + pauli_y()) / std::sqrt(2.0);
    const auto dec = spectral_decompose(Observable(m));
    CHECK(dec.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(dec.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spectral_decompose: reassembly and orthonormality on random input") {
    Rng rng(7);
    for (int d : {2, 3, 5, 8}) {
        for (int i = 0; i < 10; ++i) {
            const Observable o(rng.hermitian(d));
            const auto dec = spectral_decompose(o);
            CHECK(entry_distance(dec.reassemble(), o.matrix()) < 1e-9);
            const Matrix gram = dec.eigenvectors.adjoint() * dec.eigenvectors;
            CHECK(entry_distance(gram, Matrix::Identity(d, d)) < 1e-9);
            for (int k = 1; k < d; ++k) CHECK(dec.eigenvalues(k) >= dec.eigenvalues(k - 1));
        }
    }
}

TEST_CASE("spectral_decompose: eigenvalues invariant under unitary conjugation") {
    Rng rng(19);
    for (int i = 0; i < 20; ++i) {
        const Observable o(rng.hermitian(4));
        const Matrix u = rng.unitary(4);
        Matrix conj = u * o.matrix() * u.adjoint();
        conj = 0.5 * (conj + Matrix(conj.adjoint()));
        const auto base = spectral_decompose(o);
        const auto rotated = spectral_decompose(Observable(conj));
        for (int k = 0; k < 4; ++k)
            CHECK(std::abs(base.eigenvalues(k) - rotated.eigenvalues(k)) < 1e-8);
    }
}

TEST_CASE("spectral_decompose: degenerate subspace convention is deterministic") {
    // identity: full degeneracy; the convention must give the canonical basis
    const auto dec = spectral_decompose(Observable::identity(3));
    CHECK(entry_distance(dec.eigenvectors, Matrix::Identity(3, 3)) < 1e-12);

    // block-degenerate spectrum, run twice: bit-identical output
    Rng rng(23);
    const Matrix u = rng.unitary(4);
    Eigen::VectorXd vals(4);
    vals << 1.0, 1.0, 2.0, 2.0;
    Matrix m = u * vals.asDiagonal() * u.adjoint();
    m = 0.5 * (m + Matrix(m.adjoint()));
    const Observable o(m);
    const auto first = spectral_decompose(o);
    const auto second = spectral_decompose(o);
    CHECK(entry_distance(first.eigenvectors, second.eigenvectors) == 0.0);
    CHECK(entry_distance(first.reassemble(), o.matrix()) < 1e-9);

    // phase convention: largest-magnitude component real positive
    for (int k = 0; k < 4; ++k) {
        int arg = 0;
        for (int j = 1; j < 4; ++j)
            if (std::abs(first.eigenvectors(j, k)) > std::abs(first.eigenvectors(arg, k)))
                arg = j;
        CHECK(first.eigenvectors(arg, k).imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(first.eigenvectors(arg, k).real() > 0.0);
    }
}

TEST_CASE("apply_polynomial: projector squared is itself") {
    Rng rng(31);
    const Projector p = projector_onto(random_state(3, rng));
    const Observable result = apply_polynomial(p.as_observable(), Polynomial({0.0, 0.0, 1.0}));
    CHECK(entry_distance(result.matrix(), p.matrix()) < 1e-9);
}

TEST_CASE("apply_polynomial: constants and hand-checked case") {
    const Observable x(pauli_x());
    const Observable constant = apply_polynomial(x, Polynomial({1.0}));
    CHECK(entry_distance(constant.matrix(), Matrix::Identity(2, 2)) < 1e-12);

    // X^2 + 1 = 2*I
    const Observable shifted = apply_polynomial(x, Polynomial({1.0, 0.0, 1.0}));
    CHECK(entry_distance(shifted.matrix(), 2.0 * Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("apply_polynomial is multiplicative over the functional calculus") {
    Rng rng(37);
    const Polynomial f({1.0, -2.0, 0.5});
    const Polynomial g({0.0, 1.0, 1.0});
    const Polynomial fg = f * g;
    for (int d : {2, 4, 6}) {
        const Observable o(rng.hermitian(d));
        const Matrix lhs = apply_polynomial(o, fg).matrix();
        const Matrix rhs = apply_polynomial(o, f).matrix() * apply_polynomial(o, g).matrix();
        CHECK(entry_distance(lhs, rhs) < 1e-8);
    }
}

TEST_CASE("hermitian_split: Hermitian and anti-Hermitian inputs") {
    Rng rng(43);
    const Matrix h = rng.hermitian(3);
    const auto [plus, minus] = hermitian_split(h);
    CHECK(entry_distance(plus.matrix(), h) == 0.0);
    CHECK(max_abs(minus.matrix()) == 0.0);

    const auto [plus_i, minus_i] = hermitian_split(Complex(0.0, 1.0) * h);
    CHECK(max_abs(plus_i.matrix()) == 0.0);
    CHECK(entry_distance(minus_i.matrix(), h) == 0.0);
}

TEST_CASE("hermitian_split: |0><1| splits into X/2 and Y/2") {
    // recombination forces the signs: X/2 + i(Y/2) = |0><1|
    Matrix ket0bra1 = Matrix::Zero(2, 2);
    ket0bra1(0, 1) = 1.0;
    const auto [plus, minus] = hermitian_split(ket0bra1);
    CHECK(entry_distance(plus.matrix(), 0.5 * pauli_x()) == 0.0);
    CHECK(entry_distance(minus.matrix(), 0.5 * pauli_y()) == 0.0);
    const Matrix recombined = plus.matrix() + Complex(0.0, 1.0) * minus.matrix();
    CHECK(entry_distance(recombined, ket0bra1) == 0.0);
}

TEST_CASE("hermitian_split: recombination is exact on dyadic matrices") {
    // On a dyadic lattice every sum, difference and halving is exact, so the
    // +-averaging round trip must be bitwise. (General doubles can pick up a
    // final rounding when the symmetric pair spans binades.)
    Rng rng(47);
    auto dyadic = [&rng]() {
        return std::floor(rng.uniform(-1024.0, 1024.0)) * 0x1.0p-8;
    };
    for (int i = 0; i < 50; ++i) {
        Matrix a(4, 4);
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) a(j, k) = Complex(dyadic(), dyadic());
        const auto [plus, minus] = hermitian_split(a);
        CHECK(is_hermitian(plus.matrix(), 0.0));
        CHECK(is_hermitian(minus.matrix(), 0.0));
        const Matrix recombined = plus.matrix() + Complex(0.0, 1.0) * minus.matrix();
        CHECK(entry_distance(recombined, a) == 0.0);
    }
}

TEST_CASE("hermitian_split: recombination within rounding on generic matrices") {
    Rng rng(53);
    for (int i = 0; i < 50; ++i) {
        Matrix a(5, 5);
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) a(j, k) = rng.complex_gaussian();
        const auto [plus, minus] = hermitian_split(a);
        const Matrix recombined = plus.matrix() + Complex(0.0, 1.0) * minus.matrix();
        CHECK(entry_distance(recombined, a) < 1e-14);
    }
}

TEST_CASE("projector_onto: hand-checked matrices") {
    const Projector p0 = projector_onto(StateVector::basis(2, 0));
    Matrix expected(2, 2);
    expected << 1.0, 0.0, 0.0, 0.0;
    CHECK(entry_distance(p0.matrix(), expected) == 0.0);
    CHECK(p0.rank() == 1);

    const Projector pplus = projector_onto(plus_state());
    Matrix half(2, 2);
    half << 0.5, 0.5, 0.5, 0.5;
    CHECK(entry_distance(pplus.matrix(), half) < 1e-15);
}

TEST_CASE("projector_onto: idempotent with spectrum {0,...,0,1}") {
    Rng rng(59);
    for (int d : {2, 3, 6}) {
        const Projector p = projector_onto(random_state(d, rng));
        CHECK(max_abs(p.matrix() * p.matrix() - p.matrix()) < 1e-10);
        const auto dec = spectral_decompose(p.as_observable());
        for (int k = 0; k + 1 < d; ++k) CHECK(std::abs(dec.eigenvalues(k)) < 1e-9);
        CHECK(std::abs(dec.eigenvalues(d - 1) - 1.0) < 1e-9);
    }
}

TEST_CASE("Polynomial: evaluation, degree and product") {
    const Polynomial f({1.0, 2.0, 3.0});  // 1 + 2x + 3x^2
    CHECK(f(0.0) == 1.0);
    CHECK(f(2.0) == doctest::Approx(17.0));
    CHECK(f.degree() == 2);
    const Polynomial g({0.0, 1.0});
    const Polynomial fg = f * g;
    CHECK(fg.degree() == 3);
    CHECK(fg(2.0) == doctest::Approx(34.0));
    CHECK_THROWS_AS(Polynomial{std::vector<double>{}}, Error);
}

TEST_CASE("random_state: d=1 is a pure phase") {
    const StateVector psi = random_state(1, 99);
    CHECK(std::abs(std::abs(psi.amplitude(0)) - 1.0) < 1e-12);
}

TEST_CASE("random_state: deterministic for fixed seed") {
    const StateVector a = random_state(4, 7);
    const StateVector b = random_state(4, 7);
    CHECK((a.amplitudes() - b.amplitudes()).norm() == 0.0);
    const StateVector c = random_state(4, 8);
    CHECK((a.amplitudes() - c.amplitudes()).norm() > 1e-3);
}

TEST_CASE("random_state: Haar first moment at d=2") {
    // E[|<0|psi>|^2] = 1/2 for Haar states; Monte-Carlo over 10^4 samples
    Rng rng(2026);
    double mean = 0.0;
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) mean += std::norm(random_state(2, rng).amplitude(0));
    mean /= samples;
    CHECK(std::abs(mean - 0.5) < 0.02);
}

TEST_CASE("DensityOperator validation") {
    CHECK_NOTHROW(DensityOperator::maximally_mixed(3));
    CHECK_NOTHROW(DensityOperator::pure(random_state(4, 5)));

    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = 1.01;
    bad(1, 1) = -0.01;
    CHECK_THROWS_AS(DensityOperator{bad}, InvalidDensity);

    Matrix off_trace = 0.75 * Matrix::Identity(2, 2);
    CHECK_THROWS_AS(DensityOperator{off_trace}, InvalidDensity);
}
