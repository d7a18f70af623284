#include <cmath>

#include "doctest.h"
#include "qdm/io.hpp"
#include "qdm/random.hpp"
#include "qdm/states.hpp"

using namespace qdm;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

Matrix bell_projector() {
    Vector phi = Vector::Zero(4);
    phi(0) = phi(3) = std::sqrt(0.5);
    return phi * phi.adjoint();
}

}  // namespace

TEST_CASE("make_rho_q endpoints") {
    CHECK(max_abs(make_rho_q(0.0).matrix() - 0.25 * Matrix::Identity(4, 4)) <= 1e-15);
    CHECK(max_abs(make_rho_q(1.0).matrix() - bell_projector()) <= 1e-15);
    CHECK_THROWS_AS(make_rho_q(-0.1), OutOfRange);
    CHECK_THROWS_AS(make_rho_q(1.1), OutOfRange);
}

TEST_CASE("make_rho_q agrees with the circuit construction") {
    for (double p : {0.25, 0.5, 0.9}) {
        const Matrix single = 0.5 * (Matrix::Identity(2, 2) + p * pauli::z());
        DensityMatrix rho(Dims{2, 2}, tensor_product(single, single));
        rho = apply_gate(rho, hadamard(), {0});
        rho = apply_gate(rho, cnot(), {0, 1});
        CHECK(max_abs(rho.matrix() - make_rho_q(p).matrix()) <= 1e-12);
    }
}

TEST_CASE("make_rho_c endpoints and purity") {
    CHECK(max_abs(make_rho_c(0.0).matrix() - 0.25 * Matrix::Identity(4, 4)) <= 1e-15);

    // p = 1 is the rank-1 projector onto |++>
    const EigenDecomposition ed = eig_hermitian(make_rho_c(1.0).matrix());
    CHECK(ed.eigenvalues(3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(ed.eigenvalues(2)) <= 1e-12);
    Vector plus_plus = Vector::Constant(4, Complex(0.5, 0.0));
    CHECK(std::abs(std::abs((plus_plus.adjoint() * ed.eigenvectors.col(3))(0)) - 1.0) <= 1e-12);

    for (double p = 0.0; p <= 1.0; p += 0.1) {
        const double expected = 0.25 * (1.0 + p * p) * (1.0 + p * p);
        CHECK(std::abs(purity(make_rho_c(p)) - expected) <= 1e-12);
        CHECK(std::abs(purity(make_rho_q(p)) - expected) <= 1e-12);
    }
    CHECK_THROWS_AS(make_rho_c(2.0), OutOfRange);
}

TEST_CASE("make_classical_quantum simple ensembles") {
    Rng rng(3);
    const Matrix rho_b = rng.density({2, 1}).matrix();
    ClassicalQuantumSpec single;
    single.weights = {1.0};
    single.basis = {Vector::Unit(2, 0)};
    single.conditionals = {rho_b};
    Matrix e0 = Matrix::Zero(2, 2);
    e0(0, 0) = 1;
    CHECK(max_abs(make_classical_quantum(single).matrix() - tensor_product(e0, rho_b)) <= 1e-15);

    ClassicalQuantumSpec flagged;
    flagged.weights = {0.5, 0.5};
    flagged.basis = {Vector::Unit(2, 0), Vector::Unit(2, 1)};
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    flagged.conditionals = {p0, p1};
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = expected(3, 3) = 0.5;
    CHECK(max_abs(make_classical_quantum(flagged).matrix() - expected) <= 1e-15);

    ClassicalQuantumSpec bad = flagged;
    bad.weights = {0.7, 0.7};
    CHECK_THROWS_AS(make_classical_quantum(bad), InvalidSpec);
}

TEST_CASE("purity and entropy special values") {
    Rng rng(19);
    CHECK(purity(rng.pure({2, 2})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(purity(make_maximally_mixed()) == doctest::Approx(0.25).epsilon(1e-14));

    CHECK(von_neumann_entropy(rng.pure({2, 2})) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(entropy_bits(0.5 * Matrix::Identity(2, 2)) == doctest::Approx(1.0).epsilon(1e-12));

    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 0.75;
    diag(1, 1) = 0.25;
    const double expected = 2.0 - 0.75 * std::log2(3.0);
    CHECK(entropy_bits(diag) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("apply_gate involution and truth table") {
    Rng rng(29);
    const DensityMatrix rho = rng.density({2, 2});
    const DensityMatrix back = apply_gate(apply_gate(rho, hadamard(), {0}), hadamard(), {0});
    CHECK(max_abs(back.matrix() - rho.matrix()) <= 1e-12);

    Matrix ten = Matrix::Zero(4, 4);
    ten(2, 2) = 1;  // |10><10|
    Matrix eleven = Matrix::Zero(4, 4);
    eleven(3, 3) = 1;  // |11><11|
    const DensityMatrix flipped = apply_gate(DensityMatrix(Dims{2, 2}, ten), cnot(), {0, 1});
    CHECK(max_abs(flipped.matrix() - eleven) <= 1e-14);

    CHECK_THROWS_AS(apply_gate(rho, hadamard(), {2}), BadTarget);
    CHECK_THROWS_AS(apply_gate(rho, cnot(), {0}), BadTarget);
}

TEST_CASE("apply_gate preserves spectrum, purity and entropy") {
    Rng rng(41);
    for (int t = 0; t < 25; ++t) {
        const DensityMatrix rho = rng.density({2, 2});
        DensityMatrix evolved = apply_gate(rho, hadamard(), {t % 2});
        evolved = apply_gate(evolved, cnot(), {0, 1});
        CHECK(std::abs(evolved.matrix().trace().real() - 1.0) <= 1e-12);
        CHECK(max_abs(evolved.matrix() - evolved.matrix().adjoint()) <= 1e-12);
        const Eigen::VectorXd before = eig_hermitian(rho.matrix()).eigenvalues;
        const Eigen::VectorXd after = eig_hermitian(evolved.matrix()).eigenvalues;
        CHECK((before - after).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(std::abs(purity(evolved) - purity(rho)) <= 1e-12);
        CHECK(std::abs(von_neumann_entropy(evolved) - von_neumann_entropy(rho)) <= 1e-9);
    }
}

TEST_CASE("factories produce valid states across 1000 random draws") {
    Rng rng(77);
    for (int t = 0; t < 1000; ++t) {
        DensityMatrix rho = (t % 3 == 0)   ? rng.density({2, 2})
                            : (t % 3 == 1) ? rng.pure({2, 2})
                                           : make_classical_quantum(rng.cq_spec());
        CHECK(std::abs(rho.matrix().trace().real() - 1.0) <= 1e-10);
        CHECK(eig_hermitian(rho.matrix()).eigenvalues(0) >= -kPsdTol);
    }
}

TEST_CASE("B-side channels return valid states and act trivially at the edges") {
    Rng rng(53);
    const DensityMatrix rho = rng.density({2, 2});
    CHECK(max_abs(depolarize_b(rho, 0.0).matrix() - rho.matrix()) <= 1e-14);
    CHECK(max_abs(dephase_b(rho, 0.0).matrix() - rho.matrix()) <= 1e-14);

    const Matrix fully = depolarize_b(rho, 1.0).matrix();
    const Matrix expected = tensor_product(partial_trace(rho.matrix(), 2, 2, Subsystem::A),
                                           0.5 * Matrix::Identity(2, 2));
    CHECK(max_abs(fully - expected) <= 1e-12);
}

TEST_CASE("JSON state round trip") {
    Rng rng(61);
    const DensityMatrix rho = rng.density({2, 2});
    const DensityMatrix back = state_from_json(state_to_json(rho));
    CHECK(back.dims().a == 2);
    CHECK(back.dims().b == 2);
    CHECK(max_abs(back.matrix() - rho.matrix()) <= 1e-15);
}

TEST_CASE("JSON parser names the violated invariant") {
    nlohmann::json j = state_to_json(make_rho_q(0.5));

    nlohmann::json traceless = j;
    traceless["matrix"][0][0] = 0.9;  // breaks Tr = 1
    CHECK_THROWS_AS(state_from_json(traceless), InvalidSpec);

    nlohmann::json skewed = j;
    skewed["matrix"][1][0] = 0.9;  // breaks Hermiticity
    CHECK_THROWS_AS(state_from_json(skewed), NotHermitian);

    // sigma_z padded to trace 1: Hermitian, unit trace, but not PSD
    nlohmann::json negative = j;
    for (auto& entry : negative["matrix"]) entry = {0.0, 0.0};
    negative["matrix"][0] = {1.5, 0.0};
    negative["matrix"][5] = {0.5, 0.0};
    negative["matrix"][10] = {-0.5, 0.0};
    negative["matrix"][15] = {-0.5, 0.0};
    CHECK_THROWS_AS(state_from_json(negative), NegativeEigenvalue);

    nlohmann::json short_matrix = j;
    short_matrix["matrix"].erase(15);
    CHECK_THROWS_AS(state_from_json(short_matrix), InvalidSpec);
}
