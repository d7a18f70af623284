#include <cmath>

#include "doctest.h"
#include "qdm/measures.hpp"
#include "qdm/random.hpp"

using namespace qdm;

namespace {

Matrix embed_a(const Matrix& k) { return tensor_product(k, Matrix::Identity(2, 2)); }

// Analytic QFI curves of the two probe families.
double rho_q_qfi(double p, int axis) {
    if (axis == 0 || axis == 2) return p * p;
    return 2.0 * p * p / (1.0 + p * p);
}
double rho_c_qfi(double p, int axis) {
    if (axis == 0) return 0.0;
    return 2.0 * p * p / (1.0 + p * p);
}

}  // namespace

TEST_CASE("skew_information trivial zeros") {
    Rng rng(3);
    const Matrix k = embed_a(pauli::direction(rng.unit_vector()));
    CHECK(std::abs(skew_information(make_maximally_mixed(), k)) <= 1e-12);

    Matrix diag_rho = Matrix::Zero(4, 4);
    diag_rho.diagonal() << 0.4, 0.3, 0.2, 0.1;
    CHECK(std::abs(skew_information(DensityMatrix(Dims{2, 2}, diag_rho), embed_a(pauli::z()))) <=
          1e-12);
}

TEST_CASE("skew_information equals the variance on pure states") {
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        const Vector psi = rng.state_vector(4);
        const DensityMatrix rho(Dims{2, 2}, psi * psi.adjoint());
        const Matrix k = embed_a(pauli::direction(rng.unit_vector()));
        const double mean = (psi.adjoint() * k * psi)(0).real();
        const double second = (psi.adjoint() * k * k * psi)(0).real();
        CHECK(std::abs(skew_information(rho, k) - (second - mean * mean)) <= 1e-9);
    }
}

TEST_CASE("qfi reproduces the analytic probe curves") {
    const Matrix diag_gen = embed_a((pauli::x() + pauli::y()) / std::sqrt(2.0));
    for (double p = 0.0; p <= 1.0; p += 0.1) {
        const DensityMatrix rq = make_rho_q(p);
        CHECK(std::abs(qfi(rq, embed_a(pauli::x())) - rho_q_qfi(p, 0)) <= 1e-8);
        CHECK(std::abs(qfi(rq, embed_a(pauli::y())) - rho_q_qfi(p, 1)) <= 1e-8);
        CHECK(std::abs(qfi(rq, embed_a(pauli::z())) - rho_q_qfi(p, 2)) <= 1e-8);
        CHECK(std::abs(qfi(rq, diag_gen) - p * p * (p * p + 3.0) / (2.0 * (p * p + 1.0))) <=
              1e-8);

        const DensityMatrix rc = make_rho_c(p);
        CHECK(std::abs(qfi(rc, embed_a(pauli::x()))) <= 1e-8);
        CHECK(std::abs(qfi(rc, embed_a(pauli::y())) - rho_c_qfi(p, 1)) <= 1e-8);
        CHECK(std::abs(qfi(rc, embed_a(pauli::z())) - rho_c_qfi(p, 2)) <= 1e-8);
        CHECK(std::abs(qfi(rc, diag_gen) - p * p / (1.0 + p * p)) <= 1e-8);
    }
}

TEST_CASE("qfi_quadratic_form matches qfi along random directions") {
    CHECK(qfi_quadratic_form(make_maximally_mixed(), Subsystem::A).cwiseAbs().maxCoeff() <=
          1e-12);

    Rng rng(11);
    const DensityMatrix rho = rng.density({2, 2});
    const Eigen::Matrix3d m = qfi_quadratic_form(rho, Subsystem::A);
    CHECK((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
    CHECK(es.eigenvalues()(0) >= -1e-10);
    for (int t = 0; t < 50; ++t) {
        const Eigen::Vector3d n = rng.unit_vector();
        CHECK(std::abs(n.dot(m * n) - qfi(rho, embed_a(pauli::direction(n)))) <= 1e-9);
    }

    CHECK_THROWS_AS(qfi_quadratic_form(rng.density({3, 2}), Subsystem::A), NotAQubit);
}

TEST_CASE("lqu of the Bell state is 1 and the minimizer carries the spectrum") {
    const MeasureReport report = lqu(make_bell_phi_plus(), Subsystem::A);
    CHECK(report.value == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(report.minimizer.has_value());
    const Eigen::VectorXd spec = eig_hermitian(report.minimizer->local).eigenvalues;
    CHECK(spec(0) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(spec(1) == doctest::Approx(1.0).epsilon(1e-9));
    // the minimizer attains the reported value
    CHECK(std::abs(skew_information(make_bell_phi_plus(), *report.minimizer) - report.value) <=
          1e-9);
}

TEST_CASE("lqu vanishes on classical-quantum states") {
    Rng rng(13);
    for (int t = 0; t < 25; ++t) {
        const DensityMatrix cq = make_classical_quantum(rng.cq_spec());
        CHECK(lqu(cq, Subsystem::A).value <= 1e-8);
    }
    CHECK(lqu(make_rho_c(0.7), Subsystem::A).value <= 1e-8);
}

TEST_CASE("lqu spectrum affine law") {
    Rng rng(17);
    const DensityMatrix rho = rng.density({2, 2});
    const double base = lqu(rho, Subsystem::A).value;
    for (auto [r, c] : {std::pair{2.0, 0.0}, std::pair{0.5, 1.0}, std::pair{3.0, -2.0}}) {
        const SpectrumSpec shifted{{-r + c, r + c}};
        CHECK(std::abs(lqu(rho, Subsystem::A, shifted).value - r * r * base) <= 1e-9);
    }
    CHECK_THROWS_AS(lqu(rho, Subsystem::A, SpectrumSpec{{1.0, 1.0}}), DegenerateSpectrum);
    CHECK_THROWS_AS(lqu(rho, Subsystem::A, SpectrumSpec{{0.0, 1.0, 2.0}}), SpectrumMismatch);
}

TEST_CASE("qip zeros and upper bound") {
    for (double p : {0.2, 0.5, 0.9}) {
        CHECK(qip(make_rho_c(p), Subsystem::A).raw_minimum <= 1e-8);
    }
    CHECK(qip(make_maximally_mixed(), Subsystem::A).raw_minimum <= 1e-12);

    const MeasureReport report = qip(make_rho_q(0.8), Subsystem::A);
    CHECK(report.raw_minimum <= 0.64 + 1e-9);  // p^2 is one of the candidate curves
    CHECK(report.value == doctest::Approx(0.25 * report.raw_minimum).epsilon(1e-15));
}

TEST_CASE("mutual_information reference values") {
    Rng rng(19);
    const Matrix prod = tensor_product(rng.density({2, 1}).matrix(), rng.density({2, 1}).matrix());
    CHECK(std::abs(mutual_information(DensityMatrix(Dims{2, 2}, prod))) <= 1e-9);
    CHECK(mutual_information(make_bell_phi_plus()) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(std::abs(mutual_information(make_rho_q(0.0))) <= 1e-9);
}

TEST_CASE("entropic_discord reference values") {
    Rng rng(23);
    const Matrix prod = tensor_product(rng.density({2, 1}).matrix(), rng.density({2, 1}).matrix());
    CHECK(entropic_discord(DensityMatrix(Dims{2, 2}, prod)).value <= 1e-8);

    const DensityMatrix cq = make_classical_quantum(rng.cq_spec());
    CHECK(entropic_discord(cq, Subsystem::A).value <= 1e-6);

    const DensityMatrix bell = make_bell_phi_plus();
    CHECK(entropic_discord(bell).value == doctest::Approx(1.0).epsilon(1e-6));
    // Independent cross-check: measuring the Bell state along any axis keeps
    // exactly 1 of its 2 bits of mutual information.
    for (const Eigen::Vector3d& n :
         {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0), Eigen::Vector3d(0, 0, 1),
          rng.unit_vector()}) {
        CHECK(mutual_information(project_measure(bell, Subsystem::A, n)) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }

    CHECK_THROWS_AS(entropic_discord(rng.density({3, 2}), Subsystem::A), NotAQubit);
}

TEST_CASE("entropic_discord is nonnegative on random states") {
    Rng rng(29);
    for (int t = 0; t < 10; ++t) {
        CHECK(entropic_discord(rng.density({2, 2})).value >= -1e-8);
    }
}

TEST_CASE("is_classical_quantum classification") {
    Rng rng(31);
    CHECK(is_classical_quantum(make_classical_quantum(rng.cq_spec()), Subsystem::A));
    CHECK_FALSE(is_classical_quantum(make_rho_q(0.9), Subsystem::A));
    CHECK(is_classical_quantum(make_maximally_mixed(), Subsystem::A));
}

TEST_CASE("asymmetry witness: zero discord on A, positive on B") {
    const DensityMatrix witness = make_cq_example();
    CHECK(lqu(witness, Subsystem::A).value <= 1e-8);
    CHECK(lqu(witness, Subsystem::B).value > 1e-3);
}

TEST_CASE("pure-state discord is symmetric between the parties") {
    Rng rng(37);
    for (int t = 0; t < 20; ++t) {
        const DensityMatrix psi = rng.pure({2, 2});
        CHECK(std::abs(lqu(psi, Subsystem::A).value - lqu(psi, Subsystem::B).value) <= 1e-6);
    }
}

TEST_CASE("inequality chain on random states") {
    Rng rng(41);
    for (int t = 0; t < 200; ++t) {
        const DensityMatrix rho = rng.density({2, 2});
        const LocalObservable k{Subsystem::A, pauli::direction(rng.unit_vector())};
        const double s = skew_information(rho, k);
        const double f = qfi(rho, k);
        CHECK(s <= f + 1e-9);
        CHECK(f <= 2.0 * s + 1e-9);
    }
}
