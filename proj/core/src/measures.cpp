#include "qdm/measures.hpp"

#include <cmath>

#include "qdm/optimize.hpp"

namespace qdm {

namespace {

double clamp_measure(double v) {
    if (v < 0.0 && v >= -1e-10) return 0.0;
    return v;
}

Matrix embedded_pauli(int axis, Subsystem side, Dims dims) {
    if (side == Subsystem::A) {
        return tensor_product(pauli::component(axis), Matrix::Identity(dims.b, dims.b));
    }
    return tensor_product(Matrix::Identity(dims.a, dims.a), pauli::component(axis));
}

void require_qubit(Subsystem side, Dims dims) {
    if (dims.side(side) != 2) {
        throw NotAQubit("measured subsystem has dimension " +
                        std::to_string(dims.side(side)) + ", expected 2");
    }
}

}  // namespace

void SpectrumSpec::validate(int subsystem_dim) const {
    if (static_cast<int>(eigenvalues.size()) != subsystem_dim) {
        throw SpectrumMismatch("spectrum has " + std::to_string(eigenvalues.size()) +
                               " eigenvalues, subsystem dimension is " +
                               std::to_string(subsystem_dim));
    }
    for (double v : eigenvalues) {
        if (!std::isfinite(v)) throw InvalidSpec("spectrum contains a non-finite eigenvalue");
    }
    for (size_t i = 1; i < eigenvalues.size(); ++i) {
        if (eigenvalues[i] - eigenvalues[i - 1] < 1e-9) {
            throw DegenerateSpectrum("spectrum eigenvalues must be strictly increasing with "
                                     "gaps >= 1e-9");
        }
    }
}

Matrix LocalObservable::embedded(Dims dims) const {
    if (local.rows() != dims.side(side)) {
        throw DimensionMismatch("local observable dimension does not match its subsystem");
    }
    if (side == Subsystem::A) {
        return tensor_product(local, Matrix::Identity(dims.b, dims.b));
    }
    return tensor_product(Matrix::Identity(dims.a, dims.a), local);
}

double skew_information(const DensityMatrix& rho, const Matrix& k_embedded) {
    if (k_embedded.rows() != rho.matrix().rows()) {
        throw DimensionMismatch("skew_information: observable dimension mismatch");
    }
    require_hermitian(k_embedded);
    const Matrix root = sqrt_psd(rho.matrix());
    const double val = (rho.matrix() * k_embedded * k_embedded).trace().real() -
                       (root * k_embedded * root * k_embedded).trace().real();
    return clamp_measure(val);
}

double skew_information(const DensityMatrix& rho, const LocalObservable& k) {
    return skew_information(rho, k.embedded(rho.dims()));
}

double qfi(const DensityMatrix& rho, const Matrix& h_embedded) {
    if (h_embedded.rows() != rho.matrix().rows()) {
        throw DimensionMismatch("qfi: generator dimension mismatch");
    }
    require_hermitian(h_embedded);
    const EigenDecomposition ed = eig_hermitian(rho.matrix());
    const Matrix h_eig = ed.eigenvectors.adjoint() * h_embedded * ed.eigenvectors;
    const Eigen::Index d = ed.eigenvalues.size();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            const double ps = ed.eigenvalues(i) + ed.eigenvalues(j);
            if (ps <= kQfiNullTol) continue;
            const double pd = ed.eigenvalues(i) - ed.eigenvalues(j);
            sum += (pd * pd / ps) * std::norm(h_eig(i, j));
        }
    }
    return sum;
}

double qfi(const DensityMatrix& rho, const LocalObservable& h) {
    return qfi(rho, h.embedded(rho.dims()));
}

Eigen::Matrix3d qfi_quadratic_form(const DensityMatrix& rho, Subsystem side) {
    require_qubit(side, rho.dims());
    const EigenDecomposition ed = eig_hermitian(rho.matrix());
    const Eigen::Index d = ed.eigenvalues.size();
    Matrix s_eig[3];
    for (int a = 0; a < 3; ++a) {
        s_eig[a] = ed.eigenvectors.adjoint() * embedded_pauli(a, side, rho.dims()) *
                   ed.eigenvectors;
    }
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = i + 1; j < d; ++j) {
            const double ps = ed.eigenvalues(i) + ed.eigenvalues(j);
            if (ps <= kQfiNullTol) continue;
            const double w = (ed.eigenvalues(i) - ed.eigenvalues(j)) *
                             (ed.eigenvalues(i) - ed.eigenvalues(j)) / ps;
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    m(a, b) += w * (s_eig[a](i, j) * std::conj(s_eig[b](i, j))).real();
                }
            }
        }
    }
    return 0.5 * (m + m.transpose().eval());
}

Eigen::Matrix3d skew_gram_matrix(const DensityMatrix& rho, Subsystem side) {
    require_qubit(side, rho.dims());
    const Matrix root = sqrt_psd(rho.matrix());
    Matrix rs[3];
    for (int a = 0; a < 3; ++a) {
        rs[a] = root * embedded_pauli(a, side, rho.dims());
    }
    Eigen::Matrix3d w;
    for (int a = 0; a < 3; ++a) {
        for (int b = a; b < 3; ++b) {
            const double v = (rs[a] * rs[b]).trace().real();
            w(a, b) = v;
            w(b, a) = v;
        }
    }
    return w;
}

namespace {

// Radius and center of a two-point spectrum {c - r, c + r}.
struct QubitSpectrum {
    double r;
    double c;
};

QubitSpectrum qubit_spectrum(const SpectrumSpec& spectrum) {
    return {(spectrum.eigenvalues[1] - spectrum.eigenvalues[0]) / 2.0,
            (spectrum.eigenvalues[1] + spectrum.eigenvalues[0]) / 2.0};
}

LocalObservable qubit_observable(Subsystem side, const QubitSpectrum& qs,
                                 const Eigen::Vector3d& n) {
    return {side, qs.c * Matrix::Identity(2, 2) + qs.r * pauli::direction(n)};
}

}  // namespace

MeasureReport lqu(const DensityMatrix& rho, Subsystem side, const SpectrumSpec& spectrum) {
    const int dim = rho.dims().side(side);
    spectrum.validate(dim);
    if (dim != 2) {
        OrbitProblem problem{rho, side, spectrum, Objective::SkewInformation};
        return multistart_minimize(problem);
    }
    const QubitSpectrum qs = qubit_spectrum(spectrum);
    const Eigen::Matrix3d w = skew_gram_matrix(rho, side);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(w);
    const Eigen::Vector3d n = solver.eigenvectors().col(2);  // top eigenvector
    MeasureReport report;
    report.value = clamp_measure(qs.r * qs.r * (1.0 - solver.eigenvalues()(2)));
    report.raw_minimum = report.value;
    report.minimizer = qubit_observable(side, qs, n);
    report.method = Method::ClosedForm;
    return report;
}

MeasureReport qip(const DensityMatrix& rho, Subsystem side, const SpectrumSpec& spectrum) {
    const int dim = rho.dims().side(side);
    spectrum.validate(dim);
    if (dim != 2) {
        OrbitProblem problem{rho, side, spectrum, Objective::Qfi};
        MeasureReport report = multistart_minimize(problem);
        report.raw_minimum = report.value;
        report.value = report.raw_minimum / 4.0;
        return report;
    }
    const QubitSpectrum qs = qubit_spectrum(spectrum);
    const Eigen::Matrix3d m = qfi_quadratic_form(rho, side);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m);
    const Eigen::Vector3d n = solver.eigenvectors().col(0);  // bottom eigenvector
    MeasureReport report;
    report.raw_minimum = clamp_measure(qs.r * qs.r * solver.eigenvalues()(0));
    report.value = report.raw_minimum / 4.0;
    report.minimizer = qubit_observable(side, qs, n);
    report.method = Method::ClosedForm;
    return report;
}

double mutual_information(const DensityMatrix& rho) {
    const Matrix rho_a = partial_trace(rho.matrix(), rho.dims().a, rho.dims().b, Subsystem::A);
    const Matrix rho_b = partial_trace(rho.matrix(), rho.dims().a, rho.dims().b, Subsystem::B);
    return entropy_bits(rho_a) + entropy_bits(rho_b) - entropy_bits(rho.matrix());
}

DensityMatrix project_measure(const DensityMatrix& rho, Subsystem side,
                              const Eigen::Vector3d& n) {
    require_qubit(side, rho.dims());
    const Matrix sigma = pauli::direction(n.normalized());
    const Matrix id2 = Matrix::Identity(2, 2);
    Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (double sign : {1.0, -1.0}) {
        const LocalObservable proj{side, 0.5 * (id2 + sign * sigma)};
        const Matrix p = proj.embedded(rho.dims());
        out += p * rho.matrix() * p;
    }
    out = 0.5 * (out + out.adjoint().eval());
    return DensityMatrix(rho.dims(), out);
}

MeasureReport entropic_discord(const DensityMatrix& rho, Subsystem side) {
    require_qubit(side, rho.dims());
    const double total = mutual_information(rho);
    const auto post_mi = [&](const Eigen::Vector3d& n) {
        return mutual_information(project_measure(rho, side, n));
    };
    const SphereExtremum best = sphere_maximize(post_mi);
    MeasureReport report;
    report.value = clamp_measure(total - best.value);
    if (report.value < 0.0 && report.value >= -1e-8) report.value = 0.0;
    report.raw_minimum = report.value;
    report.minimizer = LocalObservable{side, pauli::direction(best.direction)};
    report.method = Method::GridOracle;
    report.iterations = best.evaluations;
    return report;
}

bool is_classical_quantum(const DensityMatrix& rho, Subsystem side, double tol) {
    return lqu(rho, side).value <= tol;
}

}  // namespace qdm
