#include "qdm/linalg.hpp"

#include <cmath>
#include <string>

namespace qdm {

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void require_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        throw NotHermitian("matrix is not square (" + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ")");
    }
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tol) {
        throw NotHermitian("matrix is not Hermitian: max |M - M^dag| = " + std::to_string(asym));
    }
}

void require_square(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("matrix is not square");
    }
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix partial_trace(const Matrix& m, int dim_a, int dim_b, Subsystem keep) {
    require_square(m);
    if (dim_a <= 0 || dim_b <= 0 ||
        m.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
        throw DimensionMismatch("partial_trace: matrix dimension " + std::to_string(m.rows()) +
                                " does not factor as " + std::to_string(dim_a) + "x" +
                                std::to_string(dim_b));
    }
    if (keep == Subsystem::A) {
        Matrix out = Matrix::Zero(dim_a, dim_a);
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j)
                for (int k = 0; k < dim_b; ++k)
                    out(i, j) += m(i * dim_b + k, j * dim_b + k);
        return out;
    }
    Matrix out = Matrix::Zero(dim_b, dim_b);
    for (int i = 0; i < dim_b; ++i)
        for (int j = 0; j < dim_b; ++j)
            for (int k = 0; k < dim_a; ++k)
                out(i, j) += m(k * dim_b + i, k * dim_b + j);
    return out;
}

EigenDecomposition eig_hermitian(const Matrix& m) {
    require_hermitian(m);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix func_hermitian(const Matrix& m, const std::function<Complex(double)>& f) {
    const EigenDecomposition ed = eig_hermitian(m);
    Vector fvals(ed.eigenvalues.size());
    for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
        fvals(i) = f(ed.eigenvalues(i));
    }
    return ed.eigenvectors * fvals.asDiagonal() * ed.eigenvectors.adjoint();
}

Matrix sqrt_psd(const Matrix& m) {
    const EigenDecomposition ed = eig_hermitian(m);
    Vector fvals(ed.eigenvalues.size());
    for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
        double lam = ed.eigenvalues(i);
        if (lam < -kPsdTol) {
            throw NegativeEigenvalue("sqrt_psd: eigenvalue " + std::to_string(lam) +
                                     " below -" + std::to_string(kPsdTol));
        }
        // Eigenvalues within the PSD tolerance of zero are treated as exact
        // zeros: sqrt amplifies O(1e-16) eigenvalue noise to O(1e-8).
        fvals(i) = lam <= kPsdTol ? 0.0 : std::sqrt(lam);
    }
    return ed.eigenvectors * fvals.asDiagonal() * ed.eigenvectors.adjoint();
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("commutator: dimensions differ");
    }
    return a * b - b * a;
}

namespace pauli {

const Matrix& identity2() {
    static const Matrix m = Matrix::Identity(2, 2);
    return m;
}

const Matrix& x() {
    static const Matrix m = [] {
        Matrix s(2, 2);
        s << 0, 1, 1, 0;
        return s;
    }();
    return m;
}

const Matrix& y() {
    static const Matrix m = [] {
        Matrix s(2, 2);
        s << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
        return s;
    }();
    return m;
}

const Matrix& z() {
    static const Matrix m = [] {
        Matrix s(2, 2);
        s << 1, 0, 0, -1;
        return s;
    }();
    return m;
}

Matrix direction(const Eigen::Vector3d& n) {
    return n(0) * x() + n(1) * y() + n(2) * z();
}

const Matrix& component(int axis) {
    switch (axis) {
        case 0: return x();
        case 1: return y();
        case 2: return z();
        default: throw OutOfRange("pauli::component: axis must be 0, 1 or 2");
    }
}

}  // namespace pauli

}  // namespace qdm
