#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "qdm/errors.hpp"

namespace qdm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance for accepting a matrix as Hermitian (absolute, on unit-trace scale).
inline constexpr double kHermTol = 1e-9;
/// Eigenvalues in [-kPsdTol, 0) are clamped to zero; below that is an error.
inline constexpr double kPsdTol = 1e-10;

enum class Subsystem { A, B };

/// Spectral decomposition of a Hermitian matrix, eigenvalues ascending.
struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;  // orthonormal columns, eigenvectors[:, i] <-> eigenvalues[i]

    Matrix reconstruct() const {
        return eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
               eigenvectors.adjoint();
    }
};

bool is_hermitian(const Matrix& m, double tol = kHermTol);
void require_hermitian(const Matrix& m, double tol = kHermTol);
void require_square(const Matrix& m);

Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Trace out one subsystem of a (dim_a*dim_b)-dimensional operator.
Matrix partial_trace(const Matrix& m, int dim_a, int dim_b, Subsystem keep);

EigenDecomposition eig_hermitian(const Matrix& m);

/// Apply a scalar function to a Hermitian matrix through its eigenbasis.
Matrix func_hermitian(const Matrix& m, const std::function<Complex(double)>& f);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-kPsdTol, 0) clamp to zero; below -kPsdTol throws.
Matrix sqrt_psd(const Matrix& m);

Matrix commutator(const Matrix& a, const Matrix& b);

namespace pauli {
const Matrix& identity2();
const Matrix& x();
const Matrix& y();
const Matrix& z();
/// n_x sigma_x + n_y sigma_y + n_z sigma_z
Matrix direction(const Eigen::Vector3d& n);
const Matrix& component(int axis);  // 0 -> x, 1 -> y, 2 -> z
}  // namespace pauli

}  // namespace qdm
