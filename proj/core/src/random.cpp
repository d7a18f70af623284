#include "qdm/random.hpp"

#include <cmath>

namespace qdm {

Matrix Rng::ginibre(int dim) {
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = complex_gaussian();
    return g;
}

Matrix Rng::hermitian(int dim) {
    const Matrix g = ginibre(dim);
    return 0.5 * (g + g.adjoint().eval());
}

Matrix Rng::unitary(int dim) {
    const Matrix g = ginibre(dim);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

Vector Rng::state_vector(int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = complex_gaussian();
    return v / v.norm();
}

Eigen::Vector3d Rng::unit_vector() {
    Eigen::Vector3d v;
    do {
        v = {gaussian(), gaussian(), gaussian()};
    } while (v.norm() < 1e-6);
    return v.normalized();
}

DensityMatrix Rng::density(Dims dims) {
    const Matrix g = ginibre(dims.total());
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint().eval());
    return DensityMatrix(dims, rho);
}

DensityMatrix Rng::pure(Dims dims) {
    const Vector v = state_vector(dims.total());
    return DensityMatrix(dims, v * v.adjoint());
}

ClassicalQuantumSpec Rng::cq_spec() {
    ClassicalQuantumSpec spec;
    const double c = uniform(0.05, 0.95);
    spec.weights = {c, 1.0 - c};
    const Matrix u = unitary(2);
    spec.basis = {u.col(0), u.col(1)};
    for (int i = 0; i < 2; ++i) {
        const Matrix g = ginibre(2);
        Matrix rho = g * g.adjoint();
        rho /= rho.trace().real();
        rho = 0.5 * (rho + rho.adjoint().eval());
        spec.conditionals.push_back(rho);
    }
    return spec;
}

}  // namespace qdm
