#include "qdm/states.hpp"

#include <cmath>

namespace qdm {

namespace {

int log2_exact(int n) {
    int bits = 0;
    int v = n;
    while (v > 1) {
        v >>= 1;
        ++bits;
    }
    if ((1 << bits) != n) return -1;
    return bits;
}

// Single-qubit operator at position q of an n-qubit register, qubit 0 most
// significant.
Matrix embed_single(const Matrix& op, int q, int n_qubits) {
    Matrix out = Matrix::Identity(1, 1);
    for (int k = 0; k < n_qubits; ++k) {
        out = tensor_product(out, k == q ? op : pauli::identity2());
    }
    return out;
}

}  // namespace

DensityMatrix::DensityMatrix(Dims dims, Matrix matrix) : dims_(dims), matrix_(std::move(matrix)) {
    if (dims_.a <= 0 || dims_.b <= 0) {
        throw DimensionMismatch("density matrix: subsystem dimensions must be positive");
    }
    if (matrix_.rows() != dims_.total() || matrix_.cols() != dims_.total()) {
        throw DimensionMismatch("density matrix: matrix is " + std::to_string(matrix_.rows()) +
                                "x" + std::to_string(matrix_.cols()) + " but dims give " +
                                std::to_string(dims_.total()));
    }
    require_hermitian(matrix_, kHermTol);
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > 1e-10) {
        throw InvalidSpec("density matrix: trace is " + std::to_string(tr) + ", expected 1");
    }
    const EigenDecomposition ed = eig_hermitian(matrix_);
    const double min_eig = ed.eigenvalues.minCoeff();
    if (min_eig < -kPsdTol) {
        throw NegativeEigenvalue("density matrix: eigenvalue " + std::to_string(min_eig) +
                                 " below -" + std::to_string(kPsdTol));
    }
    if (min_eig < 0.0) {
        // Clamp finite-precision negatives and renormalize.
        Eigen::VectorXd lam = ed.eigenvalues.cwiseMax(0.0);
        lam /= lam.sum();
        matrix_ = ed.eigenvectors * lam.cast<Complex>().asDiagonal() * ed.eigenvectors.adjoint();
        matrix_ = 0.5 * (matrix_ + matrix_.adjoint().eval());
    }
}

const GateConstant& hadamard() {
    static const GateConstant g = [] {
        Matrix m(2, 2);
        const double s = 1.0 / std::sqrt(2.0);
        m << s, s, s, -s;
        return GateConstant{"Hadamard", 1, m};
    }();
    return g;
}

const GateConstant& cnot() {
    static const GateConstant g = [] {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = 1;
        m(1, 1) = 1;
        m(2, 3) = 1;
        m(3, 2) = 1;
        return GateConstant{"CNOT", 2, m};
    }();
    return g;
}

DensityMatrix make_rho_q(double p) {
    if (p < 0.0 || p > 1.0) throw OutOfRange("make_rho_q: p must lie in [0, 1]");
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(3, 3) = (1.0 + p) / 4.0;
    m(1, 1) = m(2, 2) = (1.0 - p) / 4.0;
    m(0, 3) = m(3, 0) = p * (1.0 + p) / 4.0;
    m(1, 2) = m(2, 1) = p * (1.0 - p) / 4.0;
    return DensityMatrix({2, 2}, m);
}

DensityMatrix make_rho_c(double p) {
    if (p < 0.0 || p > 1.0) throw OutOfRange("make_rho_c: p must lie in [0, 1]");
    Matrix m(4, 4);
    const double q = p / 4.0;
    const double q2 = p * p / 4.0;
    m << 0.25, q2, q, q,
         q2, 0.25, q, q,
         q, q, 0.25, q2,
         q, q, q2, 0.25;
    return DensityMatrix({2, 2}, m);
}

DensityMatrix make_bell_phi_plus() {
    Vector v = Vector::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    return DensityMatrix({2, 2}, v * v.adjoint());
}

DensityMatrix make_maximally_mixed(Dims dims) {
    return DensityMatrix(dims, Matrix::Identity(dims.total(), dims.total()) /
                                   static_cast<double>(dims.total()));
}

DensityMatrix make_classical_quantum(const ClassicalQuantumSpec& spec) {
    const size_t n = spec.weights.size();
    if (n == 0 || spec.basis.size() != n || spec.conditionals.size() != n) {
        throw InvalidSpec("classical-quantum spec: weights, basis and conditionals must have "
                          "equal nonzero length");
    }
    double wsum = 0.0;
    for (double w : spec.weights) {
        if (w < -1e-12) throw InvalidSpec("classical-quantum spec: negative weight");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-12) {
        throw InvalidSpec("classical-quantum spec: weights sum to " + std::to_string(wsum));
    }
    const int dim_a = static_cast<int>(spec.basis.front().size());
    const int dim_b = static_cast<int>(spec.conditionals.front().rows());
    for (size_t i = 0; i < n; ++i) {
        if (spec.basis[i].size() != dim_a) {
            throw InvalidSpec("classical-quantum spec: basis vectors differ in dimension");
        }
        for (size_t j = 0; j <= i; ++j) {
            const Complex ov = spec.basis[j].adjoint() * spec.basis[i];
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(ov - expect) > 1e-10) {
                throw InvalidSpec("classical-quantum spec: basis is not orthonormal");
            }
        }
        // Validates the conditional as a state on B.
        DensityMatrix check({1, dim_b}, spec.conditionals[i]);
    }
    Matrix out = Matrix::Zero(dim_a * dim_b, dim_a * dim_b);
    for (size_t i = 0; i < n; ++i) {
        const Matrix flag = spec.basis[i] * spec.basis[i].adjoint();
        out += spec.weights[i] * tensor_product(flag, spec.conditionals[i]);
    }
    return DensityMatrix({dim_a, dim_b}, out);
}

DensityMatrix make_cq_example() {
    ClassicalQuantumSpec spec;
    spec.weights = {0.5, 0.5};
    Vector e0 = Vector::Zero(2), e1 = Vector::Zero(2);
    e0(0) = 1;
    e1(1) = 1;
    spec.basis = {e0, e1};
    Matrix zero_state = Matrix::Zero(2, 2);
    zero_state(0, 0) = 1;
    Matrix plus_state = Matrix::Constant(2, 2, 0.5);
    spec.conditionals = {zero_state, plus_state};
    return make_classical_quantum(spec);
}

double purity(const DensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

double entropy_bits(const Matrix& m) {
    const EigenDecomposition ed = eig_hermitian(m);
    double s = 0.0;
    for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
        const double lam = ed.eigenvalues(i);
        if (lam > 0.0) s -= lam * std::log2(lam);
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return entropy_bits(rho.matrix());
}

DensityMatrix apply_gate(const DensityMatrix& rho, const GateConstant& g,
                         const std::vector<int>& targets) {
    const int na = log2_exact(rho.dims().a);
    const int nb = log2_exact(rho.dims().b);
    if (na < 0 || nb < 0) {
        throw BadTarget("apply_gate: subsystem dimensions must be powers of two");
    }
    const int n_qubits = na + nb;
    if (static_cast<int>(targets.size()) != g.qubits) {
        throw BadTarget("apply_gate: " + g.name + " takes " + std::to_string(g.qubits) +
                        " target(s)");
    }
    for (int t : targets) {
        if (t < 0 || t >= n_qubits) {
            throw BadTarget("apply_gate: target " + std::to_string(t) + " out of range");
        }
    }
    Matrix u;
    if (g.qubits == 1) {
        u = embed_single(g.matrix, targets[0], n_qubits);
    } else if (g.name == "CNOT") {
        const int c = targets[0], t = targets[1];
        if (c == t) throw BadTarget("apply_gate: CNOT control equals target");
        Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
        p0(0, 0) = 1;
        p1(1, 1) = 1;
        u = embed_single(p0, c, n_qubits) +
            embed_single(p1, c, n_qubits) * embed_single(pauli::x(), t, n_qubits);
    } else {
        throw BadTarget("apply_gate: unsupported multi-qubit gate " + g.name);
    }
    return DensityMatrix(rho.dims(), u * rho.matrix() * u.adjoint());
}

DensityMatrix depolarize_b(const DensityMatrix& rho, double strength) {
    if (strength < 0.0 || strength > 1.0) {
        throw OutOfRange("depolarize_b: strength must lie in [0, 1]");
    }
    const int db = rho.dims().b;
    const Matrix rho_a = partial_trace(rho.matrix(), rho.dims().a, db, Subsystem::A);
    const Matrix mixed = Matrix::Identity(db, db) / static_cast<double>(db);
    return DensityMatrix(rho.dims(), (1.0 - strength) * rho.matrix() +
                                         strength * tensor_product(rho_a, mixed));
}

DensityMatrix dephase_b(const DensityMatrix& rho, double strength) {
    if (strength < 0.0 || strength > 1.0) {
        throw OutOfRange("dephase_b: strength must lie in [0, 1]");
    }
    const int da = rho.dims().a, db = rho.dims().b;
    const Matrix ia = Matrix::Identity(da, da);
    Matrix dephased = Matrix::Zero(da * db, da * db);
    for (int k = 0; k < db; ++k) {
        Matrix pk = Matrix::Zero(db, db);
        pk(k, k) = 1;
        const Matrix proj = tensor_product(ia, pk);
        dephased += proj * rho.matrix() * proj;
    }
    return DensityMatrix(rho.dims(),
                         (1.0 - strength) * rho.matrix() + strength * dephased);
}

}  // namespace qdm
