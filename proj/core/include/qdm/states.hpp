#pragma once

#include <string>
#include <vector>

#include "qdm/linalg.hpp"

namespace qdm {

struct Dims {
    int a = 2;
    int b = 2;
    int total() const { return a * b; }
    int side(Subsystem s) const { return s == Subsystem::A ? a : b; }
};

/// Validated bipartite quantum state: Hermitian, unit trace, positive
/// semidefinite within tolerance. Eigenvalues in [-kPsdTol, 0) are clamped to
/// zero and the trace renormalized; anything more negative is rejected.
class DensityMatrix {
  public:
    DensityMatrix(Dims dims, Matrix matrix);

    const Matrix& matrix() const { return matrix_; }
    Dims dims() const { return dims_; }

  private:
    Dims dims_;
    Matrix matrix_;
};

struct GateConstant {
    std::string name;
    int qubits;  // arity
    Matrix matrix;
};

const GateConstant& hadamard();
const GateConstant& cnot();

/// Ensemble {c_i, |i><i|_A (x) rho^i_B}: an orthonormal flag basis on A with
/// a conditional state of B attached to each flag.
struct ClassicalQuantumSpec {
    std::vector<double> weights;
    std::vector<Vector> basis;         // orthonormal vectors on subsystem A
    std::vector<Matrix> conditionals;  // one density matrix of B per weight
};

/// Bell-diagonal probe: two qubits prepared in (1 + p sigma_z)/2 each, then
/// Hadamard on A followed by CNOT (A control). Returned as the closed-form
/// 4x4 matrix; apply_gate reproduces it from the circuit.
DensityMatrix make_rho_q(double p);

/// Classically correlated probe with the same purity as make_rho_q(p).
DensityMatrix make_rho_c(double p);

DensityMatrix make_bell_phi_plus();
DensityMatrix make_maximally_mixed(Dims dims = {2, 2});

DensityMatrix make_classical_quantum(const ClassicalQuantumSpec& spec);

/// Classical-quantum preset with noncommuting conditional states: zero
/// discord measured on A, strictly positive measured on B.
DensityMatrix make_cq_example();

double purity(const DensityMatrix& rho);

/// -sum lambda log2 lambda, in bits.
double von_neumann_entropy(const DensityMatrix& rho);
/// Entropy of a raw Hermitian PSD matrix (reduced states etc.).
double entropy_bits(const Matrix& m);

/// Conjugate by the gate unitary embedded at the given qubit positions.
/// Both subsystems must factor into qubits; qubit 0 is the most significant.
DensityMatrix apply_gate(const DensityMatrix& rho, const GateConstant& g,
                         const std::vector<int>& targets);

/// (1-q) rho + q Tr_B(rho) (x) I/dim_b
DensityMatrix depolarize_b(const DensityMatrix& rho, double strength);
/// (1-q) rho + q sum_k (1 (x) |k><k|) rho (1 (x) |k><k|)
DensityMatrix dephase_b(const DensityMatrix& rho, double strength);

}  // namespace qdm
