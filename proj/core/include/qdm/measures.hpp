#pragma once

#include <optional>
#include <vector>

#include "qdm/states.hpp"

namespace qdm {

/// Eigenvalues excluded from spectral QFI sums when p_i + p_j falls below this.
inline constexpr double kQfiNullTol = 1e-12;

/// Fixed nondegenerate spectrum defining the minimization orbit of local
/// observables. Eigenvalues strictly increasing, gaps >= 1e-9.
struct SpectrumSpec {
    std::vector<double> eigenvalues;

    static SpectrumSpec qubit_default() { return {{-1.0, 1.0}}; }

    void validate(int subsystem_dim) const;
};

struct LocalObservable {
    Subsystem side = Subsystem::A;
    Matrix local;  // Hermitian, acts on the chosen subsystem

    /// K (x) 1 or 1 (x) K on the full space.
    Matrix embedded(Dims dims) const;
};

enum class Method { ClosedForm, Multistart, GridOracle };

struct MeasureReport {
    double value = 0.0;         // the measure itself (for QIP: the normalized value)
    double raw_minimum = 0.0;   // for QIP: min F before the 1/4 factor; else == value
    std::optional<LocalObservable> minimizer;
    Method method = Method::ClosedForm;
    int iterations = 0;
    double oracle_gap = 0.0;
    std::vector<double> trace;  // objective values, nonincreasing for descent methods
};

/// Wigner-Yanase skew information Tr(rho K^2) - Tr(sqrt(rho) K sqrt(rho) K).
double skew_information(const DensityMatrix& rho, const Matrix& k_embedded);
double skew_information(const DensityMatrix& rho, const LocalObservable& k);

/// Quantum Fisher information, spectral form
/// sum_{i<j, p_i+p_j>0} (p_i-p_j)^2/(p_i+p_j) |<i|H|j>|^2,
/// normalized so that pure states give the variance of the generator
/// (the estimation-theoretic SLD value is 4x this, see estimate.hpp).
double qfi(const DensityMatrix& rho, const Matrix& h_embedded);
double qfi(const DensityMatrix& rho, const LocalObservable& h);

/// QFI over Bloch directions as a quadratic form: F((n.sigma) (x) 1) = n^T M n.
Eigen::Matrix3d qfi_quadratic_form(const DensityMatrix& rho, Subsystem side);

/// Skew-information Gram matrix W_ab = Tr(sqrt(rho) sigma_a sqrt(rho) sigma_b),
/// so that I_wy((n.sigma) (x) 1) = 1 - n^T W n on qubit subsystems.
Eigen::Matrix3d skew_gram_matrix(const DensityMatrix& rho, Subsystem side);

/// Local Quantum Uncertainty: min of skew information over the fixed-spectrum
/// orbit. Closed form r^2 (1 - lambda_max(W)) for qubit subsystems, multistart
/// descent otherwise.
MeasureReport lqu(const DensityMatrix& rho, Subsystem side,
                  const SpectrumSpec& spectrum = SpectrumSpec::qubit_default());

/// Quantum Interferometric Power: 1/4 of the minimum QFI over the orbit.
/// value holds the normalized measure, raw_minimum the plain minimum of F.
MeasureReport qip(const DensityMatrix& rho, Subsystem side,
                  const SpectrumSpec& spectrum = SpectrumSpec::qubit_default());

/// S(rho_A) + S(rho_B) - S(rho_AB), in bits.
double mutual_information(const DensityMatrix& rho);

/// Mutual information destroyed by the least disturbing rank-1 projective
/// measurement on the chosen (qubit) subsystem.
MeasureReport entropic_discord(const DensityMatrix& rho, Subsystem side = Subsystem::A);

/// Post-measurement state after the projective measurement along Bloch
/// direction n on the chosen subsystem.
DensityMatrix project_measure(const DensityMatrix& rho, Subsystem side,
                              const Eigen::Vector3d& n);

bool is_classical_quantum(const DensityMatrix& rho, Subsystem side, double tol = 1e-8);

}  // namespace qdm
