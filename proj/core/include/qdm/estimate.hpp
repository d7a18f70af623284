#pragma once

#include <cstdint>
#include <numbers>
#include <utility>

#include "qdm/measures.hpp"

namespace qdm {

/// QFI at or below this means the probe carries no phase information.
inline constexpr double kFlatTol = 1e-10;

struct EstimationConfig {
    DensityMatrix probe;
    Matrix generator;  // Hermitian, full dimension
    double theta_true = 0.0;
    long shots = 1;
    std::uint64_t seed = 0;
    std::pair<double, double> theta_window{0.0, std::numbers::pi / 2.0};
    int batches = 100;
};

struct EstimationResult {
    double theta_hat = 0.0;           // mean of per-batch ML estimates
    double variance_empirical = 0.0;  // sample variance over batches
    double crb = 0.0;                 // 1 / (shots * F)
    double fisher_quantum = 0.0;
    std::vector<long> outcome_histogram;   // aggregated over all batches
    std::vector<double> batch_estimates;
};

/// e^{iH theta} rho e^{-iH theta}
DensityMatrix encode_phase(const DensityMatrix& rho, const Matrix& h, double theta);

/// QFI in the estimation-theory normalization, Tr(rho_theta L^2): equal to
/// 4x the measure-theoretic qfi() of measures.hpp. This is the F appearing
/// in Var(theta_hat) >= 1/(shots * F).
double sld_fisher(const DensityMatrix& rho, const Matrix& h);

struct SldBasis {
    Matrix sld;    // the symmetric logarithmic derivative L at theta
    Matrix basis;  // orthonormal eigenvectors of L, one column per outcome
};

/// Solves L rho_theta + rho_theta L = 2 d(rho_theta)/d(theta) in the
/// eigenbasis of rho_theta. Measuring in L's eigenbasis attains the QFI.
SldBasis sld_measurement_basis(const DensityMatrix& rho, const Matrix& h, double theta);

/// Classical Fisher information of the projective measurement given by
/// `basis` on the encoded family, evaluated at theta.
double classical_fisher(const Matrix& basis, const DensityMatrix& rho, const Matrix& h,
                        double theta);

/// Outcome probabilities of `basis` on the state encoded at theta.
Eigen::VectorXd outcome_distribution(const Matrix& basis, const DensityMatrix& rho,
                                     const Matrix& h, double theta);

/// Monte Carlo run of the phase-estimation protocol: sample outcomes in the
/// SLD basis at theta_true, maximize the log-likelihood per batch, compare
/// the batch variance with the Cramer-Rao bound. Deterministic per seed.
EstimationResult simulate_estimation(const EstimationConfig& config);

/// 1 / (shots * F)
double cramer_rao_bound(const DensityMatrix& rho, const Matrix& h, long shots);

}  // namespace qdm
