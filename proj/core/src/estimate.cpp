#include "qdm/estimate.hpp"

#include <cmath>
#include <random>

namespace qdm {

namespace {

Matrix phase_unitary(const Matrix& h, double theta) {
    return func_hermitian(h, [theta](double lam) { return std::exp(Complex(0.0, lam * theta)); });
}

// d(rho_theta)/d(theta) = i [H, rho_theta] for U_theta = e^{iH theta}.
Matrix encoded_derivative(const Matrix& h, const Matrix& rho_theta) {
    Matrix d = Complex(0.0, 1.0) * commutator(h, rho_theta);
    return 0.5 * (d + d.adjoint().eval());
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

DensityMatrix encode_phase(const DensityMatrix& rho, const Matrix& h, double theta) {
    if (h.rows() != rho.matrix().rows()) {
        throw DimensionMismatch("encode_phase: generator dimension mismatch");
    }
    const Matrix u = phase_unitary(h, theta);
    return DensityMatrix(rho.dims(), u * rho.matrix() * u.adjoint());
}

SldBasis sld_measurement_basis(const DensityMatrix& rho, const Matrix& h, double theta) {
    const DensityMatrix rho_theta = encode_phase(rho, h, theta);
    const EigenDecomposition ed = eig_hermitian(rho_theta.matrix());
    const Matrix d_eig =
        ed.eigenvectors.adjoint() * encoded_derivative(h, rho_theta.matrix()) * ed.eigenvectors;
    const Eigen::Index n = ed.eigenvalues.size();
    Matrix l_eig = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double ps = ed.eigenvalues(i) + ed.eigenvalues(j);
            if (ps > kQfiNullTol) l_eig(i, j) = 2.0 * d_eig(i, j) / ps;
        }
    }
    Matrix l = ed.eigenvectors * l_eig * ed.eigenvectors.adjoint();
    l = 0.5 * (l + l.adjoint().eval());
    return {l, eig_hermitian(l).eigenvectors};
}

Eigen::VectorXd outcome_distribution(const Matrix& basis, const DensityMatrix& rho,
                                     const Matrix& h, double theta) {
    const DensityMatrix rho_theta = encode_phase(rho, h, theta);
    const Eigen::Index n = basis.cols();
    Eigen::VectorXd q(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex v = basis.col(k).adjoint() * rho_theta.matrix() * basis.col(k);
        q(k) = std::max(v.real(), 0.0);
    }
    q /= q.sum();
    return q;
}

double classical_fisher(const Matrix& basis, const DensityMatrix& rho, const Matrix& h,
                        double theta) {
    const DensityMatrix rho_theta = encode_phase(rho, h, theta);
    const Matrix drho = encoded_derivative(h, rho_theta.matrix());
    double fisher = 0.0;
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
        const double q = (basis.col(k).adjoint() * rho_theta.matrix() * basis.col(k))(0).real();
        const double dq = (basis.col(k).adjoint() * drho * basis.col(k))(0).real();
        if (q > 1e-14) fisher += dq * dq / q;
    }
    return fisher;
}

double sld_fisher(const DensityMatrix& rho, const Matrix& h) {
    return 4.0 * qfi(rho, h);
}

double cramer_rao_bound(const DensityMatrix& rho, const Matrix& h, long shots) {
    if (shots < 1) throw OutOfRange("cramer_rao_bound: shots must be >= 1");
    const double fisher = sld_fisher(rho, h);
    if (fisher <= kFlatTol) {
        throw ZeroFisher("cramer_rao_bound: quantum Fisher information vanishes");
    }
    return 1.0 / (static_cast<double>(shots) * fisher);
}

namespace {

struct LikelihoodModel {
    const Matrix* basis;
    const DensityMatrix* probe;
    const Matrix* generator;

    double log_likelihood(const std::vector<long>& counts, double theta) const {
        const Eigen::VectorXd q = outcome_distribution(*basis, *probe, *generator, theta);
        double ll = 0.0;
        for (Eigen::Index k = 0; k < q.size(); ++k) {
            if (counts[static_cast<size_t>(k)] == 0) continue;
            ll += static_cast<double>(counts[static_cast<size_t>(k)]) *
                  std::log(std::max(q(k), 1e-300));
        }
        return ll;
    }
};

double golden_maximize(const std::function<double(double)>& f, double lo, double hi,
                       double tol) {
    constexpr double inv_phi = 0.6180339887498948482;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

EstimationResult simulate_estimation(const EstimationConfig& config) {
    if (config.shots < 1) throw OutOfRange("simulate_estimation: shots must be >= 1");
    if (config.batches < 1) throw OutOfRange("simulate_estimation: batches must be >= 1");
    const auto [w_lo, w_hi] = config.theta_window;
    if (!(w_lo < w_hi) || config.theta_true < w_lo || config.theta_true > w_hi) {
        throw OutOfRange("simulate_estimation: theta_true must lie inside theta_window");
    }
    const double fisher = sld_fisher(config.probe, config.generator);
    if (fisher <= kFlatTol) {
        throw FlatLikelihood("probe insensitive to this phase direction (QFI = " +
                             std::to_string(fisher) + ")");
    }

    const SldBasis sld = sld_measurement_basis(config.probe, config.generator, config.theta_true);
    const LikelihoodModel model{&sld.basis, &config.probe, &config.generator};
    const Eigen::VectorXd q_true =
        outcome_distribution(sld.basis, config.probe, config.generator, config.theta_true);
    const Eigen::Index n_out = q_true.size();

    // Cumulative distribution for inverse-CDF sampling.
    std::vector<double> cdf(static_cast<size_t>(n_out));
    double acc = 0.0;
    for (Eigen::Index k = 0; k < n_out; ++k) {
        acc += q_true(k);
        cdf[static_cast<size_t>(k)] = acc;
    }
    cdf.back() = 1.0;

    // Likelihood grid shared by all batches.
    constexpr int kGridPoints = 512;
    std::vector<double> grid_theta(kGridPoints);
    std::vector<Eigen::VectorXd> grid_q(kGridPoints);
    for (int g = 0; g < kGridPoints; ++g) {
        grid_theta[g] = w_lo + (w_hi - w_lo) * g / (kGridPoints - 1);
        grid_q[g] =
            outcome_distribution(sld.basis, config.probe, config.generator, grid_theta[g]);
    }

    EstimationResult result;
    result.fisher_quantum = fisher;
    result.crb = 1.0 / (static_cast<double>(config.shots) * fisher);
    result.outcome_histogram.assign(static_cast<size_t>(n_out), 0);
    result.batch_estimates.reserve(static_cast<size_t>(config.batches));

    for (int batch = 0; batch < config.batches; ++batch) {
        std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(batch) * 0x9E3779B97F4A7C15ULL);
        std::vector<long> counts(static_cast<size_t>(n_out), 0);
        for (long s = 0; s < config.shots; ++s) {
            const double u = uniform01(rng);
            size_t k = 0;
            while (k + 1 < cdf.size() && u > cdf[k]) ++k;
            ++counts[k];
        }
        for (size_t k = 0; k < counts.size(); ++k) result.outcome_histogram[k] += counts[k];

        // Coarse grid scan, then golden-section refinement around the best cell.
        int best_g = 0;
        double best_ll = -std::numeric_limits<double>::infinity();
        for (int g = 0; g < kGridPoints; ++g) {
            double ll = 0.0;
            for (Eigen::Index k = 0; k < n_out; ++k) {
                if (counts[static_cast<size_t>(k)] == 0) continue;
                ll += static_cast<double>(counts[static_cast<size_t>(k)]) *
                      std::log(std::max(grid_q[g](k), 1e-300));
            }
            if (ll > best_ll) {
                best_ll = ll;
                best_g = g;
            }
        }
        const double lo = grid_theta[std::max(best_g - 1, 0)];
        const double hi = grid_theta[std::min(best_g + 1, kGridPoints - 1)];
        const double theta_hat = golden_maximize(
            [&](double t) { return model.log_likelihood(counts, t); }, lo, hi, 1e-8);
        result.batch_estimates.push_back(theta_hat);
    }

    double mean = 0.0;
    for (double t : result.batch_estimates) mean += t;
    mean /= static_cast<double>(result.batch_estimates.size());
    result.theta_hat = mean;
    double var = 0.0;
    for (double t : result.batch_estimates) var += (t - mean) * (t - mean);
    if (result.batch_estimates.size() > 1) {
        var /= static_cast<double>(result.batch_estimates.size() - 1);
    }
    result.variance_empirical = var;
    return result;
}

}  // namespace qdm
