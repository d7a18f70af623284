#include "qdm/check.hpp"

#include <algorithm>
#include <cmath>

#include "qdm/measures.hpp"
#include "qdm/optimize.hpp"
#include "qdm/random.hpp"

namespace qdm {

namespace {

int scaled(int n, int thinning) { return std::max(n / std::max(thinning, 1), 1); }

CheckResult calibration_check(Rng& rng, const CheckOptions& opt) {
    CheckResult res{"pure-state-calibration", true, 0.0,
                    "QFI equals skew information on pure states"};
    const int n = scaled(100, opt.thinning);
    for (int t = 0; t < n; ++t) {
        const DensityMatrix rho = rng.pure({2, 2});
        const LocalObservable k{Subsystem::A, pauli::direction(rng.unit_vector())};
        const double skew = skew_information(rho, k);
        const double fisher = opt.qfi_mutation * qfi(rho, k);
        res.worst_residual = std::max(res.worst_residual, std::abs(fisher - skew));
    }
    res.passed = res.worst_residual <= 1e-9;
    return res;
}

CheckResult inequality_chain_check(Rng& rng, const CheckOptions& opt) {
    CheckResult res{"inequality-chain", true, 0.0,
                    "skew <= QFI <= 2 skew on random states and observables"};
    const int n = scaled(1000, opt.thinning);
    for (int t = 0; t < n; ++t) {
        const DensityMatrix rho = rng.density({2, 2});
        const LocalObservable k{Subsystem::A, pauli::direction(rng.unit_vector())};
        const double skew = skew_information(rho, k);
        const double fisher = opt.qfi_mutation * qfi(rho, k);
        res.worst_residual = std::max({res.worst_residual, skew - fisher,
                                       fisher - 2.0 * skew});
    }
    res.passed = res.worst_residual <= 1e-9;
    return res;
}

CheckResult oracle_check(Rng& rng, const CheckOptions& opt, Objective objective) {
    const bool is_skew = objective == Objective::SkewInformation;
    CheckResult res{is_skew ? "oracle-lqu" : "oracle-qip", true, 0.0,
                    is_skew ? "closed-form LQU matches the sphere-grid oracle"
                            : "closed-form QIP matches the sphere-grid oracle"};
    const int n = scaled(200, opt.thinning);
    for (int t = 0; t < n; ++t) {
        const DensityMatrix rho = rng.density({2, 2});
        const double closed = is_skew ? lqu(rho, Subsystem::A).value
                                      : qip(rho, Subsystem::A).raw_minimum;
        const OrbitProblem problem{rho, Subsystem::A, SpectrumSpec::qubit_default(), objective};
        const double grid = sphere_grid_minimize(problem).value;
        res.worst_residual = std::max(res.worst_residual, std::abs(closed - grid));
    }
    res.passed = res.worst_residual <= 1e-4;
    return res;
}

CheckResult local_unitary_check(Rng& rng, const CheckOptions& opt) {
    CheckResult res{"local-unitary-invariance", true, 0.0,
                    "LQU is invariant under U_A (x) U_B conjugation"};
    const int n = scaled(100, opt.thinning);
    for (int t = 0; t < n; ++t) {
        const DensityMatrix rho = rng.density({2, 2});
        const double before = lqu(rho, Subsystem::A).value;
        const Matrix u = tensor_product(rng.unitary(2), rng.unitary(2));
        const DensityMatrix rotated({2, 2}, u * rho.matrix() * u.adjoint());
        const double after = lqu(rotated, Subsystem::A).value;
        res.worst_residual = std::max(res.worst_residual, std::abs(after - before));
    }
    res.passed = res.worst_residual <= 1e-6;
    return res;
}

CheckResult monotone_check(Rng& rng, const CheckOptions& opt) {
    CheckResult res{"b-monotonicity", true, 0.0,
                    "LQU(side A) does not increase under channels on B"};
    const int n = scaled(10, opt.thinning);
    for (int t = 0; t < n; ++t) {
        const DensityMatrix rho = rng.density({2, 2});
        const double before = lqu(rho, Subsystem::A).value;
        const double q = rng.uniform(0.0, 1.0);
        for (const DensityMatrix& degraded : {depolarize_b(rho, q), dephase_b(rho, q)}) {
            const double after = lqu(degraded, Subsystem::A).value;
            res.worst_residual = std::max(res.worst_residual, after - before);
        }
    }
    res.passed = res.worst_residual <= 1e-6;
    return res;
}

CheckResult cq_zero_check(Rng& rng, const CheckOptions& opt) {
    CheckResult res{"cq-zero", true, 0.0,
                    "LQU and raw QIP vanish on classical-quantum states"};
    const int n = scaled(50, opt.thinning);
    for (int t = 0; t < n; ++t) {
        const DensityMatrix rho = make_classical_quantum(rng.cq_spec());
        res.worst_residual = std::max({res.worst_residual, lqu(rho, Subsystem::A).value,
                                       qip(rho, Subsystem::A).raw_minimum});
    }
    res.passed = res.worst_residual <= 1e-8;
    return res;
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& suite, const CheckOptions& options) {
    std::vector<CheckResult> results;
    const bool all = suite == "all" || suite.empty();
    Rng rng(options.seed);
    if (all || suite == "inequality") {
        results.push_back(calibration_check(rng, options));
        results.push_back(inequality_chain_check(rng, options));
    }
    if (all || suite == "oracle") {
        results.push_back(oracle_check(rng, options, Objective::SkewInformation));
        results.push_back(oracle_check(rng, options, Objective::Qfi));
    }
    if (all || suite == "unitary") {
        results.push_back(local_unitary_check(rng, options));
    }
    if (all || suite == "monotone") {
        results.push_back(monotone_check(rng, options));
    }
    if (all || suite == "cq") {
        results.push_back(cq_zero_check(rng, options));
    }
    if (results.empty()) {
        throw std::invalid_argument("unknown check suite: " + suite);
    }
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace qdm
