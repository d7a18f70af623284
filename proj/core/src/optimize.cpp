#include "qdm/optimize.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qdm {

namespace {

constexpr double kGoldenAngle = std::numbers::pi * (3.0 - 2.23606797749978969);  // pi(3-sqrt 5)

// van der Corput radical inverse, base 2.
double vdc2(std::uint64_t k) {
    double inv = 0.0, base = 0.5;
    while (k > 0) {
        if (k & 1) inv += base;
        base *= 0.5;
        k >>= 1;
    }
    return inv;
}

Eigen::Vector3d spiral_point(int k, double z) {
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = kGoldenAngle * static_cast<double>(k);
    return {r * std::cos(phi), r * std::sin(phi), z};
}

// Orthonormal frame completing `axis`.
void tangent_frame(const Eigen::Vector3d& axis, Eigen::Vector3d& e1, Eigen::Vector3d& e2) {
    const Eigen::Vector3d helper =
        std::abs(axis.z()) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
    e1 = axis.cross(helper).normalized();
    e2 = axis.cross(e1);
}

Eigen::Vector3d rotate_towards(const Eigen::Vector3d& from, const Eigen::Vector3d& tangent,
                               double angle) {
    return (std::cos(angle) * from + std::sin(angle) * tangent).normalized();
}

Matrix embedded_identity_padded(const Matrix& local, Subsystem side, Dims dims) {
    if (side == Subsystem::A) {
        return tensor_product(local, Matrix::Identity(dims.b, dims.b));
    }
    return tensor_product(Matrix::Identity(dims.a, dims.a), local);
}

// Per-problem cache so grid evaluations stay cheap: sqrt(rho) for the skew
// objective, the state eigenbasis for the QFI objective.
struct QubitObjectiveContext {
    double r, c;
    Objective objective;
    // skew
    Matrix rho;
    Matrix root;
    Matrix sig_emb[3];
    // qfi
    Eigen::VectorXd p;
    Matrix s_eig[3];

    explicit QubitObjectiveContext(const OrbitProblem& problem) {
        const Dims dims = problem.state.dims();
        if (dims.side(problem.side) != 2) {
            throw NotAQubit("orbit oracle requires a qubit subsystem");
        }
        problem.spectrum.validate(2);
        r = (problem.spectrum.eigenvalues[1] - problem.spectrum.eigenvalues[0]) / 2.0;
        c = (problem.spectrum.eigenvalues[1] + problem.spectrum.eigenvalues[0]) / 2.0;
        objective = problem.objective;
        rho = problem.state.matrix();
        if (objective == Objective::SkewInformation) {
            root = sqrt_psd(rho);
            for (int a = 0; a < 3; ++a) {
                sig_emb[a] = embedded_identity_padded(pauli::component(a), problem.side, dims);
            }
        } else {
            const EigenDecomposition ed = eig_hermitian(rho);
            p = ed.eigenvalues;
            for (int a = 0; a < 3; ++a) {
                s_eig[a] = ed.eigenvectors.adjoint() *
                           embedded_identity_padded(pauli::component(a), problem.side, dims) *
                           ed.eigenvectors;
            }
        }
    }

    double eval(const Eigen::Vector3d& n) const {
        if (objective == Objective::SkewInformation) {
            Matrix k = c * Matrix::Identity(rho.rows(), rho.cols());
            for (int a = 0; a < 3; ++a) k += (r * n(a)) * sig_emb[a];
            return (rho * k * k).trace().real() - (root * k * root * k).trace().real();
        }
        const Eigen::Index d = p.size();
        double sum = 0.0;
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = i + 1; j < d; ++j) {
                const double ps = p(i) + p(j);
                if (ps <= kQfiNullTol) continue;
                const double pd = p(i) - p(j);
                Complex hij = 0.0;
                for (int a = 0; a < 3; ++a) hij += n(a) * s_eig[a](i, j);
                sum += (pd * pd / ps) * std::norm(r * hij);
            }
        }
        return sum;
    }
};

SphereExtremum sphere_search_min(const std::function<double(const Eigen::Vector3d&)>& f,
                                 const GridSpec& grid) {
    if (grid.resolution < 64) {
        throw InvalidSpec("sphere grid resolution must be at least 64");
    }
    SphereExtremum best{Eigen::Vector3d::UnitZ(), std::numeric_limits<double>::infinity(), 0};
    auto consider = [&](const Eigen::Vector3d& n) {
        const double v = f(n);
        ++best.evaluations;
        if (v < best.value) {
            best.value = v;
            best.direction = n;
        }
    };
    for (int k = 0; k < grid.resolution; ++k) {
        consider(spiral_point(k, 1.0 - 2.0 * vdc2(static_cast<std::uint64_t>(k) + 1)));
    }
    // Cap refinement around the incumbent, shrinking the cap 8x per round.
    double radius = std::numbers::pi;
    for (int round = 0; round < grid.refinement_rounds; ++round) {
        radius /= 8.0;
        const Eigen::Vector3d center = best.direction;
        Eigen::Vector3d e1, e2;
        tangent_frame(center, e1, e2);
        for (int k = 0; k < grid.resolution; ++k) {
            const double alpha = radius * std::sqrt(vdc2(static_cast<std::uint64_t>(k) + 1));
            const double phi = kGoldenAngle * static_cast<double>(k);
            consider(rotate_towards(center, std::cos(phi) * e1 + std::sin(phi) * e2, alpha));
        }
    }
    // Local polish: tangent-plane pattern search with shrinking angular step.
    double step = radius;
    while (step > 1e-9) {
        Eigen::Vector3d e1, e2;
        tangent_frame(best.direction, e1, e2);
        const double before = best.value;
        for (const Eigen::Vector3d& t :
             {e1, Eigen::Vector3d(-e1), e2, Eigen::Vector3d(-e2)}) {
            consider(rotate_towards(best.direction, t, step));
        }
        if (best.value >= before) step *= 0.5;
    }
    return best;
}

}  // namespace

std::vector<Eigen::Vector3d> sphere_sequence(int n) {
    std::vector<Eigen::Vector3d> points;
    points.reserve(static_cast<size_t>(std::max(n, 0)));
    for (int k = 0; k < n; ++k) {
        points.push_back(spiral_point(k, 1.0 - 2.0 * vdc2(static_cast<std::uint64_t>(k) + 1)));
    }
    return points;
}

SphereExtremum sphere_minimize(const std::function<double(const Eigen::Vector3d&)>& f,
                               const GridSpec& grid) {
    return sphere_search_min(f, grid);
}

SphereExtremum sphere_maximize(const std::function<double(const Eigen::Vector3d&)>& f,
                               const GridSpec& grid) {
    SphereExtremum ext =
        sphere_search_min([&](const Eigen::Vector3d& n) { return -f(n); }, grid);
    ext.value = -ext.value;
    return ext;
}

LocalObservable observable_from_direction(const OrbitProblem& problem,
                                          const Eigen::Vector3d& n) {
    if (problem.state.dims().side(problem.side) != 2) {
        throw NotAQubit("direction parametrization requires a qubit subsystem");
    }
    problem.spectrum.validate(2);
    const double r = (problem.spectrum.eigenvalues[1] - problem.spectrum.eigenvalues[0]) / 2.0;
    const double c = (problem.spectrum.eigenvalues[1] + problem.spectrum.eigenvalues[0]) / 2.0;
    return {problem.side, c * Matrix::Identity(2, 2) + r * pauli::direction(n.normalized())};
}

LocalObservable observable_from_params(const OrbitProblem& problem,
                                       const std::vector<double>& params) {
    const int d = problem.state.dims().side(problem.side);
    problem.spectrum.validate(d);
    if (params.size() != static_cast<size_t>(d) * d) {
        throw InvalidSpec("observable_from_params: expected " + std::to_string(d * d) +
                          " parameters");
    }
    Matrix a = Matrix::Zero(d, d);
    size_t idx = 0;
    for (int i = 0; i < d; ++i) a(i, i) = params[idx++];
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const Complex v(params[idx], params[idx + 1]);
            idx += 2;
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    const Matrix u = func_hermitian(a, [](double lam) { return std::exp(Complex(0.0, lam)); });
    Matrix lam = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) lam(i, i) = problem.spectrum.eigenvalues[i];
    Matrix k = u * lam * u.adjoint();
    k = 0.5 * (k + k.adjoint().eval());
    return {problem.side, k};
}

double objective_eval(const OrbitProblem& problem, const Eigen::Vector3d& direction) {
    return QubitObjectiveContext(problem).eval(direction.normalized());
}

double objective_eval(const OrbitProblem& problem, const std::vector<double>& params) {
    const LocalObservable k = observable_from_params(problem, params);
    if (problem.objective == Objective::SkewInformation) {
        return skew_information(problem.state, k);
    }
    return qfi(problem.state, k);
}

MeasureReport sphere_grid_minimize(const OrbitProblem& problem, const GridSpec& grid) {
    const QubitObjectiveContext ctx(problem);
    const SphereExtremum ext =
        sphere_search_min([&](const Eigen::Vector3d& n) { return ctx.eval(n); }, grid);
    MeasureReport report;
    report.value = ext.value < 0.0 && ext.value >= -1e-10 ? 0.0 : ext.value;
    report.raw_minimum = report.value;
    report.minimizer = observable_from_direction(problem, ext.direction);
    report.method = Method::GridOracle;
    report.iterations = ext.evaluations;
    return report;
}

MeasureReport multistart_minimize(const OrbitProblem& problem, int starts, std::uint64_t seed) {
    const int d = problem.state.dims().side(problem.side);
    problem.spectrum.validate(d);
    const size_t n_params = static_cast<size_t>(d) * d;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-std::numbers::pi, std::numbers::pi);

    MeasureReport report;
    report.method = Method::Multistart;
    double global_best = std::numeric_limits<double>::infinity();
    std::vector<double> global_params;

    for (int s = 0; s < std::max(starts, 1); ++s) {
        std::vector<double> params(n_params, 0.0);
        if (s > 0) {
            for (double& v : params) v = uni(rng);
        }
        double best = objective_eval(problem, params);
        ++report.iterations;
        if (best < global_best) {
            global_best = best;
            global_params = params;
            report.trace.push_back(best);
        }
        double step = 0.3;
        while (step > 1e-7) {
            bool improved = false;
            for (size_t i = 0; i < n_params; ++i) {
                for (double delta : {step, -step}) {
                    std::vector<double> trial = params;
                    trial[i] += delta;
                    const double v = objective_eval(problem, trial);
                    ++report.iterations;
                    if (v < best) {
                        best = v;
                        params = std::move(trial);
                        improved = true;
                        if (best < global_best) {
                            global_best = best;
                            global_params = params;
                            report.trace.push_back(best);
                        }
                        break;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }
    }

    report.value = global_best < 0.0 && global_best >= -1e-10 ? 0.0 : global_best;
    report.raw_minimum = report.value;
    report.minimizer = observable_from_params(problem, global_params);
    return report;
}

}  // namespace qdm
