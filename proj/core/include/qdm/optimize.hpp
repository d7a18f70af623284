#pragma once

#include <cstdint>
#include <functional>

#include "qdm/measures.hpp"

namespace qdm {

enum class Objective { SkewInformation, Qfi };

/// Minimization of a correlation objective over the unitary orbit of
/// fixed-spectrum local observables.
struct OrbitProblem {
    DensityMatrix state;
    Subsystem side = Subsystem::A;
    SpectrumSpec spectrum = SpectrumSpec::qubit_default();
    Objective objective = Objective::SkewInformation;
};

struct GridSpec {
    int resolution = 2048;      // points per round, >= 64
    int refinement_rounds = 2;  // each shrinks the search cap by 8x
};

/// First `n` points of a deterministic quasi-uniform sphere sequence
/// (golden-angle azimuth, van der Corput height). Prefixes are nested: the
/// first n points of a longer sequence are identical.
std::vector<Eigen::Vector3d> sphere_sequence(int n);

/// Observable with the problem spectrum along Bloch direction n (qubits only).
LocalObservable observable_from_direction(const OrbitProblem& problem, const Eigen::Vector3d& n);

/// Observable U diag(spectrum) U^dag, with U = exp(iA) and A the Hermitian
/// matrix packed into `params` (d*d reals: diagonal then re/im off-diagonal).
LocalObservable observable_from_params(const OrbitProblem& problem,
                                       const std::vector<double>& params);

double objective_eval(const OrbitProblem& problem, const Eigen::Vector3d& direction);
double objective_eval(const OrbitProblem& problem, const std::vector<double>& params);

/// Brute-force oracle for qubit subsystems: deterministic sphere grid with
/// cap refinement and a local polish. Deterministic for a fixed GridSpec.
MeasureReport sphere_grid_minimize(const OrbitProblem& problem, const GridSpec& grid = {});

/// General-dimension fallback: seeded multistart pattern search over
/// exponential coordinates of the conjugating unitary. Deterministic per seed.
MeasureReport multistart_minimize(const OrbitProblem& problem, int starts = 8,
                                  std::uint64_t seed = 0);

/// Deterministic extremum search of an arbitrary smooth function on the unit
/// sphere (grid + cap refinement + polish). Used for measurement
/// optimization as well as the orbit oracle.
struct SphereExtremum {
    Eigen::Vector3d direction;
    double value;
    int evaluations;
};
SphereExtremum sphere_minimize(const std::function<double(const Eigen::Vector3d&)>& f,
                               const GridSpec& grid = {});
SphereExtremum sphere_maximize(const std::function<double(const Eigen::Vector3d&)>& f,
                               const GridSpec& grid = {});

}  // namespace qdm
