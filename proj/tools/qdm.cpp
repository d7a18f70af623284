// qdm: discord-type correlation measures and interferometric phase
// estimation for bipartite quantum states.
//
// Exit codes: 0 ok, 1 check failure, 2 invalid state, 3 dimension/spectrum
// error, 4 I/O error, 5 probe insensitive to the phase direction.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdm/check.hpp"
#include "qdm/estimate.hpp"
#include "qdm/io.hpp"
#include "qdm/measures.hpp"
#include "qdm/optimize.hpp"

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitInvalidState = 2;
constexpr int kExitDimension = 3;
constexpr int kExitIo = 4;
constexpr int kExitInsensitive = 5;

struct StateSource {
    std::string preset = "rho_q";
    double p = 0.5;
    std::string state_path;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--preset", preset,
                        "Preset state: rho_q, rho_c, bell, maximally_mixed, cq_example")
            ->check(CLI::IsMember({"rho_q", "rho_c", "bell", "maximally_mixed", "cq_example"}));
        cmd->add_option("--p", p, "Noise parameter for rho_q/rho_c presets (in [0, 1])");
        cmd->add_option("--state", state_path, "Path to a JSON state file (overrides --preset)");
    }

    qdm::DensityMatrix resolve() const {
        if (!state_path.empty()) return qdm::load_state(state_path);
        if (preset == "rho_q") return qdm::make_rho_q(p);
        if (preset == "rho_c") return qdm::make_rho_c(p);
        if (preset == "bell") return qdm::make_bell_phi_plus();
        if (preset == "maximally_mixed") return qdm::make_maximally_mixed();
        if (preset == "cq_example") return qdm::make_cq_example();
        throw qdm::InvalidSpec("unknown preset: " + preset);
    }

    std::string label() const { return state_path.empty() ? preset : state_path; }
};

qdm::Subsystem parse_side(const std::string& side) {
    if (side == "A" || side == "a") return qdm::Subsystem::A;
    if (side == "B" || side == "b") return qdm::Subsystem::B;
    throw qdm::InvalidSpec("side must be A or B");
}

qdm::SpectrumSpec parse_spectrum(const std::string& text) {
    if (text.empty()) return qdm::SpectrumSpec::qubit_default();
    qdm::SpectrumSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) spec.eigenvalues.push_back(std::stod(item));
    return spec;
}

Eigen::Vector3d parse_direction(const std::string& text) {
    if (text == "x") return Eigen::Vector3d::UnitX();
    if (text == "y") return Eigen::Vector3d::UnitY();
    if (text == "z") return Eigen::Vector3d::UnitZ();
    if (text == "xy" || text == "diag") return Eigen::Vector3d(1, 1, 0).normalized();
    std::stringstream ss(text);
    std::string item;
    std::vector<double> v;
    while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    if (v.size() != 3) {
        throw qdm::InvalidSpec("direction must be x, y, z, xy or three comma-separated numbers");
    }
    Eigen::Vector3d n(v[0], v[1], v[2]);
    if (n.norm() < 1e-12) throw qdm::InvalidSpec("direction must be nonzero");
    return n.normalized();
}

// Bloch direction of a 2x2 Hermitian observable, if it has a traceless part.
std::optional<std::array<double, 3>> bloch_direction(const qdm::Matrix& local) {
    Eigen::Vector3d n;
    for (int a = 0; a < 3; ++a) n(a) = 0.5 * (local * qdm::pauli::component(a)).trace().real();
    if (n.norm() < 1e-12) return std::nullopt;
    n.normalize();
    return std::array<double, 3>{n(0), n(1), n(2)};
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QDM_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

int run_measures(const StateSource& source, const std::string& side_text,
                 const std::string& spectrum_text) {
    const qdm::DensityMatrix rho = source.resolve();
    const qdm::Subsystem side = parse_side(side_text);
    const qdm::SpectrumSpec spectrum = parse_spectrum(spectrum_text);

    const qdm::MeasureReport lqu_report = qdm::lqu(rho, side, spectrum);
    const qdm::MeasureReport qip_report = qdm::qip(rho, side, spectrum);
    const qdm::MeasureReport discord_report = qdm::entropic_discord(rho, side);

    nlohmann::json out;
    out["state"] = source.label();
    out["side"] = side == qdm::Subsystem::A ? "A" : "B";
    out["spectrum"] = spectrum.eigenvalues;
    out["lqu"] = lqu_report.value;
    if (lqu_report.minimizer) {
        if (auto n = bloch_direction(lqu_report.minimizer->local)) {
            out["lqu_minimizer_direction"] = *n;
        }
    }
    out["qip_raw"] = qip_report.raw_minimum;        // min of the QFI over the orbit
    out["qip_normalized"] = qip_report.value;       // 1/4 of the raw minimum
    if (qip_report.minimizer) {
        if (auto n = bloch_direction(qip_report.minimizer->local)) {
            out["qip_minimizer_direction"] = *n;
        }
    }
    out["entropic_discord_bits"] = discord_report.value;
    out["mutual_information_bits"] = qdm::mutual_information(rho);
    out["purity"] = qdm::purity(rho);
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct SweepRow {
    double p;
    double qfi_x, qfi_y, qfi_z, qfi_diag;
    double qip_raw, qip_normalized, lqu, discord_entropic, purity;
};

SweepRow sweep_row(const std::string& preset, double p) {
    const qdm::DensityMatrix rho =
        preset == "rho_c" ? qdm::make_rho_c(p) : qdm::make_rho_q(p);
    const qdm::Matrix id2 = qdm::Matrix::Identity(2, 2);
    const auto local_qfi = [&](const qdm::Matrix& h) {
        return qdm::qfi(rho, qdm::tensor_product(h, id2));
    };
    SweepRow row{};
    row.p = p;
    row.qfi_x = local_qfi(qdm::pauli::x());
    row.qfi_y = local_qfi(qdm::pauli::y());
    row.qfi_z = local_qfi(qdm::pauli::z());
    row.qfi_diag = local_qfi((qdm::pauli::x() + qdm::pauli::y()) / std::sqrt(2.0));
    const qdm::MeasureReport qip_report = qdm::qip(rho, qdm::Subsystem::A);
    row.qip_raw = qip_report.raw_minimum;
    row.qip_normalized = qip_report.value;
    row.lqu = qdm::lqu(rho, qdm::Subsystem::A).value;
    row.discord_entropic = qdm::entropic_discord(rho).value;
    row.purity = qdm::purity(rho);
    return row;
}

constexpr const char* kSweepHeader =
    "p,qfi_x,qfi_y,qfi_z,qfi_diag,qip_raw,qip_normalized,lqu,discord_entropic,purity";

int run_sweep(const std::string& preset, int points, double p_min, double p_max,
              const std::string& output, const std::string& format) {
    if (points < 2 || p_min < 0.0 || p_max > 1.0 || p_min >= p_max) {
        throw qdm::OutOfRange("sweep: need points >= 2 and 0 <= p_min < p_max <= 1");
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) {
        rows.push_back(sweep_row(preset, p_min + (p_max - p_min) * i / (points - 1)));
    }

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty() && output != "-") {
        file.open(output);
        if (!file) {
            std::cerr << "error: cannot write " << output << "\n";
            return kExitIo;
        }
        out = &file;
    }

    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const SweepRow& r : rows) {
            j.push_back({{"p", r.p},
                         {"qfi_x", r.qfi_x},
                         {"qfi_y", r.qfi_y},
                         {"qfi_z", r.qfi_z},
                         {"qfi_diag", r.qfi_diag},
                         {"qip_raw", r.qip_raw},
                         {"qip_normalized", r.qip_normalized},
                         {"lqu", r.lqu},
                         {"discord_entropic", r.discord_entropic},
                         {"purity", r.purity}});
        }
        *out << j.dump(2) << "\n";
    } else {
        *out << kSweepHeader << "\n";
        for (const SweepRow& r : rows) {
            *out << fmt17(r.p) << "," << fmt17(r.qfi_x) << "," << fmt17(r.qfi_y) << ","
                 << fmt17(r.qfi_z) << "," << fmt17(r.qfi_diag) << "," << fmt17(r.qip_raw) << ","
                 << fmt17(r.qip_normalized) << "," << fmt17(r.lqu) << ","
                 << fmt17(r.discord_entropic) << "," << fmt17(r.purity) << "\n";
        }
    }
    if (out == &file && !file.good()) {
        std::cerr << "error: write to " << output << " failed\n";
        return kExitIo;
    }
    return 0;
}

int run_estimate(const StateSource& source, const std::string& direction_text, double theta,
                 long shots, std::uint64_t seed, int batches, double window_lo,
                 double window_hi) {
    qdm::EstimationConfig config{source.resolve(),
                                 qdm::tensor_product(qdm::pauli::direction(
                                                         parse_direction(direction_text)),
                                                     qdm::Matrix::Identity(2, 2)),
                                 theta,
                                 shots,
                                 seed,
                                 {window_lo, window_hi},
                                 batches};
    const qdm::EstimationResult result = qdm::simulate_estimation(config);

    nlohmann::json out;
    out["state"] = source.label();
    out["direction"] = direction_text;
    out["theta_true"] = theta;
    out["shots"] = shots;
    out["batches"] = batches;
    out["seed"] = seed;
    out["theta_hat"] = result.theta_hat;
    out["variance_empirical"] = result.variance_empirical;
    out["fisher_quantum"] = result.fisher_quantum;
    out["crb"] = result.crb;
    out["variance_to_crb_ratio"] = result.variance_empirical / result.crb;
    out["outcome_histogram"] = result.outcome_histogram;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_check(const std::string& suite, std::uint64_t seed, int thinning, double mutate_qfi) {
    qdm::CheckOptions options;
    options.seed = seed;
    options.thinning = thinning;
    options.qfi_mutation = mutate_qfi;
    const std::vector<qdm::CheckResult> results = qdm::run_checks(suite, options);
    for (const qdm::CheckResult& r : results) {
        std::printf("%-26s %s  worst residual %.3e  (%s)\n", r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.worst_residual, r.detail.c_str());
    }
    if (!qdm::all_passed(results)) {
        std::printf("check: FAILED\n");
        return kExitCheckFailure;
    }
    std::printf("check: all properties hold\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discord-type quantum correlation measures and phase estimation"};
    app.require_subcommand(1);

    // measures
    auto* measures_cmd =
        app.add_subcommand("measures", "Compute LQU, QIP, entropic discord for a state");
    StateSource measures_source;
    measures_source.add_flags(measures_cmd);
    std::string side = "A";
    std::string spectrum_text;
    measures_cmd->add_option("--side", side, "Measured subsystem: A or B");
    measures_cmd->add_option("--spectrum", spectrum_text,
                             "Observable spectrum, comma separated (default -1,1)");

    // sweep
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Tabulate measures against the noise parameter p");
    std::string sweep_preset = "rho_q";
    int sweep_points = 101;
    double p_min = 0.0, p_max = 1.0;
    std::string sweep_output, sweep_format = "csv";
    sweep_cmd->add_option("--preset", sweep_preset, "rho_q or rho_c")
        ->check(CLI::IsMember({"rho_q", "rho_c"}));
    sweep_cmd->add_option("--points", sweep_points, "Grid size (default 101)");
    sweep_cmd->add_option("--p-min", p_min, "Lower end of the p grid");
    sweep_cmd->add_option("--p-max", p_max, "Upper end of the p grid");
    sweep_cmd->add_option("--output,-o", sweep_output, "Output path (default stdout)");
    sweep_cmd->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // estimate
    auto* estimate_cmd =
        app.add_subcommand("estimate", "Monte Carlo phase estimation against the CRB");
    StateSource estimate_source;
    estimate_source.add_flags(estimate_cmd);
    std::string direction = "z";
    double theta = 0.3;
    long shots = 10000;
    int batches = 100;
    std::uint64_t seed = default_seed();
    double window_lo = 0.0, window_hi = std::numbers::pi / 2.0;
    estimate_cmd->add_option("--direction", direction,
                             "Phase direction: x, y, z, xy or nx,ny,nz");
    estimate_cmd->add_option("--theta", theta, "True phase (radians)");
    estimate_cmd->add_option("--shots", shots, "Shots per batch");
    estimate_cmd->add_option("--batches", batches, "Batch repetitions for the variance");
    estimate_cmd->add_option("--seed", seed, "RNG seed (default: QDM_SEED env or 0)");
    estimate_cmd->add_option("--window-lo", window_lo, "Lower estimation window bound");
    estimate_cmd->add_option("--window-hi", window_hi, "Upper estimation window bound");

    // check
    auto* check_cmd = app.add_subcommand("check", "Run the invariant suites");
    std::string suite = "all";
    std::uint64_t check_seed = 12345;
    int thinning = 1;
    double mutate_qfi = 1.0;
    check_cmd->add_option("--suite", suite,
                          "all, inequality, oracle, unitary, monotone or cq");
    check_cmd->add_option("--seed", check_seed, "RNG seed for the random-state suites");
    check_cmd->add_option("--thinning", thinning, "Divide sample counts by this factor");
    check_cmd->add_option("--mutate-qfi", mutate_qfi, "Fault injection: scale QFI values")
        ->group("");  // hidden

    CLI11_PARSE(app, argc, argv);

    try {
        if (measures_cmd->parsed()) {
            return run_measures(measures_source, side, spectrum_text);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(sweep_preset, sweep_points, p_min, p_max, sweep_output,
                             sweep_format);
        }
        if (estimate_cmd->parsed()) {
            return run_estimate(estimate_source, direction, theta, shots, seed, batches,
                                window_lo, window_hi);
        }
        if (check_cmd->parsed()) {
            return run_check(suite, check_seed, thinning, mutate_qfi);
        }
    } catch (const qdm::FlatLikelihood& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInsensitive;
    } catch (const qdm::ZeroFisher& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInsensitive;
    } catch (const qdm::DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const qdm::SpectrumMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const qdm::DegenerateSpectrum& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const qdm::NotAQubit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const std::invalid_argument& e) {
        // State validation failures: NotHermitian, NegativeEigenvalue, OutOfRange, InvalidSpec.
        std::cerr << "error: invalid state: " << e.what() << "\n";
        return kExitInvalidState;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
