#include "qdm/io.hpp"

#include <fstream>

namespace qdm {

DensityMatrix state_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
        throw InvalidSpec("state JSON must be an object with \"dims\" and \"matrix\"");
    }
    const auto& jd = j.at("dims");
    if (!jd.is_array() || jd.size() != 2) {
        throw InvalidSpec("\"dims\" must be a two-element array");
    }
    const Dims dims{jd.at(0).get<int>(), jd.at(1).get<int>()};
    if (dims.a <= 0 || dims.b <= 0) {
        throw DimensionMismatch("\"dims\" entries must be positive");
    }
    const auto& jm = j.at("matrix");
    const size_t n = static_cast<size_t>(dims.total());
    if (!jm.is_array() || jm.size() != n * n) {
        throw InvalidSpec("\"matrix\" must hold exactly dim^2 = " + std::to_string(n * n) +
                          " [re, im] pairs");
    }
    Matrix m(dims.total(), dims.total());
    for (size_t idx = 0; idx < n * n; ++idx) {
        const auto& entry = jm.at(idx);
        if (!entry.is_array() || entry.size() != 2) {
            throw InvalidSpec("matrix entry " + std::to_string(idx) + " is not an [re, im] pair");
        }
        m(static_cast<Eigen::Index>(idx / n), static_cast<Eigen::Index>(idx % n)) =
            Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
    return DensityMatrix(dims, m);
}

nlohmann::json state_to_json(const DensityMatrix& rho) {
    nlohmann::json j;
    j["dims"] = {rho.dims().a, rho.dims().b};
    nlohmann::json entries = nlohmann::json::array();
    const Matrix& m = rho.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            entries.push_back({m(i, k).real(), m(i, k).imag()});
        }
    }
    j["matrix"] = std::move(entries);
    return j;
}

DensityMatrix load_state(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    nlohmann::json j;
    in >> j;
    return state_from_json(j);
}

void save_state(const DensityMatrix& rho, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write state file: " + path);
    out << state_to_json(rho).dump(2) << "\n";
}

}  // namespace qdm
