#pragma once

#include <stdexcept>
#include <string>

namespace qdm {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NegativeEigenvalue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadTarget : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SpectrumMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateSpectrum : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAQubit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Probe state carries no information about the phase direction.
struct FlatLikelihood : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroFisher : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qdm
