#pragma once

#include <stdexcept>
#include <string>

namespace markovlyap {

// Kernel whose second-largest eigenvalue modulus is >= 1 - 1e-10, or whose
// total-variation residual fails to decay geometrically.
struct NonErgodicKernel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A projective image collapsed below the representable range.
struct NumericUnderflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Power iteration (or another fixed-point loop) exhausted its iteration budget.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The moment inequality gating the Holder certificate was not reached by n_max.
struct GapNotReached : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The top Lyapunov exponent is not simple (L1 - L2 below resolution).
struct NotSimple : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All probe responses sit below the estimator noise floor; no slope can be fit.
struct InsufficientSignal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config schema violation. `field_path` points at the offending entry,
// e.g. "kernel.rows[0]".
struct ConfigError : std::runtime_error {
    std::string field_path;
    ConfigError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), field_path(std::move(path)) {}
};

}  // namespace markovlyap
