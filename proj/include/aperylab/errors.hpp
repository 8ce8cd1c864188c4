#pragma once

#include <stdexcept>
#include <string>

namespace aperylab {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: unknown variety label, bad file, violated precondition.
struct input_error : error {
    using error::error;
};

// A certified computation could not reach the requested accuracy
// (guard-digit recomputation disagreed, asymptotic tail refused to shrink,
// perturbation schedule exhausted).
struct precision_error : error {
    using error::error;
};

// A limit estimator detected ratios of successive differences >= 1.
struct nonconvergence_error : error {
    using error::error;
};

} // namespace aperylab
