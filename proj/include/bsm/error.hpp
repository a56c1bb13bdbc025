#pragma once

#include <stdexcept>
#include <string>

namespace bsm {

/// Bad input data or configuration: parse failures, non-manifold meshes,
/// missing landmarks, out-of-range parameters.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation that should have succeeded on valid input did not:
/// singular systems, non-finite results, failed convergence.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bsm
