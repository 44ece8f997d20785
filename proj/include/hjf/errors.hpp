// Error types that the CLI maps to distinct exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace hjf {

// A structurally valid request outside a formula's validity range
// (e.g. classical Jacobi dimensions at odd weight).  CLI exit code 3.
struct unsupported_range : std::domain_error {
    explicit unsupported_range(const std::string& what) : std::domain_error(what) {}
};

// An expansion that violates the coefficient-dependence law required for a
// theta decomposition (the input is not a Jacobi-form expansion).
struct decomposition_error : std::domain_error {
    explicit decomposition_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace hjf
