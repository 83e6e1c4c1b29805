#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace paircert {

// Bad or inconsistent user-supplied data (malformed files, missing
// measurement settings, out-of-range options). CLI maps this to exit 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to reach its convergence criterion.
// CLI maps this to exit 3.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A matrix fails the Hermitian / unit-trace / PSD checks required of a
// density matrix. Carries the full list of violated invariants.
// CLI maps this to exit 4.
class PhysicalityError : public std::runtime_error {
public:
    PhysicalityError(const std::string& what, std::vector<std::string> violations)
        : std::runtime_error(what), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// Top eigenvalue of a density matrix is degenerate; the dominant
// eigenstate is not well defined.
class DegenerateSpectrumError : public std::runtime_error {
public:
    explicit DegenerateSpectrumError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paircert
