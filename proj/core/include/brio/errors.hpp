#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace brio {

/// Invalid input: non-finite values, densities outside the admissible half
/// plane, parameters violating a precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Jump with v_left == v_right handed to a routine that divides by [v].
class DegenerateJumpError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Requested case exists mathematically but is not constructed here
/// (region-II eps1 limits, L1 distance against a measure).
class UnsupportedCaseError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A numerical procedure (bracketing, bisection, quadrature) failed.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public SolverError {
public:
    using SolverError::SolverError;
};

class QuadratureError : public SolverError {
public:
    QuadratureError(const std::string& what, std::vector<std::string> trace)
        : SolverError(what), trace_(std::move(trace)) {}

    const std::vector<std::string>& trace() const noexcept { return trace_; }

private:
    std::vector<std::string> trace_;
};

}  // namespace brio
