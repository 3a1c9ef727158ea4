#pragma once

#include <optional>

#include "brio/kernel.hpp"
#include "brio/solution.hpp"

namespace brio {

struct SolverOptions {
    /// Bisection stops once the bracket on ln v* is narrower than this, i.e.
    /// the relative error on v* (absolute for v* <= 1) is below tol.
    double tol = 1e-12;
    int max_iterations = 200;
    /// Upper-bracket doublings for two-shock data.
    int max_doublings = 1024;
    /// Relative tie tolerance for "right state lies on a wave curve".
    double tie = 1e-12;
};

/// Phase-plane classification of (left, right) for eps1 > 0.
struct Classification {
    Region4 region = Region4::R1R2;
    /// Set when the right state lies on a curve through the left state within
    /// the tie tolerance; the solution is then that single wave.
    std::optional<kernel::CurveKind> on_curve;
};

Classification classify_detail(const State& left, const State& right, const FluxParams& p,
                               const SolverOptions& opt = {});

Region4 classify(const State& left, const State& right, const FluxParams& p,
                 const SolverOptions& opt = {});

struct Intermediate {
    State state;
    Region4 region = Region4::R1R2;
    /// ln v*; v* itself underflows for strongly cavitating data.
    double log_v = 0.0;
    int iterations = 0;
};

/// Intermediate state of the two-wave solution. The root of the monotone
/// mismatch between the family-1 curve through `left` and the backward
/// family-2 curve through `right` is bracketed per region and bisected in
/// ln v. Throws SolverError when no bracket exists (vacuum for eps2 == 0,
/// bracket expansion exhausted) and ConvergenceError on iteration overrun.
Intermediate solve_intermediate(const State& left, const State& right, const FluxParams& p,
                                const SolverOptions& opt = {});

/// Full wave fan for eps1 > 0.
RiemannSolution solve_riemann(const State& left, const State& right, const FluxParams& p,
                              const SolverOptions& opt = {});

/// Dispatch on the system selected by p: perturbed Brio (eps1 > 0),
/// one-parameter system (eps1 == 0 < eps2) or transport (both zero).
RiemannSolution solve(const State& left, const State& right, const FluxParams& p,
                      const SolverOptions& opt = {});

}  // namespace brio
