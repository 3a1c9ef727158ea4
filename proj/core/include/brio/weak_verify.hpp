#pragma once

#include <span>
#include <vector>

#include "brio/solution.hpp"

namespace brio {

/// Smooth bump exp(1 - 1/(1 - rho^2)) on the ellipse
/// ((x - x0)/rx)^2 + ((t - t0)/rt)^2 < 1, equal to 1 at the centre.
struct BumpTestFn {
    double x0 = 0.0;
    double t0 = 1.0;
    double rx = 1.0;
    double rt = 0.5;

    double operator()(double x, double t) const;
    double dx(double x, double t) const;
    double dt(double x, double t) const;
};

/// Throws DomainError unless t0 - rt > 0 and both radii are positive.
BumpTestFn make_bump(double x0, double t0, double rx, double rt);

struct WeakOptions {
    /// Relative tolerance handed to each adaptive Gauss-Kronrod level.
    double quad_tol = 1e-10;
    /// Estimated quadrature error above this throws QuadratureError.
    double report_tol = 1e-8;
    unsigned max_depth = 15;
};

struct BumpResidual {
    BumpTestFn bump;
    double r_u = 0.0;
    double r_v = 0.0;
    /// Quadrature error estimates.
    double err_u = 0.0;
    double err_v = 0.0;
};

struct WeakReport {
    std::vector<BumpResidual> bumps;
    double max_u = 0.0;
    double max_v = 0.0;
};

/// For each bump and each equation q_t + f(q)_x = 0, evaluates
/// the double integral of q phi_t + f phi_x over the bump support, split along
/// every wave ray, plus for a delta shock in v the line term
/// integral of w(t) (phi_t + (u_delta - eps2) phi_x) along x = sigma t.
/// The system is the one selected by sol.params.
WeakReport weak_residual(const RiemannSolution& sol, std::span<const BumpTestFn> bumps,
                         const WeakOptions& opt = {});

/// Wraps a lone delta shock (with its background states) for the given
/// system.
WeakReport weak_residual(const DeltaShock& delta, const FluxParams& p,
                         std::span<const BumpTestFn> bumps, const WeakOptions& opt = {});

}  // namespace brio
