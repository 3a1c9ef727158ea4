#pragma once

#include <string>
#include <vector>

#include "brio/solution.hpp"

namespace brio {

/// Uniform grid on [x_min, x_max] integrated to t_end.
struct Grid {
    double x_min = -2.0;
    double x_max = 2.0;
    int n_cells = 400;
    double cfl = 0.45;
    double t_end = 0.4;

    double dx() const { return (x_max - x_min) / n_cells; }
    double center(int i) const { return x_min + (i + 0.5) * dx(); }
};

/// Throws DomainError unless x_min < 0 < x_max, n_cells >= 10,
/// 0 < cfl < 1 and t_end > 0.
void validate(const Grid& g);

/// Cell averages at time t.
struct CellField {
    Grid grid;
    double t = 0.0;
    std::vector<double> u;
    std::vector<double> v;
};

struct FvRun {
    CellField field;
    int steps = 0;
    /// Largest dt * max|lambda| / dx over all steps.
    double max_cfl_used = 0.0;
    /// Totals of u and v at t = 0 and at the end, and the net inflow through
    /// both ends of the grid.
    double mass_u0 = 0.0;
    double mass_v0 = 0.0;
    double mass_u = 0.0;
    double mass_v = 0.0;
    double inflow_u = 0.0;
    double inflow_v = 0.0;
    std::vector<std::string> warnings;

    /// (final - initial - inflow) / max(1, |initial|).
    double drift_u() const;
    double drift_v() const;
};

/// First-order finite volumes with the local Lax-Friedrichs (Rusanov) flux
/// and constant far-field ghost cells. The step is recomputed every step
/// from the largest characteristic speed and the final step is shortened to
/// land on t_end. Throws DomainError once a boundary cell departs from its
/// far-field state by more than 1e-6 (domain too small).
FvRun lax_friedrichs_run(const State& left, const State& right, const FluxParams& p, const Grid& g);

/// Sum over cells and both components of |q_num - q_exact(x_i / t)| dx.
/// Throws UnsupportedCaseError when the exact solution has a delta shock.
double l1_error(const CellField& num, const RiemannSolution& exact, double t);

/// Largest single-cell mass max_i v_i dx.
double delta_indicator(const CellField& num);

}  // namespace brio
