#include "brio/fv_lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "brio/kernel.hpp"

namespace brio {

namespace {

constexpr double boundary_tol = 1e-6;

bool departed(double q, double far) {
    return std::fabs(q - far) > boundary_tol * std::max(1.0, std::fabs(far));
}

}  // namespace

void validate(const Grid& g) {
    if (!(g.x_min < 0.0 && 0.0 < g.x_max) || !std::isfinite(g.x_min) || !std::isfinite(g.x_max))
        throw DomainError("grid must satisfy x_min < 0 < x_max");
    if (g.n_cells < 10) throw DomainError("grid needs at least 10 cells");
    if (!(g.cfl > 0.0 && g.cfl < 1.0)) throw DomainError("cfl must lie in (0, 1)");
    if (!(g.t_end > 0.0) || !std::isfinite(g.t_end)) throw DomainError("t_end must be positive");
}

double FvRun::drift_u() const { return (mass_u - mass_u0 - inflow_u) / std::max(1.0, std::fabs(mass_u0)); }
double FvRun::drift_v() const { return (mass_v - mass_v0 - inflow_v) / std::max(1.0, std::fabs(mass_v0)); }

FvRun lax_friedrichs_run(const State& left, const State& right, const FluxParams& p, const Grid& g) {
    validate(p);
    validate(left, p);
    validate(right, p);
    validate(g);

    const int n = g.n_cells;
    const double dx = g.dx();
    FvRun run;
    CellField& c = run.field;
    c.grid = g;
    c.u.resize(n);
    c.v.resize(n);
    for (int i = 0; i < n; ++i) {
        const State& s = g.center(i) < 0.0 ? left : right;
        c.u[i] = s.u;
        c.v[i] = s.v;
    }
    auto totals = [&](double& mu, double& mv) {
        mu = mv = 0.0;
        for (int i = 0; i < n; ++i) {
            mu += c.u[i] * dx;
            mv += c.v[i] * dx;
        }
    };
    totals(run.mass_u0, run.mass_v0);

    auto speed = [&](double u, double v) {
        const CharPair l = kernel::eigenvalues({u, v}, p);
        return std::max(std::fabs(l.lambda1), std::fabs(l.lambda2));
    };

    // Interface k sits between cell k-1 and cell k; cells -1 and n are ghosts.
    std::vector<double> fu(n + 1);
    std::vector<double> fv(n + 1);
    std::vector<double> a(n + 2);
    bool warned = false;
    double t = 0.0;
    while (t < g.t_end) {
        double a_max = 0.0;
        a[0] = speed(left.u, left.v);
        a[n + 1] = speed(right.u, right.v);
        for (int i = 0; i < n; ++i) a[i + 1] = speed(c.u[i], c.v[i]);
        for (double s : a) a_max = std::max(a_max, s);

        double dt = a_max > 0.0 ? g.cfl * dx / a_max : g.t_end - t;
        if (t + dt >= g.t_end) dt = g.t_end - t;
        run.max_cfl_used = std::max(run.max_cfl_used, dt * a_max / dx);

        for (int k = 0; k <= n; ++k) {
            const State ql = k == 0 ? left : State{c.u[k - 1], c.v[k - 1]};
            const State qr = k == n ? right : State{c.u[k], c.v[k]};
            const State fl = kernel::flux(ql, p);
            const State fr = kernel::flux(qr, p);
            const double alpha = std::max(a[k], a[k + 1]);
            fu[k] = 0.5 * (fl.u + fr.u) - 0.5 * alpha * (qr.u - ql.u);
            fv[k] = 0.5 * (fl.v + fr.v) - 0.5 * alpha * (qr.v - ql.v);
        }
        const double r = dt / dx;
        for (int i = 0; i < n; ++i) {
            c.u[i] -= r * (fu[i + 1] - fu[i]);
            c.v[i] -= r * (fv[i + 1] - fv[i]);
        }
        run.inflow_u += dt * (fu[0] - fu[n]);
        run.inflow_v += dt * (fv[0] - fv[n]);
        t += dt;
        ++run.steps;

        if (departed(c.u[0], left.u) || departed(c.v[0], left.v) || departed(c.u[n - 1], right.u) ||
            departed(c.v[n - 1], right.v))
            throw DomainError("domain too small: a wave reached the grid boundary by t=" + std::to_string(t));
        if (!warned && p.eps1 > 0.0) {
            for (int i = 0; i < n; ++i) {
                if (c.v[i] <= 0.0) {
                    run.warnings.push_back("nonpositive density in cell " + std::to_string(i) +
                                           " at t=" + std::to_string(t));
                    warned = true;
                    break;
                }
            }
        }
    }
    c.t = t;
    totals(run.mass_u, run.mass_v);
    return run;
}

double l1_error(const CellField& num, const RiemannSolution& exact, double t) {
    if (!(t > 0.0)) throw DomainError("l1_error needs t > 0");
    for (const Wave& w : exact.waves)
        if (std::holds_alternative<DeltaShock>(w))
            throw UnsupportedCaseError("L1 distance to a solution with a delta shock is undefined");
    const Grid& g = num.grid;
    const double dx = g.dx();
    double sum = 0.0;
    for (int i = 0; i < g.n_cells; ++i) {
        const State q = sample(exact, g.center(i) / t).state;
        sum += (std::fabs(num.u[i] - q.u) + std::fabs(num.v[i] - q.v)) * dx;
    }
    return sum;
}

double delta_indicator(const CellField& num) {
    const double dx = num.grid.dx();
    double m = 0.0;
    for (double v : num.v) m = std::max(m, v * dx);
    return m;
}

}  // namespace brio
