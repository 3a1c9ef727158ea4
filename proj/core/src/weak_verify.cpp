#include "brio/weak_verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "brio/kernel.hpp"

namespace brio {

namespace {

using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;

struct Rho {
    double x;
    double t;
    double r2;
};

Rho rho(const BumpTestFn& b, double x, double t) {
    const double ex = (x - b.x0) / b.rx;
    const double et = (t - b.t0) / b.rt;
    return {ex, et, ex * ex + et * et};
}

// Ray speeds bounding the smooth pieces of the solution.
std::vector<double> ray_speeds(const RiemannSolution& sol) {
    std::vector<double> out;
    for (const Wave& w : sol.waves) {
        const SpeedInterval iv = speed_interval(w);
        out.push_back(iv.lo);
        if (iv.hi != iv.lo) out.push_back(iv.hi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Estimate {
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
};

Estimate panel(const auto& f, double a, double b) {
    Estimate e;
    e.value = Quad::integrate(f, a, b, 0, 0.0, &e.error, &e.l1);
    // A single panel reports its error on the reference interval [-1, 1].
    e.error *= 0.5 * std::fabs(b - a);
    return e;
}

// Bisect Gauss-Kronrod panels until each meets its share of an absolute
// error target. Pieces near the flat rim of a bump are tiny, so a relative
// target there would recurse to full depth for nothing.
Estimate refine(const auto& f, double a, double b, const Estimate& coarse, double abs_tol,
                unsigned depth) {
    if (coarse.error <= abs_tol || depth == 0) return coarse;
    const double m = 0.5 * (a + b);
    const Estimate l = refine(f, a, m, panel(f, a, m), 0.5 * abs_tol, depth - 1);
    const Estimate r = refine(f, m, b, panel(f, m, b), 0.5 * abs_tol, depth - 1);
    return {l.value + r.value, l.error + r.error, l.l1 + r.l1};
}

// Integral over consecutive breakpoints with a target relative to the total
// L1 norm.
Estimate integrate_pieces(const auto& f, const std::vector<double>& cuts, double rel_tol,
                          unsigned depth) {
    std::vector<Estimate> coarse;
    double l1 = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        coarse.push_back(panel(f, cuts[k], cuts[k + 1]));
        l1 += coarse.back().l1;
    }
    Estimate out;
    const double share = rel_tol * l1 / static_cast<double>(std::max<std::size_t>(coarse.size(), 1));
    for (std::size_t k = 0; k < coarse.size(); ++k) {
        const Estimate e = refine(f, cuts[k], cuts[k + 1], coarse[k], share, depth);
        out.value += e.value;
        out.error += e.error;
        out.l1 += e.l1;
    }
    return out;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

double BumpTestFn::operator()(double x, double t) const {
    const Rho r = rho(*this, x, t);
    if (r.r2 >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - r.r2));
}

double BumpTestFn::dx(double x, double t) const {
    const Rho r = rho(*this, x, t);
    if (r.r2 >= 1.0) return 0.0;
    const double phi = (*this)(x, t);
    if (phi == 0.0) return 0.0;
    const double q = 1.0 - r.r2;
    return -phi * 2.0 * r.x / (rx * q * q);
}

double BumpTestFn::dt(double x, double t) const {
    const Rho r = rho(*this, x, t);
    if (r.r2 >= 1.0) return 0.0;
    const double phi = (*this)(x, t);
    if (phi == 0.0) return 0.0;
    const double q = 1.0 - r.r2;
    return -phi * 2.0 * r.t / (rt * q * q);
}

BumpTestFn make_bump(double x0, double t0, double rx, double rt) {
    for (double a : {x0, t0, rx, rt})
        if (!std::isfinite(a)) throw DomainError("bump parameters must be finite");
    if (!(rx > 0.0) || !(rt > 0.0)) throw DomainError("bump radii must be positive");
    if (!(t0 - rt > 0.0)) throw DomainError("bump support must lie in t > 0");
    return {x0, t0, rx, rt};
}

WeakReport weak_residual(const RiemannSolution& sol, std::span<const BumpTestFn> bumps,
                         const WeakOptions& opt) {
    const FluxParams& p = sol.params;
    validate(p);
    const std::vector<double> rays = ray_speeds(sol);
    // The outer rule only converges if the inner integral is smooth in t
    // well below the outer tolerance.
    const double inner_tol = opt.quad_tol * 1e-3;

    WeakReport report;
    for (const BumpTestFn& b : bumps) {
        make_bump(b.x0, b.t0, b.rx, b.rt);
        std::vector<std::string> trace;
        double worst_inner = 0.0;

        // Elliptic polar coordinates x = x0 + rx r cos(a), t = t0 + rt r sin(a):
        // phi depends on r alone, so every radial slice has the same flat
        // edge at r = 1. Rays cut a slice at one radius; the angular
        // integrand is smooth between the directions parallel to a ray.
        auto radial = [&](double a, int component) {
            const double c = std::cos(a);
            const double s = std::sin(a);
            std::vector<double> cuts{0.0};
            for (double xi : rays) {
                const double den = b.rx * c - xi * b.rt * s;
                if (den == 0.0) continue;
                const double r = (xi * b.t0 - b.x0) / den;
                if (r > 0.0 && r < 1.0) cuts.push_back(r);
            }
            std::sort(cuts.begin(), cuts.end());
            cuts.push_back(1.0);

            auto integrand = [&](double r) {
                const double q2 = 1.0 - r * r;
                if (!(q2 > 0.0)) return 0.0;
                const double phi = std::exp(1.0 - 1.0 / q2);
                if (phi == 0.0) return 0.0;
                const double dphi = -phi * 2.0 * r / (q2 * q2);
                const double x = b.x0 + b.rx * r * c;
                const double t = b.t0 + b.rt * r * s;
                const State q = sample(sol, x / t).state;
                const State f = kernel::flux(q, p);
                const double qc = component == 0 ? q.u : q.v;
                const double fc = component == 0 ? f.u : f.v;
                // q phi_t + f phi_x times the Jacobian rx rt r.
                return r * dphi * (qc * s * b.rx + fc * c * b.rt);
            };
            const Estimate e = integrate_pieces(integrand, cuts, inner_tol, opt.max_depth);
            worst_inner = std::max(worst_inner, e.error);
            return e.value;
        };

        std::vector<double> angles{0.0, 2.0 * std::numbers::pi};
        for (double xi : rays) {
            double a = std::atan2(b.rx, xi * b.rt);
            for (int k = 0; k < 2; ++k, a += std::numbers::pi) {
                const double w = std::fmod(a + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
                if (w > 0.0 && w < 2.0 * std::numbers::pi) angles.push_back(w);
            }
        }
        for (double xi : rays) {
            // Where the ray x = xi t meets the rim; solved as a quadratic in t.
            const double qa = xi * xi / (b.rx * b.rx) + 1.0 / (b.rt * b.rt);
            const double qb = -2.0 * (xi * b.x0 / (b.rx * b.rx) + b.t0 / (b.rt * b.rt));
            const double qc = b.x0 * b.x0 / (b.rx * b.rx) + b.t0 * b.t0 / (b.rt * b.rt) - 1.0;
            const double disc = qb * qb - 4.0 * qa * qc;
            if (!(disc > 0.0)) continue;
            for (double sign : {-1.0, 1.0}) {
                const double t = (-qb + sign * std::sqrt(disc)) / (2.0 * qa);
                const double a = std::atan2((t - b.t0) / b.rt, (xi * t - b.x0) / b.rx);
                const double w = std::fmod(a + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
                if (w > 0.0 && w < 2.0 * std::numbers::pi) angles.push_back(w);
            }
        }
        std::sort(angles.begin(), angles.end());
        angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

        auto line = [&](double t) {
            double s = 0.0;
            for (const Wave& w : sol.waves) {
                const auto* d = std::get_if<DeltaShock>(&w);
                if (!d) continue;
                const double x = d->sigma * t;
                s += d->strength_rate * t * (b.dt(x, t) + (d->u_delta - p.eps2) * b.dx(x, t));
            }
            return s;
        };

        const double t_lo = b.t0 - b.rt;
        const double t_hi = b.t0 + b.rt;
        BumpResidual r;
        r.bump = b;
        for (int component = 0; component < 2; ++component) {
            worst_inner = 0.0;
            const Estimate area = integrate_pieces([&](double a) { return radial(a, component); },
                                                   angles, opt.quad_tol, opt.max_depth);
            double value = area.value;
            double total_err = area.error + worst_inner * 2.0 * std::numbers::pi;
            if (component == 1) {
                const Estimate l = integrate_pieces(line, {t_lo, t_hi}, opt.quad_tol, opt.max_depth);
                value += l.value;
                total_err += l.error;
            }
            trace.push_back("component " + std::to_string(component) + ": value " + fmt(value) +
                            ", error estimate " + fmt(total_err) + ", worst radial error " +
                            fmt(worst_inner) + " over " + std::to_string(angles.size() - 1) +
                            " angular pieces");
            if (!(total_err <= opt.report_tol) || !std::isfinite(value))
                throw QuadratureError("weak residual quadrature did not reach tolerance " +
                                          fmt(opt.report_tol) + " for bump at (" + fmt(b.x0) + ", " +
                                          fmt(b.t0) + ")",
                                      trace);
            (component == 0 ? r.r_u : r.r_v) = value;
            (component == 0 ? r.err_u : r.err_v) = total_err;
        }
        report.max_u = std::max(report.max_u, std::fabs(r.r_u));
        report.max_v = std::max(report.max_v, std::fabs(r.r_v));
        report.bumps.push_back(r);
    }
    return report;
}

WeakReport weak_residual(const DeltaShock& delta, const FluxParams& p,
                         std::span<const BumpTestFn> bumps, const WeakOptions& opt) {
    RiemannSolution sol;
    sol.left = delta.left;
    sol.right = delta.right;
    sol.params = p;
    sol.waves.push_back(delta);
    return weak_residual(sol, bumps, opt);
}

}  // namespace brio
