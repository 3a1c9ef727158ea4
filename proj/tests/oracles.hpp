#pragma once

// Independent reference evaluations used by the tests. Nothing here calls
// into the library.

#include <cmath>
#include <functional>

namespace oracle {

inline double gap(double v, double e1, double e2) { return std::sqrt(e2 * e2 + 4.0 * e1 * v * v); }

/// du/dv along the integral curve of family k: eigenvector ((e2 -/+ S)/2, v).
inline double integral_slope(int family, double v, double e1, double e2) {
    const double s = gap(v, e1, e2);
    return (family == 1 ? e2 - s : e2 + s) / (2.0 * v);
}

/// Classical RK4 integration of the integral curve from (u0, v0) to v1.
inline double integral_curve(int family, double u0, double v0, double v1, double e1, double e2,
                             int steps = 4000) {
    const double h = (v1 - v0) / steps;
    double u = u0;
    double v = v0;
    for (int i = 0; i < steps; ++i) {
        const double k1 = integral_slope(family, v, e1, e2);
        const double k2 = integral_slope(family, v + 0.5 * h, e1, e2);
        const double k4 = integral_slope(family, v + h, e1, e2);
        u += h * (k1 + 4.0 * k2 + k4) / 6.0;
        v += h;
    }
    return u;
}

/// Hugoniot locus through (ub, vb) evaluated at density v. Eliminating sigma
/// between sigma [v] = [uv - e2 v] and sigma [u] = [u^2/2 + e1 v^2/2] with
/// u = ub + d leaves  d^2 (v/(v - vb) - 1/2) - e2 d - e1 (v^2 - vb^2)/2 = 0.
/// Family 1 is the root with d (v - vb) < 0, family 2 the other one.
inline double hugoniot_u(int family, double ub, double vb, double v, double e1, double e2) {
    const double a = v / (v - vb) - 0.5;
    const double b = -e2;
    const double c = -0.5 * e1 * (v * v - vb * vb);
    const double root = std::sqrt(b * b - 4.0 * a * c);
    const double d1 = (-b + root) / (2.0 * a);
    const double d2 = (-b - root) / (2.0 * a);
    const bool first_falls = d1 * (v - vb) < 0.0;
    return ub + ((family == 1) == first_falls ? d1 : d2);
}

/// Riemann invariant potentials written straight from their definition.
inline double phi1(double v, double e1, double e2) {
    const double s = gap(v, e1, e2);
    return 0.5 * (-s + e2 * std::log(s + e2));
}

inline double phi2(double v, double e1, double e2) {
    const double s = gap(v, e1, e2);
    // s - e2 = 4 e1 v^2 / (s + e2) avoids cancelling away small densities.
    return 0.5 * (s + e2 * (std::log(4.0 * e1) + 2.0 * std::log(v) - std::log(s + e2)));
}

/// Plain bisection on a sign change; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
    double flo = f(lo);
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle
