#pragma once

#include <cmath>
#include <string>

#include "brio/errors.hpp"

namespace brio::detail {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
    int iterations = 0;
};

/// Bisection on a bracket with f(lo), f(hi) of opposite sign (or one of them
/// zero). Stops when `done(lo, hi)` holds or the midpoint no longer separates
/// the endpoints; throws ConvergenceError after `max_iter` halvings.
template <class F, class Done>
Bracket bisect(F&& f, Bracket b, int max_iter, Done&& done) {
    if (b.f_lo == 0.0) { b.hi = b.lo; b.f_hi = 0.0; return b; }
    if (b.f_hi == 0.0) { b.lo = b.hi; b.f_lo = 0.0; return b; }
    if ((b.f_lo > 0.0) == (b.f_hi > 0.0))
        throw SolverError("bisection: bracket has no sign change");
    while (!done(b.lo, b.hi)) {
        const double mid = 0.5 * (b.lo + b.hi);
        if (!(mid > std::fmin(b.lo, b.hi) && mid < std::fmax(b.lo, b.hi))) break;
        if (b.iterations >= max_iter)
            throw ConvergenceError("bisection: tolerance not reached after " +
                                   std::to_string(max_iter) + " iterations, bracket [" +
                                   std::to_string(b.lo) + ", " + std::to_string(b.hi) + "]");
        ++b.iterations;
        const double fm = f(mid);
        if (fm == 0.0) { b.lo = b.hi = mid; b.f_lo = b.f_hi = 0.0; return b; }
        if ((fm > 0.0) == (b.f_lo > 0.0)) { b.lo = mid; b.f_lo = fm; }
        else { b.hi = mid; b.f_hi = fm; }
    }
    return b;
}

/// Regula-falsi point inside a converged bracket.
inline double interpolate_root(const Bracket& b) {
    if (b.f_lo == b.f_hi) return 0.5 * (b.lo + b.hi);
    const double x = b.lo - b.f_lo * (b.hi - b.lo) / (b.f_hi - b.f_lo);
    const double lo = std::fmin(b.lo, b.hi);
    const double hi = std::fmax(b.lo, b.hi);
    return std::fmin(hi, std::fmax(lo, x));
}

}  // namespace brio::detail
