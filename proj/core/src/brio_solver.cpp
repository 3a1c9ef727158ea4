#include "brio/brio_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bisect.hpp"
#include "brio/limit_models.hpp"

namespace brio {

using kernel::CurveKind;

namespace {

bool ties(double a, double b, double tie) {
    return std::fabs(a - b) <= tie * std::max({1.0, std::fabs(a), std::fabs(b)});
}

void require_brio(const State& left, const State& right, const FluxParams& p) {
    validate(p);
    if (!(p.eps1 > 0.0)) throw DomainError("perturbed solver needs eps1 > 0; use solve() to dispatch");
    validate(left, p);
    validate(right, p);
}

// Family-1 wave curve through `left` (R1 below v_left, S1 above) and the
// backward family-2 curve through `right` (R2 below v_right, S2 above), both
// parameterised by l = ln v.
struct Mismatch {
    State left;
    State right;
    FluxParams p;
    double log_left;
    double log_right;

    Mismatch(const State& l, const State& r, const FluxParams& params)
        : left(l), right(r), p(params), log_left(std::log(l.v)), log_right(std::log(r.v)) {}

    double wave1(double log_v) const {
        if (log_v <= log_left)
            return left.u + kernel::potential_difference_log(WaveFamily::Back, log_left, log_v, p);
        const double v = std::exp(log_v);
        return left.u + (v - left.v) * kernel::shock_slope(WaveFamily::Back, left.v, v, p);
    }

    double back2(double log_v) const {
        if (log_v <= log_right)
            return right.u - kernel::potential_difference_log(WaveFamily::Forward, log_v, log_right, p);
        const double v = std::exp(log_v);
        return right.u + (v - right.v) * kernel::shock_slope(WaveFamily::Forward, right.v, v, p);
    }

    double operator()(double log_v) const { return wave1(log_v) - back2(log_v); }
};

std::string describe(const State& left, const State& right, const FluxParams& p) {
    std::ostringstream os;
    os.precision(17);
    os << "left=(" << left.u << ", " << left.v << "), right=(" << right.u << ", " << right.v
       << "), eps1=" << p.eps1 << ", eps2=" << p.eps2;
    return os.str();
}

Wave family1_wave(const State& left, const State& mid, const FluxParams& p) {
    if (mid.v < left.v)
        return Rarefaction{WaveFamily::Back, left, mid, kernel::eigenvalues(left, p).lambda1,
                           kernel::eigenvalues(mid, p).lambda1};
    return Shock{WaveFamily::Back, left, mid, kernel::shock_speed(WaveFamily::Back, left, mid, p)};
}

Wave family2_wave(const State& mid, const State& right, const FluxParams& p) {
    if (mid.v < right.v)
        return Rarefaction{WaveFamily::Forward, mid, right, kernel::eigenvalues(mid, p).lambda2,
                           kernel::eigenvalues(right, p).lambda2};
    return Shock{WaveFamily::Forward, mid, right, kernel::shock_speed(WaveFamily::Forward, mid, right, p)};
}

}  // namespace

Classification classify_detail(const State& left, const State& right, const FluxParams& p,
                               const SolverOptions& opt) {
    require_brio(left, right, p);
    Classification c;
    if (right.v > left.v) {
        const double r2 = kernel::curve_u(CurveKind::R2, left, right.v, p);
        const double s1 = kernel::curve_u(CurveKind::S1, left, right.v, p);
        if (ties(right.u, r2, opt.tie)) {
            c.region = Region4::R1R2;
            c.on_curve = CurveKind::R2;
        } else if (ties(right.u, s1, opt.tie)) {
            c.region = Region4::S1S2;
            c.on_curve = CurveKind::S1;
        } else if (right.u > r2) {
            c.region = Region4::R1R2;
        } else if (right.u < s1) {
            c.region = Region4::S1S2;
        } else {
            c.region = Region4::S1R2;
        }
    } else if (right.v < left.v) {
        const double r1 = kernel::curve_u(CurveKind::R1, left, right.v, p);
        const double s2 = kernel::curve_u(CurveKind::S2, left, right.v, p);
        if (ties(right.u, r1, opt.tie)) {
            c.region = Region4::R1R2;
            c.on_curve = CurveKind::R1;
        } else if (ties(right.u, s2, opt.tie)) {
            c.region = Region4::S1S2;
            c.on_curve = CurveKind::S2;
        } else if (right.u > r1) {
            c.region = Region4::R1R2;
        } else if (right.u < s2) {
            c.region = Region4::S1S2;
        } else {
            c.region = Region4::R1S2;
        }
    } else {
        c.region = right.u >= left.u ? Region4::R1R2 : Region4::S1S2;
    }
    return c;
}

Region4 classify(const State& left, const State& right, const FluxParams& p, const SolverOptions& opt) {
    return classify_detail(left, right, p, opt).region;
}

Intermediate solve_intermediate(const State& left, const State& right, const FluxParams& p,
                                const SolverOptions& opt) {
    if (!(opt.tol > 0.0)) throw DomainError("tolerance must be positive");
    const Region4 region = classify(left, right, p, opt);
    const Mismatch f(left, right, p);

    detail::Bracket b;
    switch (region) {
        case Region4::R1R2: {
            b.hi = std::min(f.log_left, f.log_right);
            b.f_hi = f(b.hi);
            double step = 1.0;
            b.lo = b.hi - step;
            b.f_lo = f(b.lo);
            while (b.f_lo <= 0.0) {
                step *= 2.0;
                if (step > 1e300)
                    throw SolverError("no intermediate state with positive density (vacuum) for " +
                                      describe(left, right, p));
                b.lo = b.hi - step;
                b.f_lo = f(b.lo);
            }
            break;
        }
        case Region4::S1R2:
            b.lo = f.log_left;
            b.hi = f.log_right;
            b.f_lo = f(b.lo);
            b.f_hi = f(b.hi);
            break;
        case Region4::R1S2:
            b.lo = f.log_right;
            b.hi = f.log_left;
            b.f_lo = f(b.lo);
            b.f_hi = f(b.hi);
            break;
        case Region4::S1S2: {
            b.lo = std::max(f.log_left, f.log_right);
            b.f_lo = f(b.lo);
            double v_hi = std::max(left.v, right.v) + 1.0;
            b.hi = std::log(v_hi);
            b.f_hi = f(b.hi);
            int doublings = 0;
            while (b.f_hi >= 0.0) {
                if (++doublings > opt.max_doublings || !std::isfinite(v_hi))
                    throw SolverError("upper bracket not found after " + std::to_string(doublings - 1) +
                                      " doublings (last v=" + std::to_string(v_hi) + ") for " +
                                      describe(left, right, p));
                v_hi *= 2.0;
                b.hi = std::log(v_hi);
                b.f_hi = f(b.hi);
            }
            break;
        }
    }

    const double tol = opt.tol;
    const auto done = [tol](double lo, double hi) { return std::fabs(hi - lo) <= tol; };
    const detail::Bracket r = detail::bisect(f, b, opt.max_iterations, done);
    const double log_v = detail::interpolate_root(r);

    Intermediate out;
    out.state = {f.wave1(log_v), std::exp(log_v)};
    out.region = region;
    out.log_v = log_v;
    out.iterations = r.iterations;
    return out;
}

RiemannSolution solve_riemann(const State& left, const State& right, const FluxParams& p,
                              const SolverOptions& opt) {
    require_brio(left, right, p);
    RiemannSolution sol;
    sol.left = left;
    sol.right = right;
    sol.params = p;
    if (p.eps2 == 0.0) sol.notes.push_back("eps2 = 0: extension beyond the strictly perturbed setting");
    if (left == right) return sol;

    const Classification c = classify_detail(left, right, p, opt);
    sol.region = c.region;
    if (c.on_curve) {
        switch (*c.on_curve) {
            case CurveKind::R1:
            case CurveKind::S1: sol.waves.push_back(family1_wave(left, right, p)); break;
            case CurveKind::R2:
            case CurveKind::S2: sol.waves.push_back(family2_wave(left, right, p)); break;
        }
        return sol;
    }

    if (p.eps2 == 0.0 && c.region == Region4::R1R2) {
        // Both rarefaction curves reach v = 0 at finite u; if they do not
        // meet, a vacuum opens between them.
        const double root = std::sqrt(p.eps1);
        const double u_tail1 = left.u + root * left.v;
        const double u_head2 = right.u - root * right.v;
        if (u_tail1 <= u_head2) {
            sol.waves.push_back(Rarefaction{WaveFamily::Back, left, {u_tail1, 0.0},
                                            kernel::eigenvalues(left, p).lambda1, u_tail1});
            sol.waves.push_back(VacuumFan{u_tail1, u_head2});
            sol.waves.push_back(Rarefaction{WaveFamily::Forward, {u_head2, 0.0}, right, u_head2,
                                            kernel::eigenvalues(right, p).lambda2});
            sol.notes.push_back("vacuum between the rarefaction fans");
            return sol;
        }
    }

    const Intermediate mid = solve_intermediate(left, right, p, opt);
    sol.intermediate = mid.state;
    sol.waves.push_back(family1_wave(left, mid.state, p));
    sol.waves.push_back(family2_wave(mid.state, right, p));
    return sol;
}

RiemannSolution solve(const State& left, const State& right, const FluxParams& p,
                      const SolverOptions& opt) {
    validate(p);
    switch (system_of(p)) {
        case System::Transport: return solve_transport(left, right);
        case System::SingleParam: return solve_single_param(left, right, p.eps2);
        case System::Brio: return solve_riemann(left, right, p, opt);
    }
    throw UnsupportedCaseError("unknown system");
}

}  // namespace brio
