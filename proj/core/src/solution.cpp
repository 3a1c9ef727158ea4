#include "brio/solution.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "bisect.hpp"
#include "brio/kernel.hpp"

namespace brio {

std::string_view to_string(Region4 r) {
    switch (r) {
        case Region4::R1R2: return "R1R2";
        case Region4::S1R2: return "S1R2";
        case Region4::R1S2: return "R1S2";
        case Region4::S1S2: return "S1S2";
    }
    return "unknown";
}

std::optional<Region4> region4_from_string(std::string_view s) {
    for (Region4 r : {Region4::R1R2, Region4::S1R2, Region4::R1S2, Region4::S1S2})
        if (to_string(r) == s) return r;
    return std::nullopt;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

SpeedInterval speed_interval(const Wave& w) {
    return std::visit(overloaded{
                          [](const Rarefaction& r) { return SpeedInterval{r.head, r.tail}; },
                          [](const Shock& s) { return SpeedInterval{s.sigma, s.sigma}; },
                          [](const Contact& c) { return SpeedInterval{c.speed, c.speed}; },
                          [](const DeltaShock& d) { return SpeedInterval{d.sigma, d.sigma}; },
                          [](const VacuumFan& f) { return SpeedInterval{f.from, f.to}; },
                      },
                      w);
}

State left_state(const Wave& w) {
    return std::visit(overloaded{
                          [](const Rarefaction& r) { return r.left; },
                          [](const Shock& s) { return s.left; },
                          [](const Contact& c) { return c.left; },
                          [](const DeltaShock& d) { return d.left; },
                          [](const VacuumFan& f) { return State{f.from, 0.0}; },
                      },
                      w);
}

State right_state(const Wave& w) {
    return std::visit(overloaded{
                          [](const Rarefaction& r) { return r.right; },
                          [](const Shock& s) { return s.right; },
                          [](const Contact& c) { return c.right; },
                          [](const DeltaShock& d) { return d.right; },
                          [](const VacuumFan& f) { return State{f.to, 0.0}; },
                      },
                      w);
}

std::string_view wave_type_name(const Wave& w) {
    return std::visit(overloaded{
                          [](const Rarefaction&) { return std::string_view("rarefaction"); },
                          [](const Shock&) { return std::string_view("shock"); },
                          [](const Contact&) { return std::string_view("contact"); },
                          [](const DeltaShock&) { return std::string_view("delta_shock"); },
                          [](const VacuumFan&) { return std::string_view("vacuum"); },
                      },
                      w);
}

State sample_fan(const Rarefaction& fan, const FluxParams& p, double xi) {
    if (xi <= fan.head) return fan.left;
    if (xi >= fan.tail) return fan.right;

    if (p.eps1 == 0.0) {
        // One-parameter system: only the family-2 fan exists, lambda = u and
        // eps2 ln v - u is invariant.
        const double v = fan.right.v * std::exp((xi - fan.right.u) / p.eps2);
        return {xi, v};
    }

    // Anchor at the end of the fan that has positive density: R1 at its left
    // state, R2 at its right state. The other end may be a vacuum.
    const bool back = fan.family == WaveFamily::Back;
    const State anchor = back ? fan.left : fan.right;
    const State other = back ? fan.right : fan.left;
    const double log_anchor = std::log(anchor.v);

    auto u_at = [&](double log_v) {
        if (back) return anchor.u + kernel::potential_difference_log(WaveFamily::Back, log_anchor, log_v, p);
        return anchor.u - kernel::potential_difference_log(WaveFamily::Forward, log_v, log_anchor, p);
    };
    auto lambda_at = [&](double log_v) {
        const double s = std::sqrt(p.eps2 * p.eps2 + 4.0 * p.eps1 * std::exp(2.0 * log_v));
        const double u = u_at(log_v);
        return back ? u - 0.5 * p.eps2 - 0.5 * s : u - 0.5 * p.eps2 + 0.5 * s;
    };
    // lambda1 decreases with v along R1, lambda2 increases with v along R2:
    // g(l) = lambda(l) - xi changes sign between l_other and l_anchor.
    auto g = [&](double log_v) { return lambda_at(log_v) - xi; };

    detail::Bracket b;
    b.hi = log_anchor;
    b.f_hi = g(b.hi);
    if (other.v > 0.0) {
        b.lo = std::log(other.v);
        b.f_lo = g(b.lo);
    }
    if (!(other.v > 0.0) || (b.f_lo > 0.0) == (b.f_hi > 0.0)) {
        double step = 1.0;
        b.lo = log_anchor - step;
        b.f_lo = g(b.lo);
        while ((b.f_lo > 0.0) == (b.f_hi > 0.0) && b.f_lo != 0.0) {
            step *= 2.0;
            if (step > 1e300) return other;
            b.lo = log_anchor - step;
            b.f_lo = g(b.lo);
        }
    }
    if (b.f_lo == 0.0) return {u_at(b.lo), std::exp(b.lo)};
    if (b.f_hi == 0.0) return {u_at(b.hi), std::exp(b.hi)};
    std::uintmax_t max_iter = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(
        g, b.lo, b.hi, b.f_lo, b.f_hi, boost::math::tools::eps_tolerance<double>(50), max_iter);
    const double log_v = 0.5 * (lo + hi);
    return {u_at(log_v), std::exp(log_v)};
}

SampleResult sample(const RiemannSolution& sol, double xi) {
    for (const Wave& w : sol.waves) {
        const SpeedInterval iv = speed_interval(w);
        if (xi < iv.lo) return {left_state(w), std::nullopt};
        if (const auto* d = std::get_if<DeltaShock>(&w); d && xi == d->sigma)
            return {State{d->u_delta, 0.0}, *d};
        if (const auto* r = std::get_if<Rarefaction>(&w); r && xi <= iv.hi)
            return {sample_fan(*r, sol.params, xi), std::nullopt};
        if (std::holds_alternative<VacuumFan>(w) && xi <= iv.hi) return {State{xi, 0.0}, std::nullopt};
    }
    return {sol.right, std::nullopt};
}

}  // namespace brio
