#include "brio/limit_models.hpp"

#include <algorithm>
#include <cmath>

namespace brio {

namespace {

bool same(double a, double b) {
    return std::fabs(a - b) <= 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace

std::string_view to_string(Region3 r) {
    switch (r) {
        case Region3::I: return "I";
        case Region3::II: return "II";
        case Region3::III: return "III";
    }
    return "unknown";
}

Region3 classify_single_param(const State& left, const State& right, double eps2) {
    const FluxParams p{0.0, eps2};
    if (!(eps2 > 0.0)) throw DomainError("one-parameter system needs eps2 > 0");
    validate(p);
    validate(left, p);
    validate(right, p);
    if (right.u >= left.u) return Region3::I;
    if (right.u > left.u - 2.0 * eps2) return Region3::II;
    return Region3::III;
}

RiemannSolution solve_transport(const State& left, const State& right) {
    const FluxParams p{};
    validate(left, p);
    validate(right, p);
    RiemannSolution sol;
    sol.left = left;
    sol.right = right;
    sol.params = p;
    if (left.u == right.u) {
        sol.waves.push_back(Contact{left.u, left, right});
        return sol;
    }
    if (left.u < right.u) {
        sol.waves.push_back(Contact{left.u, left, {left.u, 0.0}});
        sol.waves.push_back(VacuumFan{left.u, right.u});
        sol.waves.push_back(Contact{right.u, {right.u, 0.0}, right});
        return sol;
    }
    const double sigma = 0.5 * (left.u + right.u);
    const double rate = 0.5 * (left.v + right.v) * (left.u - right.u);
    sol.waves.push_back(DeltaShock{left, right, sigma, sigma, rate});
    return sol;
}

RiemannSolution solve_single_param(const State& left, const State& right, double eps2) {
    const Region3 region = classify_single_param(left, right, eps2);
    const FluxParams p{0.0, eps2};
    RiemannSolution sol;
    sol.left = left;
    sol.right = right;
    sol.params = p;
    if (left == right) return sol;

    const double jump = left.u - right.u;
    if (region == Region3::III || same(jump, 2.0 * eps2)) {
        const double sigma = 0.5 * (left.u + right.u);
        const double rate =
            0.5 * (right.v * (jump + 2.0 * eps2) - left.v * (-jump + 2.0 * eps2));
        sol.waves.push_back(DeltaShock{left, right, sigma, sigma + eps2, rate});
        return sol;
    }

    State mid{left.u, 0.0};
    if (region == Region3::I)
        mid.v = right.v * std::exp(jump / eps2);
    else
        mid.v = right.v * (jump + 2.0 * eps2) / (-jump + 2.0 * eps2);

    if (!same(mid.v, left.v)) sol.waves.push_back(Contact{left.u - eps2, left, mid});
    else mid = left;

    if (right.u == left.u) {
        if (sol.waves.empty()) return sol;
        std::get<Contact>(sol.waves.back()).right = right;
        return sol;
    }
    if (region == Region3::I)
        sol.waves.push_back(Rarefaction{WaveFamily::Forward, mid, right, mid.u, right.u});
    else
        sol.waves.push_back(Shock{WaveFamily::Forward, mid, right, 0.5 * (left.u + right.u)});
    if (sol.waves.size() == 2) sol.intermediate = mid;
    return sol;
}

DeltaPosition grh_evolve(double sigma, double strength_rate, double t) {
    if (!std::isfinite(sigma) || !std::isfinite(strength_rate) || !std::isfinite(t))
        throw DomainError("grh_evolve arguments must be finite");
    if (t < 0.0) throw DomainError("time must be nonnegative");
    return {sigma * t, strength_rate * t};
}

}  // namespace brio
