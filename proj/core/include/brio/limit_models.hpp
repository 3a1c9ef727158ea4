#pragma once

#include "brio/solution.hpp"

namespace brio {

/// Phase-plane regions of the one-parameter system relative to the left
/// state: I above u_left, II within 2 eps2 below it, III further below.
enum class Region3 { I, II, III };

std::string_view to_string(Region3 r);

Region3 classify_single_param(const State& left, const State& right, double eps2);

/// Transport system (eps1 = eps2 = 0): two contacts around a vacuum when
/// u_left < u_right, a delta shock when u_left > u_right, one contact when
/// they agree.
RiemannSolution solve_transport(const State& left, const State& right);

/// One-parameter system (eps1 = 0 < eps2): contact then rarefaction (I),
/// contact then shock (II), or a delta shock (III).
RiemannSolution solve_single_param(const State& left, const State& right, double eps2);

struct DeltaPosition {
    double x = 0.0;
    double w = 0.0;
};

/// Position and mass of a delta shock started at the origin with zero mass.
DeltaPosition grh_evolve(double sigma, double strength_rate, double t);

}  // namespace brio
