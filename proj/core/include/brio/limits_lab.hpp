#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "brio/brio_solver.hpp"
#include "brio/solution.hpp"

namespace brio {

enum class SweepMode { BothEqual, Eps1Only };

/// Geometric schedule eps_k = eps_start * ratio^k, k < count. Values below
/// `floor` are dropped.
struct Schedule {
    double eps_start = 1e-1;
    double ratio = 0.25;
    int count = 20;
    SweepMode mode = SweepMode::BothEqual;
    double floor = 1e-12;

    std::vector<double> values() const;
};

/// One point of a parameter-limit study.
struct SweepRecord {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double v_star = 0.0;
    double u_star = 0.0;
    /// Inner wave speeds: the shock speed, or for a fan the edge touching the
    /// intermediate state.
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    /// (sigma2 - sigma1) * v_star, the mass carried between the waves per
    /// unit time.
    double strength_surrogate = 0.0;
    /// sqrt(eps1) * v_star.
    double scaled_vstar = 0.0;
    Region4 region = Region4::R1R2;
    /// ln v_star, resolved even where v_star underflows.
    double log_v_star = 0.0;
    /// {wave1.lo, wave1.hi, wave2.lo, wave2.hi}.
    std::array<double, 4> fan_edges{};
};

/// Record for a single parameter pair. The solution must be a two-wave fan.
SweepRecord sweep_point(const State& left, const State& right, const FluxParams& p,
                        const SolverOptions& opt = {});

/// Records for an explicit list of parameter pairs, in order.
std::vector<SweepRecord> sweep(const State& left, const State& right,
                               std::span<const FluxParams> params, const SolverOptions& opt = {});

/// eps1 = eps2 = eps_k.
std::vector<SweepRecord> sweep_both(const State& left, const State& right, const Schedule& sch,
                                    const SolverOptions& opt = {});

/// eps1 = eps_k with eps2 fixed.
std::vector<SweepRecord> sweep_eps1(const State& left, const State& right, double eps2,
                                    const Schedule& sch, const SolverOptions& opt = {});

/// Vacuum between contacts moving at `from` and `to`.
struct VacuumLimit {
    double from = 0.0;
    double to = 0.0;
};

/// Contact at `contact_speed` followed by a family-2 fan through
/// `intermediate`.
struct ContactRarefactionLimit {
    double contact_speed = 0.0;
    State intermediate;
    Rarefaction fan;
};

using BothLimit = std::variant<DeltaShock, VacuumLimit>;
using Eps1Limit = std::variant<DeltaShock, ContactRarefactionLimit>;

/// Transport-system solution the eps1 = eps2 -> 0 sweep converges to.
BothLimit predicted_limit_both(const State& left, const State& right);

/// One-parameter solution the eps1 -> 0 sweep converges to. Region II data
/// throws UnsupportedCaseError.
Eps1Limit predicted_limit_eps1(const State& left, const State& right, double eps2);

/// eps1 below which classify gives S1S2 (region III data) or R1R2 (region I
/// data), by bisection in ln eps1 over [1e-300, 1e6]. Returns +infinity when
/// the classification already holds at 1e6.
double find_region_threshold(const State& left, const State& right, double eps2);

struct LimitEstimate {
    double limit = 0.0;
    /// Observed order p in |x_k - x*| ~ C eps_k^p; empty when the tail is not
    /// monotonically contracting.
    std::optional<double> rate;
};

/// Last value as the limit, order from the last three values on a schedule
/// with constant ratio.
LimitEstimate estimate_limit(std::span<const double> values, double ratio);

using SweepField = std::function<double(const SweepRecord&)>;

LimitEstimate estimate_limit(std::span<const SweepRecord> records, const SweepField& field);

}  // namespace brio
