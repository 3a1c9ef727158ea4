#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "brio/types.hpp"

namespace brio {

enum class Region4 { R1R2, S1R2, R1S2, S1S2 };

std::string_view to_string(Region4 r);
std::optional<Region4> region4_from_string(std::string_view s);

/// Centred rarefaction fan. `head` = lambda(left), `tail` = lambda(right).
struct Rarefaction {
    WaveFamily family = WaveFamily::Back;
    State left;
    State right;
    double head = 0.0;
    double tail = 0.0;
};

struct Shock {
    WaveFamily family = WaveFamily::Back;
    State left;
    State right;
    double sigma = 0.0;
};

struct Contact {
    double speed = 0.0;
    State left;
    State right;
};

/// Discontinuity carrying a Dirac mass of strength w(t) = strength_rate * t in
/// v. `u_delta` is the value of u assigned on the line; the flux pairing for
/// the v equation moves the mass at speed u_delta - eps2 (= sigma).
struct DeltaShock {
    State left;
    State right;
    double sigma = 0.0;
    double u_delta = 0.0;
    double strength_rate = 0.0;
};

using DeltaShockSolution = DeltaShock;

/// Vacuum region (u, v) = (xi, 0) for xi in [from, to].
struct VacuumFan {
    double from = 0.0;
    double to = 0.0;
};

using Wave = std::variant<Rarefaction, Shock, Contact, DeltaShock, VacuumFan>;

struct SpeedInterval {
    double lo = 0.0;
    double hi = 0.0;
};

SpeedInterval speed_interval(const Wave& w);
/// State on the left/right edge of a wave. VacuumFan edges are (from, 0) and
/// (to, 0).
State left_state(const Wave& w);
State right_state(const Wave& w);
std::string_view wave_type_name(const Wave& w);

struct RiemannSolution {
    State left;
    State right;
    FluxParams params;
    std::vector<Wave> waves;  // ordered left to right in xi
    std::optional<State> intermediate;
    std::optional<Region4> region;
    /// Free-form metadata (e.g. that eps2 == 0 is an extension).
    std::vector<std::string> notes;
};

/// Result of evaluating a solution at one xi. For a delta shock sampled exactly
/// on its line, `delta` is set and `state.u` is u_delta.
struct SampleResult {
    State state;
    std::optional<DeltaShock> delta;
};

/// Self-similar evaluation at xi = x/t. Discontinuities are taken
/// right-continuous (xi == sigma returns the right state) except delta shocks,
/// which return the delta marker exactly on their line. Inside a rarefaction the
/// fan is inverted through the monotone characteristic speed along the
/// integral curve.
SampleResult sample(const RiemannSolution& sol, double xi);

/// Density profile check helpers used by diagnostics and tests.
/// Returns the state inside the fan at speed xi (head <= xi <= tail).
State sample_fan(const Rarefaction& fan, const FluxParams& p, double xi);

}  // namespace brio
