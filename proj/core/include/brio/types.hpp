#pragma once

#include <cmath>
#include <string_view>

#include "brio/errors.hpp"

namespace brio {

/// Velocity u and density v.
struct State {
    double u = 0.0;
    double v = 0.0;

    friend bool operator==(const State&, const State&) = default;
};

/// Perturbation pair (eps1, eps2). (0,0) is the transport system,
/// (0, eps2>0) the one-parameter system, both positive the perturbed Brio
/// system. eps2 == 0 with eps1 > 0 is accepted as an exactly solvable
/// extension.
struct FluxParams {
    double eps1 = 0.0;
    double eps2 = 0.0;

    friend bool operator==(const FluxParams&, const FluxParams&) = default;
};

enum class System { Transport, SingleParam, Brio };

enum class WaveFamily { Back = 1, Forward = 2 };

/// Characteristic speeds, lambda1 <= lambda2.
struct CharPair {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

/// Absolute/relative comparison tolerances used across the library.
struct Tolerances {
    double abs = 1e-12;
    double rel = 1e-10;

    /// Slack allowed when comparing a and b.
    double slack(double a, double b) const noexcept {
        return abs + rel * std::fmax(std::fabs(a), std::fabs(b));
    }
};

inline System system_of(const FluxParams& p) {
    if (p.eps1 > 0.0) return System::Brio;
    if (p.eps2 > 0.0) return System::SingleParam;
    return System::Transport;
}

std::string_view to_string(System s);
std::string_view to_string(WaveFamily f);

/// Throws DomainError unless both coefficients are finite and nonnegative.
void validate(const FluxParams& p);

/// Throws DomainError unless the state is admissible for the system selected
/// by p: finite, v > 0 when eps1 > 0 or for the one-parameter system, v >= 0
/// for transport.
void validate(const State& s, const FluxParams& p);

}  // namespace brio
