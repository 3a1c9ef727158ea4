#include "brio/kernel.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace brio {

std::string_view to_string(System s) {
    switch (s) {
        case System::Transport: return "transport";
        case System::SingleParam: return "single_param";
        case System::Brio: return "brio";
    }
    return "unknown";
}

std::string_view to_string(WaveFamily f) {
    return f == WaveFamily::Back ? "1" : "2";
}

void validate(const FluxParams& p) {
    if (!std::isfinite(p.eps1) || !std::isfinite(p.eps2))
        throw DomainError("flux parameters must be finite");
    if (p.eps1 < 0.0 || p.eps2 < 0.0)
        throw DomainError("flux parameters must be nonnegative (eps1=" + std::to_string(p.eps1) +
                          ", eps2=" + std::to_string(p.eps2) + ")");
}

void validate(const State& s, const FluxParams& p) {
    if (!std::isfinite(s.u) || !std::isfinite(s.v))
        throw DomainError("state components must be finite");
    if (system_of(p) == System::Transport) {
        if (s.v < 0.0) throw DomainError("density must be nonnegative, got v=" + std::to_string(s.v));
    } else if (s.v <= 0.0) {
        throw DomainError("density must be positive, got v=" + std::to_string(s.v));
    }
}

}  // namespace brio

namespace brio::kernel {
namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

void require_positive(double v) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError("density must be positive and finite, got v=" + std::to_string(v));
}

// gap(v) from a log-density; e^{2l} may underflow to zero, which is the
// correct limit.
double gap_log(double log_v, const FluxParams& p) {
    const double v2 = std::exp(2.0 * log_v);
    return std::sqrt(p.eps2 * p.eps2 + 4.0 * p.eps1 * v2);
}

}  // namespace

double gap(double v, const FluxParams& p) {
    return std::sqrt(p.eps2 * p.eps2 + 4.0 * p.eps1 * v * v);
}

CharPair eigenvalues(const State& s, const FluxParams& p) {
    require_finite(s.u, "u");
    require_finite(s.v, "v");
    validate(p);
    if (p.eps1 == 0.0 || s.v == 0.0) return {s.u - p.eps2, s.u};
    const double half_gap = 0.5 * gap(s.v, p);
    const double centre = s.u - 0.5 * p.eps2;
    return {centre - half_gap, centre + half_gap};
}

Nonlinearity genuine_nonlinearity(const State& s, const FluxParams& p) {
    validate(p);
    require_finite(s.v, "v");
    if (p.eps1 == 0.0) return {0.0, 0.0};
    require_positive(s.v);
    const double ratio = p.eps2 / gap(s.v, p);
    const double pre = p.eps1 * s.v;
    return {pre * (2.0 - ratio), pre * (2.0 + ratio)};
}

double rarefaction_potential(WaveFamily fam, double v, const FluxParams& p) {
    validate(p);
    require_positive(v);
    if (p.eps1 == 0.0) return fam == WaveFamily::Back ? 0.0 : p.eps2 * std::log(v);
    const double s = gap(v, p);
    if (fam == WaveFamily::Back) {
        const double log_term = p.eps2 > 0.0 ? p.eps2 * std::log(s + p.eps2) : 0.0;
        return 0.5 * (-s + log_term);
    }
    // ln(S - eps2) rewritten as ln(4 eps1) + 2 ln v - ln(S + eps2).
    const double log_term =
        p.eps2 > 0.0
            ? p.eps2 * (std::log(4.0 * p.eps1) + 2.0 * std::log(v) - std::log(s + p.eps2))
            : 0.0;
    return 0.5 * (s + log_term);
}

double potential_difference_log(WaveFamily fam, double log_v_from, double log_v_to,
                                const FluxParams& p) {
    if (p.eps1 == 0.0) {
        if (fam == WaveFamily::Back) return 0.0;
        return p.eps2 * (log_v_to - log_v_from);
    }
    const double s_from = gap_log(log_v_from, p);
    const double s_to = gap_log(log_v_to, p);
    // S_to - S_from without cancellation.
    const double v2_from = std::exp(2.0 * log_v_from);
    const double v2_to = std::exp(2.0 * log_v_to);
    const double s_sum = s_from + s_to;
    const double ds = s_sum > 0.0 ? 4.0 * p.eps1 * (v2_to - v2_from) / s_sum : 0.0;

    double log_ratio = 0.0;  // ln(S_to + eps2) - ln(S_from + eps2)
    if (p.eps2 > 0.0) log_ratio = std::log1p(ds / (s_from + p.eps2));

    if (fam == WaveFamily::Back) return 0.5 * (-ds + p.eps2 * log_ratio);
    if (p.eps2 == 0.0) return 0.5 * ds;
    return 0.5 * (ds + p.eps2 * (2.0 * (log_v_to - log_v_from) - log_ratio));
}

double shock_slope(WaveFamily fam, double v_base, double v, const FluxParams& p, SlopeForm form) {
    const double sum = v + v_base;
    // Corrected: (eps2 -/+ sqrt(eps2^2 + eps1 (v + v_base)^2)) / (v + v_base).
    // Printed:   (eps2 -/+ sqrt(eps2^2 + 4 eps1 (v + v_base)^2)) / (v + v_base).
    const double k = form == SlopeForm::Corrected ? p.eps1 : 4.0 * p.eps1;
    const double root = std::sqrt(p.eps2 * p.eps2 + k * sum * sum);
    if (fam == WaveFamily::Forward) return (p.eps2 + root) / sum;
    // eps2 - root = -k sum^2 / (eps2 + root)
    const double denom = p.eps2 + root;
    if (denom == 0.0) return 0.0;
    return -k * sum / denom;
}

double curve_u(CurveKind kind, const State& base, double v, const FluxParams& p, SlopeForm form) {
    validate(p);
    require_finite(base.u, "base u");
    require_positive(base.v);
    require_positive(v);
    const bool below = v <= base.v;
    const bool above = v >= base.v;
    switch (kind) {
        case CurveKind::R1:
            if (!below) throw DomainError("R1 requires v <= v_base");
            return base.u + potential_difference_log(WaveFamily::Back, std::log(base.v), std::log(v), p);
        case CurveKind::R2:
            if (!above) throw DomainError("R2 requires v >= v_base");
            return base.u + potential_difference_log(WaveFamily::Forward, std::log(base.v), std::log(v), p);
        case CurveKind::S1:
            if (!above) throw DomainError("S1 requires v >= v_base");
            return base.u + (v - base.v) * shock_slope(WaveFamily::Back, base.v, v, p, form);
        case CurveKind::S2:
            if (!below) throw DomainError("S2 requires v <= v_base");
            return base.u + (v - base.v) * shock_slope(WaveFamily::Forward, base.v, v, p, form);
    }
    throw DomainError("unknown curve kind");
}

double curve_limit_u(CurveKind kind, const State& base, const FluxParams& p, SlopeForm form) {
    validate(p);
    require_finite(base.u, "base u");
    require_positive(base.v);
    if (!(p.eps1 > 0.0)) throw DomainError("curve limits need eps1 > 0");
    switch (kind) {
        case CurveKind::R1: {
            // u** = (-eps2 + eps2 ln(2 eps2)) / 2 + C1, continuous as eps2 -> 0.
            const double phi_zero =
                p.eps2 > 0.0 ? 0.5 * (-p.eps2 + p.eps2 * std::log(2.0 * p.eps2)) : 0.0;
            return phi_zero + base.u - rarefaction_potential(WaveFamily::Back, base.v, p);
        }
        case CurveKind::S2: {
            const double k = form == SlopeForm::Corrected ? p.eps1 : 4.0 * p.eps1;
            return base.u - (p.eps2 + std::sqrt(p.eps2 * p.eps2 + k * base.v * base.v));
        }
        default:
            throw DomainError("curve_limit_u is defined for R1 and S2 only");
    }
}

double shock_speed(WaveFamily fam, const State& left, const State& right, const FluxParams& p) {
    validate(p);
    for (double x : {left.u, left.v, right.u, right.v}) require_finite(x, "state component");
    const double dv = right.v - left.v;
    if (dv == 0.0) throw DegenerateJumpError("shock speed undefined for v_left == v_right");
    const double du = right.u - left.u;
    if (fam == WaveFamily::Back) return left.u + right.v * du / dv - p.eps2;
    return right.u + left.v * du / dv - p.eps2;
}

State flux(const State& s, const FluxParams& p) {
    return {0.5 * s.u * s.u + 0.5 * p.eps1 * s.v * s.v, s.u * s.v - p.eps2 * s.v};
}

JumpResidual rh_residual(const State& left, const State& right, double sigma, const FluxParams& p) {
    const State fl = flux(left, p);
    const State fr = flux(right, p);
    return {sigma * (right.u - left.u) - (fr.u - fl.u), sigma * (right.v - left.v) - (fr.v - fl.v)};
}

bool lax_check(WaveFamily fam, const State& left, const State& right, double sigma,
               const FluxParams& p, const Tolerances& tol) {
    if (left == right) return false;
    const auto lt = [&](double a, double b) { return a < b + tol.slack(a, b); };
    const CharPair l = eigenvalues(left, p);
    const CharPair r = eigenvalues(right, p);
    if (fam == WaveFamily::Back)
        return lt(sigma, l.lambda1) && lt(r.lambda1, sigma) && lt(sigma, r.lambda2);
    return lt(l.lambda1, sigma) && lt(sigma, l.lambda2) && lt(r.lambda2, sigma);
}

}  // namespace brio::kernel
