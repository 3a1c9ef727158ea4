#pragma once

#include "brio/types.hpp"

/// Pointwise kernel of the perturbed Brio system
///
///     u_t + (u^2/2 + eps1 v^2/2)_x = 0,
///     v_t + (u v - eps2 v)_x       = 0,
///
/// and of its eps1 = 0 / eps1 = eps2 = 0 reductions: characteristic speeds,
/// wave curves through a base state, shock speeds, jump residuals and the Lax
/// admissibility test. Everything here is a pure function of its arguments.
namespace brio::kernel {

enum class CurveKind { R1, R2, S1, S2 };

/// Which Hugoniot slope to use on S1/S2. `Corrected` is obtained by
/// eliminating sigma from both jump conditions; `Printed` keeps the
/// (v + v_base) factor under the square root and fails the jump conditions.
/// It exists only to document that discrepancy.
enum class SlopeForm { Corrected, Printed };

/// sqrt(eps2^2 + 4 eps1 v^2), the eigenvalue gap.
double gap(double v, const FluxParams& p);

CharPair eigenvalues(const State& s, const FluxParams& p);

struct Nonlinearity {
    double g1 = 0.0;
    double g2 = 0.0;
};

/// grad(lambda_i) . r_i with the eigenvector scaling (eps2/2 -/+ gap/2, v).
/// Zero whenever eps1 == 0 (that scaling degenerates there).
Nonlinearity genuine_nonlinearity(const State& s, const FluxParams& p);

/// Riemann-invariant potential Phi so that u - Phi(v) is constant along an
/// integral curve of the given family. For eps1 == 0 the family-2 potential is
/// eps2 ln v and the family-1 potential is 0.
double rarefaction_potential(WaveFamily fam, double v, const FluxParams& p);

/// Phi(v_to) - Phi(v_from), with densities given by their logarithms so that
/// states far below the smallest normal double stay representable. The
/// ln(4 eps1) part of the family-2 potential cancels here, which also makes
/// the eps1 == 0 case exact.
double potential_difference_log(WaveFamily fam, double log_v_from, double log_v_to,
                                const FluxParams& p);

/// Slope (u - u_base) / (v - v_base) of the Hugoniot locus through `v_base`
/// evaluated at `v`; `fam` picks the minus (Back) or plus (Forward) root.
double shock_slope(WaveFamily fam, double v_base, double v, const FluxParams& p,
                   SlopeForm form = SlopeForm::Corrected);

/// u on the wave curve of `kind` through `base` at density v. The boundary
/// v == base.v returns base.u. Throws DomainError off the admissible branch.
double curve_u(CurveKind kind, const State& base, double v, const FluxParams& p,
               SlopeForm form = SlopeForm::Corrected);

/// Asymptote of R1 as v -> 0+ (u**) or of S2 as v -> 0+ (u*).
double curve_limit_u(CurveKind kind, const State& base, const FluxParams& p,
                     SlopeForm form = SlopeForm::Corrected);

/// Shock speed from the second jump condition, written with the wave's own
/// right state as in the family's curve parametrization.
double shock_speed(WaveFamily fam, const State& left, const State& right,
                   const FluxParams& p);

struct JumpResidual {
    double r_u = 0.0;
    double r_v = 0.0;
};

/// sigma [q] - [f(q)] for both equations, [g] = g_right - g_left.
JumpResidual rh_residual(const State& left, const State& right, double sigma,
                         const FluxParams& p);

/// Lax entropy inequalities for a family-1 or family-2 shock. Ties within
/// `tol` count as satisfied.
bool lax_check(WaveFamily fam, const State& left, const State& right, double sigma,
               const FluxParams& p, const Tolerances& tol = {});

/// Physical flux (u^2/2 + eps1 v^2/2, u v - eps2 v).
State flux(const State& s, const FluxParams& p);

}  // namespace brio::kernel
