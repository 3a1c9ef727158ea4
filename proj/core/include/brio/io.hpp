#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brio/fv_lab.hpp"
#include "brio/limits_lab.hpp"
#include "brio/solution.hpp"
#include "brio/weak_verify.hpp"

namespace brio::io {

inline constexpr std::string_view schema = "brio-riemann/1";

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

std::string solution_json(const RiemannSolution& sol);

/// Inverse of solution_json. Throws DomainError on malformed input or a
/// schema mismatch.
RiemannSolution solution_from_json(std::string_view text);

/// Columns xi,u,v,delta,strength_rate; delta rows carry 1 and the rate.
std::string sample_csv(const RiemannSolution& sol, std::span<const double> xis);

/// Columns x,t,xi,u,v,delta,strength_rate with xi = x / t.
std::string sample_csv_xt(const RiemannSolution& sol, std::span<const double> xs, double t);

/// Header eps1,eps2,v_star,u_star,sigma1,sigma2,strength_surrogate,scaled_vstar,region.
std::string sweep_csv(std::span<const SweepRecord> records);

struct SweepContext {
    SweepMode mode = SweepMode::BothEqual;
    State left;
    State right;
    /// Fixed eps2 for the eps1-only mode.
    double eps2 = 0.0;
};

/// Records plus limit estimates, the predicted limit solution, and both
/// candidate normalisations of the scaled density constant.
std::string sweep_json(std::span<const SweepRecord> records, const SweepContext& ctx);

std::string weak_json(const WeakReport& report, const WeakOptions& opt);

/// Columns x,u,v.
std::string field_csv(const CellField& field);

struct FvSummary {
    State left;
    State right;
    FluxParams params;
    const FvRun* run = nullptr;
    std::optional<double> l1;
    /// Why l1 is absent, if it is.
    std::string l1_note;
};

std::string fv_json(const FvSummary& summary);

}  // namespace brio::io
