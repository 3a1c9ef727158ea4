#include "brio/limits_lab.hpp"

#include <cmath>
#include <sstream>

#include "brio/limit_models.hpp"

namespace brio {

namespace {

std::string at_params(const FluxParams& p) {
    std::ostringstream os;
    os.precision(17);
    os << " (at eps1=" << p.eps1 << ", eps2=" << p.eps2 << ")";
    return os.str();
}

void check_schedule(const Schedule& sch, SweepMode mode) {
    if (sch.mode != mode) throw DomainError("schedule mode does not match the sweep");
    if (!(sch.eps_start > 0.0) || !std::isfinite(sch.eps_start))
        throw DomainError("schedule start must be positive and finite");
    if (!(sch.ratio > 0.0 && sch.ratio < 1.0)) throw DomainError("schedule ratio must lie in (0, 1)");
    if (sch.count < 1) throw DomainError("schedule count must be positive");
}

}  // namespace

std::vector<double> Schedule::values() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    double eps = eps_start;
    for (int k = 0; k < count; ++k, eps *= ratio) {
        if (eps < floor) break;
        out.push_back(eps);
    }
    return out;
}

SweepRecord sweep_point(const State& left, const State& right, const FluxParams& p,
                        const SolverOptions& opt) {
    const RiemannSolution sol = solve_riemann(left, right, p, opt);
    if (!sol.intermediate || sol.waves.size() != 2)
        throw SolverError("sweep point is not a two-wave solution");

    SweepRecord r;
    r.eps1 = p.eps1;
    r.eps2 = p.eps2;
    r.u_star = sol.intermediate->u;
    r.v_star = sol.intermediate->v;
    r.region = *sol.region;
    r.log_v_star = r.v_star >= std::numeric_limits<double>::min()
                       ? std::log(r.v_star)
                       : solve_intermediate(left, right, p, opt).log_v;

    const SpeedInterval w1 = speed_interval(sol.waves[0]);
    const SpeedInterval w2 = speed_interval(sol.waves[1]);
    r.fan_edges = {w1.lo, w1.hi, w2.lo, w2.hi};
    r.sigma1 = w1.hi;
    r.sigma2 = w2.lo;
    r.strength_surrogate = (r.sigma2 - r.sigma1) * r.v_star;
    r.scaled_vstar = std::sqrt(p.eps1) * r.v_star;
    return r;
}

std::vector<SweepRecord> sweep(const State& left, const State& right,
                               std::span<const FluxParams> params, const SolverOptions& opt) {
    std::vector<SweepRecord> out;
    out.reserve(params.size());
    for (const FluxParams& p : params) {
        try {
            out.push_back(sweep_point(left, right, p, opt));
        } catch (const ConvergenceError& e) {
            throw ConvergenceError(e.what() + at_params(p));
        } catch (const SolverError& e) {
            throw SolverError(e.what() + at_params(p));
        }
    }
    return out;
}

std::vector<SweepRecord> sweep_both(const State& left, const State& right, const Schedule& sch,
                                    const SolverOptions& opt) {
    check_schedule(sch, SweepMode::BothEqual);
    if (left.u == right.u) throw DomainError("sweep_both needs u_left != u_right");
    std::vector<FluxParams> params;
    for (double eps : sch.values()) params.push_back({eps, eps});
    return sweep(left, right, params, opt);
}

std::vector<SweepRecord> sweep_eps1(const State& left, const State& right, double eps2,
                                    const Schedule& sch, const SolverOptions& opt) {
    check_schedule(sch, SweepMode::Eps1Only);
    if (!(eps2 > 0.0) || !std::isfinite(eps2)) throw DomainError("sweep_eps1 needs a fixed eps2 > 0");
    std::vector<FluxParams> params;
    for (double eps : sch.values()) params.push_back({eps, eps2});
    return sweep(left, right, params, opt);
}

BothLimit predicted_limit_both(const State& left, const State& right) {
    if (left.u == right.u) throw DomainError("limit undefined for u_left == u_right");
    const RiemannSolution sol = solve_transport(left, right);
    if (left.u > right.u) return std::get<DeltaShock>(sol.waves.front());
    return VacuumLimit{left.u, right.u};
}

Eps1Limit predicted_limit_eps1(const State& left, const State& right, double eps2) {
    const Region3 region = classify_single_param(left, right, eps2);
    if (region == Region3::II)
        throw UnsupportedCaseError("eps1 -> 0 limit is not constructed for region II data");
    if (region == Region3::III) return std::get<DeltaShock>(solve_single_param(left, right, eps2).waves.front());
    const State mid{left.u, right.v * std::exp((left.u - right.u) / eps2)};
    return ContactRarefactionLimit{left.u - eps2, mid,
                                   Rarefaction{WaveFamily::Forward, mid, right, mid.u, right.u}};
}

double find_region_threshold(const State& left, const State& right, double eps2) {
    const Region3 region = classify_single_param(left, right, eps2);
    if (region == Region3::II) throw UnsupportedCaseError("no threshold for region II data");
    const Region4 target = region == Region3::III ? Region4::S1S2 : Region4::R1R2;
    const auto good = [&](double log_eps) {
        return classify(left, right, {std::exp(log_eps), eps2}) == target;
    };

    double lo = std::log(1e-300);
    double hi = std::log(1e6);
    if (good(hi)) return std::numeric_limits<double>::infinity();
    if (!good(lo))
        throw SolverError("region threshold: target region " + std::string(to_string(target)) +
                          " not reached at eps1 = 1e-300");
    for (int it = 0; hi - lo > 1e-12; ++it) {
        if (it >= 200) throw ConvergenceError("region threshold bisection did not converge");
        const double mid = 0.5 * (lo + hi);
        (good(mid) ? lo : hi) = mid;
    }
    return std::exp(lo);
}

LimitEstimate estimate_limit(std::span<const double> values, double ratio) {
    if (values.size() < 3) throw DomainError("estimate_limit needs at least three values");
    if (!(ratio > 0.0 && ratio < 1.0)) throw DomainError("schedule ratio must lie in (0, 1)");
    const std::size_t n = values.size();
    LimitEstimate out;
    out.limit = values[n - 1];
    const double d1 = values[n - 2] - values[n - 3];
    const double d2 = values[n - 1] - values[n - 2];
    if (d1 != 0.0 && d2 != 0.0 && (d1 > 0.0) == (d2 > 0.0) && std::fabs(d2) < std::fabs(d1))
        out.rate = std::log(std::fabs(d2) / std::fabs(d1)) / std::log(ratio);
    return out;
}

LimitEstimate estimate_limit(std::span<const SweepRecord> records, const SweepField& field) {
    if (records.size() < 3) throw DomainError("estimate_limit needs at least three records");
    const std::size_t n = records.size();
    const double ratio = records[n - 1].eps1 / records[n - 2].eps1;
    std::vector<double> values;
    values.reserve(n);
    for (const SweepRecord& r : records) values.push_back(field(r));
    return estimate_limit(values, ratio);
}

}  // namespace brio
