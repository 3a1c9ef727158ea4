#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "brio/brio_solver.hpp"
#include "brio/limit_models.hpp"
#include "brio/weak_verify.hpp"

using namespace brio;
using doctest::Approx;

namespace {

// Bumps whose supports straddle the wave fan at t ~ 1, drawn from a fixed seed.
std::vector<BumpTestFn> random_bumps(std::mt19937_64& rng, double x_lo, double x_hi, int n) {
    std::uniform_real_distribution<double> xs(x_lo, x_hi);
    std::uniform_real_distribution<double> ts(0.6, 1.6);
    std::uniform_real_distribution<double> rs(0.2, 1.0);
    std::vector<BumpTestFn> out;
    while (static_cast<int>(out.size()) < n) {
        const double t0 = ts(rng);
        const double rt = std::fmin(rs(rng), 0.9 * t0);
        out.push_back(make_bump(xs(rng), t0, rs(rng), rt));
    }
    return out;
}

DeltaShock first_delta(const RiemannSolution& sol) { return std::get<DeltaShock>(sol.waves.at(0)); }

}  // namespace

TEST_CASE("make_bump: values") {
    const BumpTestFn b = make_bump(0.0, 1.0, 1.0, 0.5);
    CHECK(b(0.0, 1.0) == 1.0);
    CHECK(b(1.0, 1.0) == 0.0);
    CHECK(b(0.0, 0.5) == 0.0);
    CHECK(b(0.5, 1.0) == Approx(std::exp(-1.0 / 3.0)).epsilon(1e-15));
    CHECK(b(0.5, 1.0) == Approx(0.716531).epsilon(1e-6));
    CHECK(b(3.0, 7.0) == 0.0);
}

TEST_CASE("make_bump: support must stay in t > 0") {
    CHECK_THROWS_AS(make_bump(0.0, 0.5, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(make_bump(0.0, 1.0, 0.0, 0.5), DomainError);
    CHECK_THROWS_AS(make_bump(0.0, 1.0, 1.0, -0.5), DomainError);
    CHECK_NOTHROW(make_bump(0.0, 0.50001, 1.0, 0.5));
}

TEST_CASE("make_bump: derivatives match central differences") {
    const BumpTestFn b = make_bump(0.3, 1.2, 0.8, 0.6);
    const double h = 1e-6;
    for (auto [x, t] : {std::pair{0.3, 1.2}, std::pair{0.6, 1.0}, std::pair{0.0, 1.5}, std::pair{0.9, 1.25}}) {
        CHECK(b.dx(x, t) == Approx((b(x + h, t) - b(x - h, t)) / (2 * h)).epsilon(1e-6).scale(1.0));
        CHECK(b.dt(x, t) == Approx((b(x, t + h) - b(x, t - h)) / (2 * h)).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("weak_residual: exact solutions vanish") {
    std::mt19937_64 rng(51);
    struct Case {
        const char* name;
        RiemannSolution sol;
    };
    const std::vector<Case> cases{
        {"transport delta", solve_transport({1, 2}, {-1, 2})},
        {"transport vacuum", solve_transport({-1, 1}, {1, 1})},
        {"two shocks eps2=0", solve({1, 1}, {-1, 1}, {1, 0})},
        {"two rarefactions eps2=0", solve({0, 1}, {1, 1}, {1, 0})},
        {"two shocks", solve({1, 1}, {-1, 1}, {0.3, 0.3})},
        {"two rarefactions", solve({-0.5, 1}, {0.5, 1.5}, {0.3, 0.3})},
        {"shock and rarefaction", solve({0, 1}, {0, 3}, {0.5, 0.2})},
        {"one-parameter delta", solve_single_param({2, 1}, {0, 1}, 0.5)},
        {"contact and rarefaction", solve_single_param({0, 2}, {1, std::exp(2.0)}, 0.5)},
        {"contact and shock", solve_single_param({0, 2}, {-0.5, 1}, 0.5)},
    };
    for (const Case& c : cases) {
        INFO(c.name);
        const std::vector<BumpTestFn> bumps = random_bumps(rng, -1.0, 1.0, 10);
        const WeakReport rep = weak_residual(c.sol, bumps);
        REQUIRE(rep.bumps.size() == 10);
        CHECK(rep.max_u <= 1e-8);
        CHECK(rep.max_v <= 1e-8);
    }
}

TEST_CASE("weak_residual: bumps straddling the delta line") {
    const RiemannSolution sol = solve_transport({1, 2}, {-1, 2});
    const std::vector<BumpTestFn> bumps{make_bump(0.0, 1.0, 1.0, 0.5), make_bump(0.1, 2.0, 0.3, 1.0),
                                        make_bump(-0.2, 0.5, 0.5, 0.4)};
    const WeakReport rep = weak_residual(sol, bumps);
    CHECK(rep.max_u <= 1e-8);
    CHECK(rep.max_v <= 1e-8);
    // The same check through the lone-delta entry point.
    const WeakReport lone = weak_residual(first_delta(sol), {0, 0}, bumps);
    CHECK(lone.max_v <= 1e-8);
}

TEST_CASE("weak_residual: a misplaced delta leaves a residual linear in the error") {
    const RiemannSolution sol = solve_transport({1, 2}, {-1, 2});
    const std::vector<BumpTestFn> bumps{make_bump(0.3, 1.0, 1.0, 0.5)};
    auto residual_at = [&](double shift) {
        DeltaShock d = first_delta(sol);
        d.sigma += shift;
        return weak_residual(d, {0, 0}, bumps).max_v;
    };
    const double r1 = residual_at(0.01);
    const double r2 = residual_at(0.02);
    CHECK(r1 > 0.0);
    CHECK(r2 / r1 == Approx(2.0).epsilon(0.2));
}

TEST_CASE("weak_residual: perturbing any delta parameter is detected") {
    const std::vector<BumpTestFn> bumps{make_bump(0.3, 1.0, 1.0, 0.5), make_bump(-0.2, 1.2, 0.7, 0.6)};
    const WeakOptions opt;
    struct System {
        DeltaShock delta;
        FluxParams params;
    };
    const std::vector<System> systems{{first_delta(solve_transport({1, 2}, {-1, 2})), {0, 0}},
                                      {first_delta(solve_single_param({2, 1}, {0, 1}, 0.5)), {0, 0.5}}};
    for (const System& s : systems) {
        for (double delta : {1e-3, -1e-3, 1e-2}) {
            DeltaShock a = s.delta;
            a.sigma += delta;
            DeltaShock b = s.delta;
            b.u_delta += delta;
            DeltaShock c = s.delta;
            c.strength_rate += delta;
            for (const DeltaShock& d : {a, b, c}) {
                const WeakReport rep = weak_residual(d, s.params, bumps);
                CHECK(std::fmax(rep.max_u, rep.max_v) > 10.0 * opt.report_tol);
            }
        }
    }
}

TEST_CASE("weak_residual: misplaced classical shock is detected") {
    RiemannSolution sol = solve({1, 1}, {-1, 1}, {1, 0});
    std::get<Shock>(sol.waves[0]).sigma -= 1e-3;
    const std::vector<BumpTestFn> bumps{make_bump(-1.0, 1.0, 0.6, 0.5)};
    const WeakReport rep = weak_residual(sol, bumps);
    CHECK(std::fmax(rep.max_u, rep.max_v) > 1e-6);
}

TEST_CASE("weak_residual: bumps away from every wave give zero") {
    const RiemannSolution sol = solve({1, 1}, {-1, 1}, {1, 0});
    const std::vector<BumpTestFn> bumps{make_bump(-5.0, 1.0, 0.5, 0.5), make_bump(5.0, 1.0, 0.5, 0.5)};
    const WeakReport rep = weak_residual(sol, bumps);
    CHECK(rep.max_u <= 1e-12);
    CHECK(rep.max_v <= 1e-12);
}

TEST_CASE("weak_residual: unreachable reporting tolerance raises with a trace") {
    const RiemannSolution sol = solve({0, 1}, {1, 1}, {0.3, 0.3});
    const std::vector<BumpTestFn> bumps{make_bump(0.0, 1.0, 1.0, 0.5)};
    WeakOptions opt;
    opt.max_depth = 0;
    opt.report_tol = 1e-300;
    try {
        weak_residual(sol, bumps, opt);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK_FALSE(e.trace().empty());
    }
}
