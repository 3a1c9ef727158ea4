#include <doctest.h>

#include <cmath>
#include <random>
#include <variant>

#include "brio/brio_solver.hpp"
#include "brio/limit_models.hpp"

using namespace brio;
using doctest::Approx;

namespace {

const DeltaShock& only_delta(const RiemannSolution& sol) {
    REQUIRE(sol.waves.size() == 1);
    return std::get<DeltaShock>(sol.waves[0]);
}

}  // namespace

TEST_CASE("solve_transport: delta shock") {
    const RiemannSolution sol = solve_transport({1, 2}, {-1, 2});
    const DeltaShock& d = only_delta(sol);
    CHECK(d.sigma == 0.0);
    CHECK(d.u_delta == 0.0);
    CHECK(d.strength_rate == 4.0);
    CHECK_FALSE(sol.intermediate.has_value());
    const SampleResult on = sample(sol, 0.0);
    REQUIRE(on.delta.has_value());
    CHECK(on.delta->strength_rate == 4.0);
    CHECK(sample(sol, -0.1).state == State{1, 2});
    CHECK(sample(sol, 0.1).state == State{-1, 2});
}

TEST_CASE("solve_transport: vacuum between contacts") {
    const RiemannSolution sol = solve_transport({-1, 1}, {1, 1});
    REQUIRE(sol.waves.size() == 3);
    CHECK(std::get<Contact>(sol.waves[0]).speed == -1.0);
    const auto& vac = std::get<VacuumFan>(sol.waves[1]);
    CHECK(vac.from == -1.0);
    CHECK(vac.to == 1.0);
    CHECK(std::get<Contact>(sol.waves[2]).speed == 1.0);
    for (double xi : {-0.9, -0.25, 0.0, 0.6}) {
        const State s = sample(sol, xi).state;
        CHECK(s.u == xi);
        CHECK(s.v == 0.0);
    }
    CHECK(sample(sol, -1.5).state == State{-1, 1});
    CHECK(sample(sol, 1.5).state == State{1, 1});
}

TEST_CASE("solve_transport: equal velocities give one contact") {
    const RiemannSolution a = solve_transport({0.5, 3}, {0.5, 3});
    REQUIRE(a.waves.size() == 1);
    CHECK(std::get<Contact>(a.waves[0]).speed == 0.5);
    const RiemannSolution b = solve_transport({0.5, 3}, {0.5, 1});
    REQUIRE(b.waves.size() == 1);
    CHECK(std::get<Contact>(b.waves[0]).speed == 0.5);
    CHECK_THROWS_AS(solve_transport({0, -1}, {0, 1}), DomainError);
    CHECK_NOTHROW(solve_transport({0, 0}, {1, 0}));
}

TEST_CASE("transport delta: entropy and strength identity") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> uu(-3, 3);
    std::uniform_real_distribution<double> vv(0.0, 4.0);
    for (int i = 0; i < 500; ++i) {
        State l{uu(rng), vv(rng)};
        State r{uu(rng), vv(rng)};
        if (l.u <= r.u) std::swap(l.u, r.u);
        if (l.u == r.u) continue;
        const DeltaShock& d = only_delta(solve_transport(l, r));
        REQUIRE(r.u < d.sigma);
        REQUIRE(d.sigma < l.u);
        REQUIRE(d.u_delta == d.sigma);
        if (l.v + r.v > 0.0) {
            REQUIRE(d.strength_rate > 0.0);
        }
        // sigma [v] - [uv]
        const double direct = d.sigma * (r.v - l.v) - (r.u * r.v - l.u * l.v);
        REQUIRE(d.strength_rate == Approx(direct).epsilon(1e-13).scale(1.0));
    }
}

TEST_CASE("classify_single_param") {
    CHECK(classify_single_param({0, 1}, {1, 1}, 0.5) == Region3::I);
    CHECK(classify_single_param({0, 1}, {-0.5, 1}, 0.5) == Region3::II);
    CHECK(classify_single_param({0, 1}, {-2, 1}, 0.5) == Region3::III);
    CHECK(to_string(Region3::II) == "II");
}

TEST_CASE("solve_single_param: delta shock") {
    const RiemannSolution sol = solve_single_param({2, 1}, {0, 1}, 0.5);
    const DeltaShock& d = only_delta(sol);
    CHECK(d.sigma == Approx(1.0));
    CHECK(d.u_delta == Approx(1.5));
    CHECK(d.strength_rate == Approx(2.0));
}

TEST_CASE("solve_single_param: contact then rarefaction") {
    const double e2sq = std::exp(2.0);
    const RiemannSolution sol = solve_single_param({0, 2}, {1, e2sq}, 0.5);
    REQUIRE(sol.waves.size() == 2);
    const auto& j = std::get<Contact>(sol.waves[0]);
    const auto& r = std::get<Rarefaction>(sol.waves[1]);
    CHECK(j.speed == Approx(-0.5));
    CHECK(r.head == Approx(0.0).scale(1.0));
    CHECK(r.tail == Approx(1.0));
    REQUIRE(sol.intermediate.has_value());
    CHECK(sol.intermediate->u == Approx(0.0).scale(1.0));
    CHECK(sol.intermediate->v == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("solve_single_param: contact then shock") {
    const RiemannSolution sol = solve_single_param({0, 2}, {-0.5, 1}, 0.5);
    REQUIRE(sol.waves.size() == 2);
    const auto& j = std::get<Contact>(sol.waves[0]);
    const auto& s = std::get<Shock>(sol.waves[1]);
    CHECK(j.speed == Approx(-0.5));
    CHECK(s.sigma == Approx(-0.25));
    CHECK(sol.intermediate->u == Approx(0.0).scale(1.0));
    CHECK(sol.intermediate->v == Approx(3.0).epsilon(1e-14));
    // Both jump conditions of the one-parameter system.
    const State l = *sol.intermediate;
    const State r{-0.5, 1};
    CHECK(s.sigma * (r.u - l.u) - (r.u * r.u / 2 - l.u * l.u / 2) == Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(s.sigma * (r.v - l.v) - ((r.u - 0.5) * r.v - (l.u - 0.5) * l.v) ==
          Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("solve_single_param: boundaries resolve to single waves") {
    // u_right = u_left: the rarefaction vanishes, only the contact remains.
    const RiemannSolution a = solve_single_param({0.3, 1}, {0.3, 2}, 0.5);
    REQUIRE(a.waves.size() == 1);
    CHECK(std::get<Contact>(a.waves[0]).speed == Approx(-0.2));
    // Right state on the rarefaction through the left state: no contact.
    const RiemannSolution b = solve_single_param({0, 1}, {1, std::exp(2.0)}, 0.5);
    REQUIRE(b.waves.size() == 1);
    CHECK(std::holds_alternative<Rarefaction>(b.waves[0]));
    // u_left - u_right = 2 eps2 sits on the delta boundary.
    const RiemannSolution c = solve_single_param({1, 1}, {0, 1}, 0.5);
    CHECK(std::holds_alternative<DeltaShock>(c.waves.at(0)));
    CHECK_THROWS_AS(solve_single_param({0, 0}, {1, 1}, 0.5), DomainError);
    CHECK_THROWS_AS(solve_single_param({0, 1}, {1, 1}, 0.0), DomainError);
}

TEST_CASE("one-parameter solutions: entropy, ordering and invariants") {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> uu(-2, 2);
    std::uniform_real_distribution<double> vv(0.1, 3);
    std::uniform_real_distribution<double> ee(0.05, 1.5);
    for (int i = 0; i < 500; ++i) {
        const State l{uu(rng), vv(rng)};
        const State r{uu(rng), vv(rng)};
        const double e2 = ee(rng);
        const RiemannSolution sol = solve_single_param(l, r, e2);
        INFO("l=(", l.u, ",", l.v, ") r=(", r.u, ",", r.v, ") eps2=", e2);
        switch (classify_single_param(l, r, e2)) {
            case Region3::III: {
                const DeltaShock& d = only_delta(sol);
                REQUIRE(l.u - e2 > d.sigma);
                REQUIRE(d.sigma > r.u + e2);
                REQUIRE(d.u_delta == Approx(d.sigma + e2));
                REQUIRE(d.strength_rate > 0.0);
                // Strength from the v equation: sigma [v] - [(u - eps2) v].
                const double direct = d.sigma * (r.v - l.v) - ((r.u - e2) * r.v - (l.u - e2) * l.v);
                REQUIRE(d.strength_rate == Approx(direct).epsilon(1e-12).scale(1.0));
                break;
            }
            case Region3::I: {
                REQUIRE(sol.waves.size() == 2);
                const auto& j = std::get<Contact>(sol.waves[0]);
                const auto& fan = std::get<Rarefaction>(sol.waves[1]);
                REQUIRE(j.speed == Approx(l.u - e2));
                REQUIRE(j.speed < fan.head);
                const double invariant = e2 * std::log(r.v) - r.u;
                for (int k = 1; k <= 50; ++k) {
                    const double xi = fan.head + (fan.tail - fan.head) * k / 51.0;
                    const State s = sample(sol, xi).state;
                    REQUIRE(e2 * std::log(s.v) - s.u == Approx(invariant).epsilon(1e-12).scale(1.0));
                }
                break;
            }
            case Region3::II: {
                REQUIRE(sol.waves.size() == 2);
                const auto& j = std::get<Contact>(sol.waves[0]);
                const auto& s = std::get<Shock>(sol.waves[1]);
                REQUIRE(j.speed == Approx(l.u - e2));
                REQUIRE(j.speed < s.sigma);
                const State m = *sol.intermediate;
                REQUIRE(m.u == l.u);
                REQUIRE(s.sigma * (r.v - m.v) - ((r.u - e2) * r.v - (m.u - e2) * m.v) ==
                        Approx(0.0).scale(1.0).epsilon(1e-12));
                break;
            }
        }
    }
}

TEST_CASE("eps2 = 1 gives the simplified system through the dispatcher") {
    const State l{2, 1};
    for (State r : {State{0, 1}, State{1.5, 2}, State{3, 0.5}}) {
        const RiemannSolution a = solve_single_param(l, r, 1.0);
        const RiemannSolution b = solve(l, r, {0.0, 1.0});
        REQUIRE(a.waves.size() == b.waves.size());
        for (std::size_t k = 0; k < a.waves.size(); ++k) {
            CHECK(speed_interval(a.waves[k]).lo == speed_interval(b.waves[k]).lo);
            CHECK(speed_interval(a.waves[k]).hi == speed_interval(b.waves[k]).hi);
        }
    }
    const DeltaShock& d = only_delta(solve(l, {0, 1}, {0.0, 1.0}));
    CHECK(d.sigma == 1.0);
    CHECK(d.u_delta == 2.0);
    CHECK(d.strength_rate == Approx(0.5 * (1.0 * (2.0 + 2.0) - 1.0 * (-2.0 + 2.0))));
}

TEST_CASE("grh_evolve") {
    const DeltaPosition a = grh_evolve(1.0, 2.0, 3.0);
    CHECK(a.x == 3.0);
    CHECK(a.w == 6.0);
    const DeltaPosition b = grh_evolve(0.0, 4.0, 1.0);
    CHECK(b.x == 0.0);
    CHECK(b.w == 4.0);
    const DeltaPosition c = grh_evolve(-7.5, 3.0, 0.0);
    CHECK(c.x == 0.0);
    CHECK(c.w == 0.0);
    CHECK_THROWS_AS(grh_evolve(1.0, 1.0, -1e-9), DomainError);
    // Consistent with the transport example at t = 1.
    const DeltaShock& d = only_delta(solve_transport({1, 2}, {-1, 2}));
    CHECK(grh_evolve(d.sigma, d.strength_rate, 1.0).w == 4.0);
}
