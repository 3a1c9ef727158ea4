#include "brio/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace brio::io {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ordered pair(const State& s) { return ordered::array({s.u, s.v}); }

State state_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw DomainError("state must be a [u, v] pair of numbers");
    return {j[0].get<double>(), j[1].get<double>()};
}

double number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw DomainError(std::string("missing numeric field '") + key + "'");
    return j.at(key).get<double>();
}

WaveFamily family_from(const json& j) {
    const double f = number(j, "family");
    if (f == 1.0) return WaveFamily::Back;
    if (f == 2.0) return WaveFamily::Forward;
    throw DomainError("wave family must be 1 or 2");
}

ordered wave_json(const Wave& w) {
    return std::visit(
        overloaded{
            [](const Rarefaction& r) {
                return ordered{{"type", "rarefaction"}, {"family", static_cast<int>(r.family)},
                               {"left", pair(r.left)}, {"right", pair(r.right)},
                               {"head", r.head}, {"tail", r.tail}};
            },
            [](const Shock& s) {
                return ordered{{"type", "shock"}, {"family", static_cast<int>(s.family)},
                               {"left", pair(s.left)}, {"right", pair(s.right)}, {"sigma", s.sigma}};
            },
            [](const Contact& c) {
                return ordered{{"type", "contact"}, {"speed", c.speed}, {"left", pair(c.left)},
                               {"right", pair(c.right)}};
            },
            [](const DeltaShock& d) {
                return ordered{{"type", "delta_shock"}, {"sigma", d.sigma}, {"u_delta", d.u_delta},
                               {"strength_rate", d.strength_rate}, {"left", pair(d.left)},
                               {"right", pair(d.right)}};
            },
            [](const VacuumFan& f) { return ordered{{"type", "vacuum"}, {"from", f.from}, {"to", f.to}}; },
        },
        w);
}

Wave wave_from(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw DomainError("wave entry needs a string 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type == "rarefaction")
        return Rarefaction{family_from(j), state_from(j.at("left")), state_from(j.at("right")),
                           number(j, "head"), number(j, "tail")};
    if (type == "shock")
        return Shock{family_from(j), state_from(j.at("left")), state_from(j.at("right")), number(j, "sigma")};
    if (type == "contact")
        return Contact{number(j, "speed"), state_from(j.at("left")), state_from(j.at("right"))};
    if (type == "delta_shock")
        return DeltaShock{state_from(j.at("left")), state_from(j.at("right")), number(j, "sigma"),
                          number(j, "u_delta"), number(j, "strength_rate")};
    if (type == "vacuum") return VacuumFan{number(j, "from"), number(j, "to")};
    throw DomainError("unknown wave type '" + type + "'");
}

ordered delta_json(const DeltaShock& d) {
    return ordered{{"type", "delta_shock"}, {"sigma", d.sigma}, {"u_delta", d.u_delta},
                   {"strength_rate", d.strength_rate}};
}

ordered estimate_json(const LimitEstimate& e) {
    ordered o{{"limit", e.limit}};
    o["rate"] = e.rate ? ordered(*e.rate) : ordered(nullptr);
    return o;
}

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

void append_row(std::string& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const std::string& c : cells) {
        if (!first) out += ',';
        out += c;
        first = false;
    }
    out += '\n';
}

std::string sample_cells(const RiemannSolution& sol, double xi) {
    const SampleResult r = sample(sol, xi);
    return format_double(r.state.u) + "," + format_double(r.state.v) + "," + (r.delta ? "1" : "0") + "," +
           format_double(r.delta ? r.delta->strength_rate : 0.0);
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string solution_json(const RiemannSolution& sol) {
    ordered j;
    j["schema"] = schema;
    j["system"] = to_string(system_of(sol.params));
    j["params"] = {{"eps1", sol.params.eps1}, {"eps2", sol.params.eps2}};
    j["left"] = pair(sol.left);
    j["right"] = pair(sol.right);
    j["region"] = sol.region ? ordered(to_string(*sol.region)) : ordered(nullptr);
    j["intermediate"] = sol.intermediate ? pair(*sol.intermediate) : ordered(nullptr);
    ordered speeds = ordered::array();
    ordered waves = ordered::array();
    for (const Wave& w : sol.waves) {
        const SpeedInterval iv = speed_interval(w);
        speeds.push_back(iv.lo);
        if (iv.hi != iv.lo || std::holds_alternative<Rarefaction>(w) || std::holds_alternative<VacuumFan>(w))
            speeds.push_back(iv.hi);
        waves.push_back(wave_json(w));
    }
    j["speeds"] = speeds;
    j["waves"] = waves;
    j["notes"] = sol.notes;
    return dump(j);
}

RiemannSolution solution_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("schema", std::string()) != schema)
        throw DomainError("expected a solution document with schema " + std::string(schema));
    try {
        RiemannSolution sol;
        const json& params = j.at("params");
        sol.params = {number(params, "eps1"), number(params, "eps2")};
        validate(sol.params);
        sol.left = state_from(j.at("left"));
        sol.right = state_from(j.at("right"));
        if (j.contains("region") && !j.at("region").is_null()) {
            const auto r = region4_from_string(j.at("region").get<std::string>());
            if (!r) throw DomainError("unknown region");
            sol.region = *r;
        }
        if (j.contains("intermediate") && !j.at("intermediate").is_null())
            sol.intermediate = state_from(j.at("intermediate"));
        for (const json& w : j.at("waves")) sol.waves.push_back(wave_from(w));
        if (j.contains("notes"))
            for (const json& n : j.at("notes")) sol.notes.push_back(n.get<std::string>());
        return sol;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed solution document: ") + e.what());
    }
}

std::string sample_csv(const RiemannSolution& sol, std::span<const double> xis) {
    std::string out = "xi,u,v,delta,strength_rate\n";
    for (double xi : xis) out += format_double(xi) + "," + sample_cells(sol, xi) + "\n";
    return out;
}

std::string sample_csv_xt(const RiemannSolution& sol, std::span<const double> xs, double t) {
    if (!(t > 0.0)) throw DomainError("sampling time must be positive");
    std::string out = "x,t,xi,u,v,delta,strength_rate\n";
    for (double x : xs) {
        const double xi = x / t;
        out += format_double(x) + "," + format_double(t) + "," + format_double(xi) + "," +
               sample_cells(sol, xi) + "\n";
    }
    return out;
}

std::string sweep_csv(std::span<const SweepRecord> records) {
    std::string out = "eps1,eps2,v_star,u_star,sigma1,sigma2,strength_surrogate,scaled_vstar,region\n";
    for (const SweepRecord& r : records)
        append_row(out, {format_double(r.eps1), format_double(r.eps2), format_double(r.v_star),
                         format_double(r.u_star), format_double(r.sigma1), format_double(r.sigma2),
                         format_double(r.strength_surrogate), format_double(r.scaled_vstar),
                         std::string(to_string(r.region))});
    return out;
}

std::string sweep_json(std::span<const SweepRecord> records, const SweepContext& ctx) {
    ordered j;
    j["schema"] = schema;
    j["mode"] = ctx.mode == SweepMode::BothEqual ? "both" : "eps1";
    j["left"] = pair(ctx.left);
    j["right"] = pair(ctx.right);
    if (ctx.mode == SweepMode::Eps1Only) j["eps2"] = ctx.eps2;

    ordered rows = ordered::array();
    for (const SweepRecord& r : records) {
        rows.push_back(ordered{{"eps1", r.eps1},
                               {"eps2", r.eps2},
                               {"v_star", r.v_star},
                               {"log_v_star", r.log_v_star},
                               {"u_star", r.u_star},
                               {"sigma1", r.sigma1},
                               {"sigma2", r.sigma2},
                               {"strength_surrogate", r.strength_surrogate},
                               {"scaled_vstar", r.scaled_vstar},
                               {"scaled_vstar_printed", 2.0 * r.scaled_vstar},
                               {"region", to_string(r.region)},
                               {"fan_edges", r.fan_edges}});
    }
    j["records"] = rows;

    if (records.size() >= 3) {
        const std::pair<const char*, SweepField> fields[] = {
            {"v_star", [](const SweepRecord& r) { return r.v_star; }},
            {"log_v_star", [](const SweepRecord& r) { return r.log_v_star; }},
            {"u_star", [](const SweepRecord& r) { return r.u_star; }},
            {"sigma1", [](const SweepRecord& r) { return r.sigma1; }},
            {"sigma2", [](const SweepRecord& r) { return r.sigma2; }},
            {"strength_surrogate", [](const SweepRecord& r) { return r.strength_surrogate; }},
            {"scaled_vstar", [](const SweepRecord& r) { return r.scaled_vstar; }},
        };
        ordered est;
        for (const auto& [name, field] : fields) est[name] = estimate_json(estimate_limit(records, field));
        j["estimates"] = est;
    }

    ordered predicted;
    try {
        if (ctx.mode == SweepMode::BothEqual) {
            predicted = std::visit(overloaded{[](const DeltaShock& d) { return delta_json(d); },
                                              [](const VacuumLimit& v) {
                                                  return ordered{{"type", "vacuum"}, {"from", v.from}, {"to", v.to}};
                                              }},
                                   predicted_limit_both(ctx.left, ctx.right));
        } else {
            predicted = std::visit(
                overloaded{[](const DeltaShock& d) { return delta_json(d); },
                           [](const ContactRarefactionLimit& c) {
                               return ordered{{"type", "contact_rarefaction"},
                                              {"contact_speed", c.contact_speed},
                                              {"intermediate", pair(c.intermediate)},
                                              {"fan", ordered::array({c.fan.head, c.fan.tail})}};
                           }},
                predicted_limit_eps1(ctx.left, ctx.right, ctx.eps2));
        }
    } catch (const UnsupportedCaseError& e) {
        predicted = ordered{{"type", "unsupported"}, {"reason", e.what()}};
    }
    j["predicted"] = predicted;

    if (!records.empty() && ctx.left.u > ctx.right.u) {
        const SweepRecord& last = records.back();
        const double target = 0.5 * (ctx.left.u - ctx.right.u);
        j["scaled_density_constant"] = ordered{{"target", target},
                                               {"sqrt_eps1_v_star", last.scaled_vstar},
                                               {"two_sqrt_eps1_v_star", 2.0 * last.scaled_vstar}};
    }
    return dump(j);
}

std::string weak_json(const WeakReport& report, const WeakOptions& opt) {
    ordered j;
    j["schema"] = schema;
    j["quad_tol"] = opt.quad_tol;
    j["report_tol"] = opt.report_tol;
    j["max_residual"] = {{"u", report.max_u}, {"v", report.max_v}};
    ordered bumps = ordered::array();
    for (const BumpResidual& b : report.bumps)
        bumps.push_back(ordered{{"center", ordered::array({b.bump.x0, b.bump.t0})},
                                {"radii", ordered::array({b.bump.rx, b.bump.rt})},
                                {"residual", {{"u", b.r_u}, {"v", b.r_v}}},
                                {"error_estimate", {{"u", b.err_u}, {"v", b.err_v}}}});
    j["bumps"] = bumps;
    return dump(j);
}

std::string field_csv(const CellField& field) {
    std::string out = "x,u,v\n";
    for (int i = 0; i < field.grid.n_cells; ++i)
        append_row(out, {format_double(field.grid.center(i)), format_double(field.u[static_cast<std::size_t>(i)]),
                         format_double(field.v[static_cast<std::size_t>(i)])});
    return out;
}

std::string fv_json(const FvSummary& s) {
    if (!s.run) throw DomainError("fv summary without a run");
    const FvRun& r = *s.run;
    const Grid& g = r.field.grid;
    ordered j;
    j["schema"] = schema;
    j["scheme"] = "first-order finite volume, local Lax-Friedrichs (Rusanov) flux";
    j["params"] = {{"eps1", s.params.eps1}, {"eps2", s.params.eps2}};
    j["left"] = pair(s.left);
    j["right"] = pair(s.right);
    j["grid"] = {{"x_min", g.x_min}, {"x_max", g.x_max}, {"n_cells", g.n_cells}, {"cfl", g.cfl}, {"t_end", g.t_end}};
    j["t"] = r.field.t;
    j["steps"] = r.steps;
    j["max_cfl_used"] = r.max_cfl_used;
    j["mass"] = {{"u", {{"initial", r.mass_u0}, {"final", r.mass_u}, {"inflow", r.inflow_u}, {"drift", r.drift_u()}}},
                 {"v", {{"initial", r.mass_v0}, {"final", r.mass_v}, {"inflow", r.inflow_v}, {"drift", r.drift_v()}}}};
    j["delta_indicator"] = delta_indicator(r.field);
    j["l1_error"] = s.l1 ? ordered(*s.l1) : ordered(nullptr);
    if (!s.l1_note.empty()) j["l1_note"] = s.l1_note;
    j["warnings"] = r.warnings;
    return dump(j);
}

}  // namespace brio::io
