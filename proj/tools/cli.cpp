#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "brio/brio.hpp"

namespace brio::cli {

namespace {

struct StateFlags {
    double ul = 0.0, vl = 0.0, ur = 0.0, vr = 0.0;

    void add(CLI::App* app, bool required = true) {
        auto* a = app->add_option("--ul", ul, "left velocity");
        auto* b = app->add_option("--vl", vl, "left density");
        auto* c = app->add_option("--ur", ur, "right velocity");
        auto* d = app->add_option("--vr", vr, "right density");
        if (required)
            for (auto* o : {a, b, c, d}) o->required();
    }
    State left() const { return {ul, vl}; }
    State right() const { return {ur, vr}; }
};

struct Common {
    std::string out_path;
    std::optional<double> tol;
};

std::optional<double> env_tolerance() {
    const char* raw = std::getenv("BRIO_RIEMANN_TOL");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    const double tol = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(tol > 0.0) || !std::isfinite(tol))
        throw DomainError(std::string("BRIO_RIEMANN_TOL must be a positive number, got '") + raw + "'");
    return tol;
}

SolverOptions solver_options(const Common& c) {
    SolverOptions opt;
    if (const auto env = env_tolerance()) opt.tol = *env;
    if (c.tol) {
        if (!(*c.tol > 0.0)) throw DomainError("--tol must be positive");
        opt.tol = *c.tol;
    }
    return opt;
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file " + c.out_path);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 1) throw DomainError("sample count must be positive");
    if (!(a <= b)) throw DomainError("sample range must be increasing");
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return xs;
}

// Bumps scattered over the region a fan bounded by |xi| <= spread occupies.
std::vector<BumpTestFn> random_bumps(int count, unsigned seed, double spread) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<BumpTestFn> out;
    for (int k = 0; k < count; ++k) {
        const double t0 = 0.6 + 1.0 * unit(rng);
        const double rt = 0.1 + (std::min(0.5, t0 - 0.1) - 0.1) * unit(rng);
        const double x0 = (2.0 * unit(rng) - 1.0) * spread * t0;
        const double rx = 0.2 + 0.8 * unit(rng);
        out.push_back(make_bump(x0, t0, rx, rt));
    }
    return out;
}

double fan_spread(const RiemannSolution& sol) {
    double s = 1.0;
    for (const Wave& w : sol.waves) {
        const SpeedInterval iv = speed_interval(w);
        s = std::max({s, std::fabs(iv.lo), std::fabs(iv.hi)});
    }
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Riemann solutions and flux-approximation limits for the perturbed Brio system",
                 "brio-riemann"};
    app.require_subcommand(1);

    Common common;
    StateFlags st;
    FluxParams params;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", common.out_path, "write data to this file instead of stdout");
        sub->add_option("--tol", common.tol, "root-finding tolerance (overrides BRIO_RIEMANN_TOL)");
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--eps1", params.eps1, "flux coefficient eps1")->capture_default_str();
        sub->add_option("--eps2", params.eps2, "flux coefficient eps2")->capture_default_str();
    };

    auto* solve_cmd = app.add_subcommand("solve", "exact Riemann solution as JSON");
    st.add(solve_cmd);
    add_params(solve_cmd);
    add_common(solve_cmd);

    std::string from_json;
    double xi_min = -2.0, xi_max = 2.0;
    int n_points = 81;
    std::optional<double> t_sample;
    double x_min = -2.0, x_max = 2.0;
    auto* sample_cmd = app.add_subcommand("sample", "CSV of the solution over a range of xi = x/t");
    st.add(sample_cmd, false);
    add_params(sample_cmd);
    add_common(sample_cmd);
    sample_cmd->add_option("--from-json", from_json, "solution document written by `solve`");
    sample_cmd->add_option("--xi-min", xi_min)->capture_default_str();
    sample_cmd->add_option("--xi-max", xi_max)->capture_default_str();
    sample_cmd->add_option("-n,--points", n_points)->capture_default_str();
    sample_cmd->add_option("--t", t_sample, "sample x in [x-min, x-max] at this time instead");
    sample_cmd->add_option("--x-min", x_min)->capture_default_str();
    sample_cmd->add_option("--x-max", x_max)->capture_default_str();

    Schedule sched;
    std::string format = "csv";
    std::string summary_path;
    auto add_schedule = [&](CLI::App* sub) {
        sub->add_option("--start", sched.eps_start)->capture_default_str();
        sub->add_option("--ratio", sched.ratio)->capture_default_str();
        sub->add_option("--count", sched.count)->capture_default_str();
        sub->add_option("--floor", sched.floor)->capture_default_str();
        sub->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
        sub->add_option("--summary", summary_path, "also write the JSON summary to this file");
    };
    auto* both_cmd = app.add_subcommand("sweep-both", "sweep eps1 = eps2 -> 0");
    st.add(both_cmd);
    add_schedule(both_cmd);
    add_common(both_cmd);
    double fixed_eps2 = 0.0;
    auto* eps1_cmd = app.add_subcommand("sweep-eps1", "sweep eps1 -> 0 with eps2 fixed");
    st.add(eps1_cmd);
    add_schedule(eps1_cmd);
    add_common(eps1_cmd);
    eps1_cmd->add_option("--eps2", fixed_eps2, "fixed eps2")->required();

    int bump_count = 10;
    unsigned seed = 1;
    WeakOptions weak;
    auto* verify_cmd = app.add_subcommand("verify", "weak-form residuals against random bump test functions");
    st.add(verify_cmd, false);
    add_params(verify_cmd);
    add_common(verify_cmd);
    verify_cmd->add_option("--from-json", from_json, "solution document written by `solve`");
    verify_cmd->add_option("--bumps", bump_count)->capture_default_str();
    verify_cmd->add_option("--seed", seed)->capture_default_str();
    verify_cmd->add_option("--quad-tol", weak.quad_tol)->capture_default_str();
    verify_cmd->add_option("--report-tol", weak.report_tol)->capture_default_str();

    Grid grid;
    std::string snapshot_path;
    auto* fv_cmd = app.add_subcommand("fv", "finite-volume run compared with the exact solution");
    st.add(fv_cmd);
    add_params(fv_cmd);
    add_common(fv_cmd);
    fv_cmd->add_option("--cells", grid.n_cells)->capture_default_str();
    fv_cmd->add_option("--cfl", grid.cfl)->capture_default_str();
    fv_cmd->add_option("--t-end", grid.t_end)->capture_default_str();
    fv_cmd->add_option("--x-min", grid.x_min)->capture_default_str();
    fv_cmd->add_option("--x-max", grid.x_max)->capture_default_str();
    fv_cmd->add_option("--snapshot", snapshot_path, "write cell averages as CSV");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return invalid_input;
    }

    try {
        auto load_or_solve = [&](CLI::App* sub) {
            if (!from_json.empty()) return io::solution_from_json(read_file(from_json));
            for (const char* flag : {"--ul", "--vl", "--ur", "--vr"})
                if (sub->count(flag) == 0)
                    throw DomainError(std::string("missing ") + flag + " (or pass --from-json)");
            return solve(st.left(), st.right(), params, solver_options(common));
        };

        if (solve_cmd->parsed()) {
            emit(common, out, io::solution_json(solve(st.left(), st.right(), params, solver_options(common))));
        } else if (sample_cmd->parsed()) {
            const RiemannSolution sol = load_or_solve(sample_cmd);
            if (t_sample) emit(common, out, io::sample_csv_xt(sol, linspace(x_min, x_max, n_points), *t_sample));
            else emit(common, out, io::sample_csv(sol, linspace(xi_min, xi_max, n_points)));
        } else if (both_cmd->parsed() || eps1_cmd->parsed()) {
            const bool both = both_cmd->parsed();
            sched.mode = both ? SweepMode::BothEqual : SweepMode::Eps1Only;
            const SolverOptions opt = solver_options(common);
            const auto records = both ? sweep_both(st.left(), st.right(), sched, opt)
                                      : sweep_eps1(st.left(), st.right(), fixed_eps2, sched, opt);
            const io::SweepContext ctx{sched.mode, st.left(), st.right(), fixed_eps2};
            emit(common, out, format == "csv" ? io::sweep_csv(records) : io::sweep_json(records, ctx));
            if (!summary_path.empty()) {
                std::ofstream f(summary_path, std::ios::binary);
                if (!f) throw DomainError("cannot open summary file " + summary_path);
                f << io::sweep_json(records, ctx);
            }
        } else if (verify_cmd->parsed()) {
            const RiemannSolution sol = load_or_solve(verify_cmd);
            if (bump_count < 1) throw DomainError("--bumps must be positive");
            const auto bumps = random_bumps(bump_count, seed, fan_spread(sol));
            emit(common, out, io::weak_json(weak_residual(sol, bumps, weak), weak));
        } else if (fv_cmd->parsed()) {
            const FvRun run = lax_friedrichs_run(st.left(), st.right(), params, grid);
            io::FvSummary s{st.left(), st.right(), params, &run, std::nullopt, {}};
            try {
                const RiemannSolution exact = solve(st.left(), st.right(), params, solver_options(common));
                s.l1 = l1_error(run.field, exact, run.field.t);
            } catch (const UnsupportedCaseError& e) {
                s.l1_note = e.what();
            }
            if (!snapshot_path.empty()) {
                std::ofstream f(snapshot_path, std::ios::binary);
                if (!f) throw DomainError("cannot open snapshot file " + snapshot_path);
                f << io::field_csv(run.field);
            }
            for (const std::string& w : run.warnings) err << "warning: " << w << "\n";
            emit(common, out, io::fv_json(s));
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const UnsupportedCaseError& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const QuadratureError& e) {
        err << "quadrature failure: " << e.what() << "\n";
        for (const std::string& line : e.trace()) err << "  " << line << "\n";
        return solver_failure;
    } catch (const SolverError& e) {
        err << "solver failure: " << e.what() << "\n";
        return solver_failure;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return solver_failure;
    }
    return ok;
}

}  // namespace brio::cli
