// nsexpander: self-similar expanding profiles of the compressible
// Navier-Stokes equations from the command line.
//
//   nsexpander solve --case smooth --theta0 1e-3 --out profile.csv --summary summary.json
//   nsexpander sweep --case smooth --sweep theta0=1e-4,2e-4,4e-4 --out table.csv
//
// Exit codes: 0 success, 2 invalid input, 3 solver failure, 4 I/O error.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "nsexpander/cli/io.hpp"
#include "nsexpander/cli/options.hpp"

namespace fs = std::filesystem;
using namespace nsexpander;
using namespace nsexpander::cli;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct Common {
    std::map<std::string, std::string> flags;  // as typed on the command line
    std::string config_file, out, summary, plots, sweep;
};

void add_problem_flags(CLI::App* sub, Common& c) {
    static const std::map<std::string, std::string> help = {
        {"case", "smooth | cavitating"},
        {"d", "space dimension (>= 3)"},
        {"mu", "shear viscosity"},
        {"lambda", "second Lame coefficient"},
        {"cv", "heat capacity C_V"},
        {"kappa", "thermal conductivity"},
        {"r-gas", "gas constant R"},
        {"p0", "density at the origin (smooth)"},
        {"p-delta", "density at the anchor radius (cavitating)"},
        {"delta", "anchor radius (cavitating)"},
        {"theta0", "temperature at the origin"},
        {"alpha", "velocity slope at the origin (cavitating)"},
        {"rmax", "outer radius of the grid"},
        {"rmin", "inner radius of the grid (cavitating)"},
        {"cells", "number of grid cells"},
        {"grading", "fraction of the grid map spent in the graded inner zone"},
        {"tol", "Picard stopping tolerance"},
        {"max-iter", "maximum number of Picard sweeps"},
        {"damping", "relaxation factor in (0, 1]"},
    };
    for (const auto& key : option_keys()) sub->add_option("--" + key, c.flags[key], help.at(key));
    sub->add_option("--config", c.config_file, "flat key=value file; flags override it");
    sub->add_option("--out", c.out, "output CSV path");
    sub->add_option("--summary", c.summary, "output JSON summary path");
}

std::map<std::string, std::string> gather(CLI::App* sub, const Common& c) {
    std::map<std::string, std::string> kv;
    if (!c.config_file.empty()) kv = parse_key_values(read_file(c.config_file));
    for (const auto& key : option_keys())
        if (sub->count("--" + key) > 0) kv[key] = c.flags.at(key);
    return kv;
}

/// Validation failures go to stderr; returns false if any check failed.
bool validate(const Problem& pr, const std::string& label = {}) {
    const auto a = validate_params(pr.params, pr.boundary);
    const auto b = validate_config(pr.config, pr.boundary);
    if (a.passed() && b.passed()) return true;
    const std::string prefix = label.empty() ? "" : label + ": ";
    if (!a.passed()) std::cerr << "nsexpander: " << prefix << "invalid parameters: " << a.summary() << "\n";
    if (!b.passed()) std::cerr << "nsexpander: " << prefix << "invalid configuration: " << b.summary() << "\n";
    return false;
}

int run_solve(CLI::App* sub, const Common& c) {
    Problem pr;
    try {
        pr = make_problem(gather(sub, c));
    } catch (const InputError& e) {
        std::cerr << "nsexpander: " << e.what() << "\n";
        return kExitInvalid;
    }
    if (!validate(pr)) return kExitInvalid;

    std::optional<RunReport> rep;
    try {
        rep = run(pr);
    } catch (const ConvergenceError& e) {
        std::cerr << "nsexpander: no convergence: " << e.what() << "\n";
        return kExitSolver;
    } catch (const SolverError& e) {
        std::cerr << "nsexpander: solver failed: " << e.what() << "\n";
        return kExitSolver;
    }

    try {
        if (!c.out.empty()) emit_profile_csv(rep->solution.profile, c.out);
        if (!c.summary.empty()) emit_summary_json(*rep, c.summary);
        if (!c.plots.empty()) emit_plots_svg(*rep, c.plots);
        if (c.out.empty() && c.summary.empty()) std::cout << summary_json(*rep);
    } catch (const IoError& e) {
        std::cerr << "nsexpander: " << e.what() << "\n";
        return kExitIo;
    }
    // Run metadata stays out of the data files.
    double wall = 0;
    for (double s : rep->solution.trace.wall_seconds) wall += s;
    std::fprintf(stderr, "nsexpander: %s case converged in %zu sweeps (%.3f s)\n",
                 to_string(case_of(pr.boundary)), rep->solution.trace.iterations(), wall);
    return 0;
}

unsigned thread_budget(std::size_t jobs) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("NSEXPANDER_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) n = static_cast<unsigned>(v);
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

int run_sweep(CLI::App* sub, const Common& c) {
    std::map<std::string, std::string> kv;
    SweepAxis axis;
    try {
        kv = gather(sub, c);
        axis = sweep_axis(kv, c.sweep);
    } catch (const InputError& e) {
        std::cerr << "nsexpander: " << e.what() << "\n";
        return kExitInvalid;
    }

    std::vector<Problem> problems;
    bool ok = true;
    for (const auto& v : axis.values) {
        auto point = kv;
        point[axis.key] = v;
        try {
            problems.push_back(make_problem(point));
        } catch (const InputError& e) {
            std::cerr << "nsexpander: " << axis.key << "=" << v << ": " << e.what() << "\n";
            return kExitInvalid;
        }
        ok = validate(problems.back(), axis.key + "=" + v) && ok;
    }
    if (!ok) return kExitInvalid;

    // Independent solves; results land in their own slot, so the output does
    // not depend on scheduling.
    std::vector<SweepRow> rows(problems.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < problems.size();) rows[i] = sweep_point(problems[i], axis.values[i]);
    };
    std::vector<std::thread> pool;
    const unsigned threads = thread_budget(problems.size());
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    try {
        const auto table = sweep_table(axis.key, rows);
        if (!c.out.empty())
            write_atomic(c.out, table);
        else
            std::cout << table;
        if (!c.summary.empty()) write_atomic(c.summary, sweep_summary_json(axis.key, rows));
    } catch (const IoError& e) {
        std::cerr << "nsexpander: " << e.what() << "\n";
        return kExitIo;
    }
    const bool all = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.report.has_value(); });
    return all ? 0 : kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-similar expanding profiles of the compressible Navier-Stokes equations"};
    app.require_subcommand(1);
    Common solve_opts, sweep_opts;

    auto* solve = app.add_subcommand("solve", "solve one configuration and write profile, summary and plots");
    add_problem_flags(solve, solve_opts);
    solve->add_option("--plots", solve_opts.plots, "directory for SVG plots");

    auto* sweep = app.add_subcommand("sweep", "solve a one-parameter family; one table row per value");
    add_problem_flags(sweep, sweep_opts);
    sweep->add_option("--sweep", sweep_opts.sweep, "key=v1,v2,... (or give one flag a comma-separated list)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*solve) return run_solve(solve, solve_opts);
        return run_sweep(sweep, sweep_opts);
    } catch (const IoError& e) {
        std::cerr << "nsexpander: " << e.what() << "\n";
        return kExitIo;
    }
}
