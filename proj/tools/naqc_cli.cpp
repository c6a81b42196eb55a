// naqc: command-line frontend. Subcommands evaluate the coherence-steering
// functional on a state, scan the Werner family to CSV, locate bound
// thresholds, run the verification suites, and dump MUB families.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "naqc/config.hpp"
#include "naqc/json_io.hpp"
#include "naqc/optimizer.hpp"
#include "naqc/oracle.hpp"
#include "naqc/verify.hpp"

namespace {

using namespace naqc;

OptimizeOptions optimize_options(const Config& config) {
    OptimizeOptions opt;
    opt.grid_theta = config.grid_theta;
    opt.grid_phi = config.grid_phi;
    return opt;
}

int cmd_compute(const Config& config, const std::optional<std::string>& state_path,
                const std::optional<double>& werner_p, const std::string& measure_name_arg,
                bool optimize, const std::optional<std::string>& pattern_arg) {
    if (state_path.has_value() == werner_p.has_value()) {
        std::cerr << "compute: exactly one of --state or --werner is required\n";
        return 2;
    }
    const DensityMatrix rho =
        state_path ? load_state_file(*state_path) : werner_state(*werner_p);
    const auto [da, db] = rho.dims();
    if (da != db) {
        std::cerr << "compute: subsystems must have equal dimension (got " << da << "x" << db
                  << ")\n";
        return 2;
    }

    const CoherenceMeasure measure = parse_measure(measure_name_arg, db);
    NaqcReport report;
    if (da == 2) {
        double theta = 0.0;
        double phi = 0.0;
        if (optimize) {
            const OptResult opt = optimize_s(rho, measure, optimize_options(config));
            theta = opt.theta;
            phi = opt.phi;
        }
        const MubFamily fam = rotated_qubit_mubs(theta, phi);
        report = s_report(steer(rho, fam), fam, measure);
        report.theta = theta;
        report.phi = phi;
    } else {
        if (optimize) {
            std::cerr << "compute: --optimize is only available for two-qubit states\n";
            return 2;
        }
        const MubFamily fam = mubs_prime_power(da);
        report = s_report(steer(rho, fam), fam, measure);
    }

    json out = to_json(report);
    if (pattern_arg) {
        const IndexPattern pattern = parse_pattern(*pattern_arg);
        out["selected_pattern"] = pattern_name(pattern);
        out["selected_value"] = out["patterns"][pattern_name(pattern)];
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_scan(const Config& config, const std::string& measure_name_arg, std::size_t steps,
             const std::string& out_path, bool with_patterns) {
    if (steps < 2) {
        std::cerr << "scan: --steps must be >= 2\n";
        return 2;
    }
    const CoherenceMeasure measure = parse_measure(measure_name_arg, 2);
    std::vector<double> grid(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        grid[i] = static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    const std::vector<ScanRecord> records = scan_werner(measure, grid, optimize_options(config));

    std::FILE* out = std::fopen(out_path.c_str(), "wb");
    if (out == nullptr) {
        std::cerr << "scan: cannot write '" << out_path << "'\n";
        return 2;
    }
    std::fputs("p_w,s_opt,theta,phi,s_full_pattern,bound_lhs,bound_sqi", out);
    if (with_patterns) std::fputs(",s_ijk_over_2,s_full_over_9", out);
    std::fputc('\n', out);
    for (const ScanRecord& rec : records) {
        std::fprintf(out, "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f", rec.p_w, rec.opt.s_max,
                     rec.opt.theta, rec.opt.phi, rec.s_full_pattern, rec.bound_lhs,
                     rec.bound_sqi);
        if (with_patterns) {
            std::fprintf(out, ",%.6f,%.6f", rec.opt.s_max / 2.0, rec.s_full_pattern / 9.0);
        }
        std::fputc('\n', out);
    }
    std::fclose(out);
    return 0;
}

int cmd_threshold(const Config& config, const std::string& measure_name_arg,
                  const std::string& bound_name) {
    const CoherenceMeasure measure = parse_measure(measure_name_arg, 2);
    const BoundKind kind = bound_name == "lhs" ? BoundKind::LHS : BoundKind::SQI1;
    const ThresholdResult res = find_threshold(measure, kind, optimize_options(config));
    json out{{"measure", measure_name_arg}, {"bound", bound_name}};
    if (res.found) {
        out["p_star"] = round_sig15(res.p_star);
    } else {
        out["p_star"] = "none";
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::size_t trials, std::uint64_t seed) {
    const SuiteReport report = run_suite(suite, trials, seed);
    std::cout << to_json(report).dump(2) << "\n";
    if (!report.ok) {
        for (const CheckResult& c : report.checks) {
            if (!c.ok) {
                std::cerr << "verify: " << c.name << " observed " << c.observed << " > limit "
                          << c.limit;
                if (c.failing_seed) std::cerr << " (seed index " << *c.failing_seed << ")";
                std::cerr << "\n";
            }
        }
        return 1;
    }
    return 0;
}

int cmd_mub(std::size_t dim, double theta, double phi) {
    MubFamily fam;
    if (dim == 2) {
        fam = rotated_qubit_mubs(theta, phi);
    } else {
        if (theta != 0.0 || phi != 0.0) {
            std::cerr << "mub: --theta/--phi apply only to --dim 2\n";
            return 2;
        }
        fam = mubs_prime_power(dim);
    }
    canonicalize_phases(fam);
    std::cout << to_json(fam).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coherence-based steering toolkit"};
    app.require_subcommand(1);

    Config config;
    try {
        config = naqc::load_config_from_env();
    } catch (const std::exception& e) {
        std::cerr << "config: " << e.what() << "\n";
        return 2;
    }
    naqc::validation_tolerance() = config.tolerance;

    // compute
    auto* compute = app.add_subcommand("compute", "Evaluate the steering functional on a state");
    std::string state_path;
    double werner_p = 0.0;
    std::string measure = "l1";
    bool optimize = false;
    std::string pattern;
    auto* state_opt = compute->add_option("--state", state_path, "State file (JSON)");
    auto* werner_opt =
        compute->add_option("--werner", werner_p, "Werner mixing parameter in [0,1]");
    compute->add_option("--measure", measure, "Coherence measure: l1 or relent")
        ->check(CLI::IsMember({"l1", "relent"}));
    compute->add_flag("--optimize", optimize, "Optimize the shared frame (two qubits only)");
    compute->add_option("--pattern", pattern, "Also echo one index-pattern value");

    // scan
    auto* scan = app.add_subcommand("scan", "Scan the Werner family to CSV");
    std::string scan_measure = "l1";
    std::size_t steps = 101;
    std::string out_path;
    bool with_patterns = false;
    scan->add_option("--measure", scan_measure, "Coherence measure: l1 or relent")
        ->check(CLI::IsMember({"l1", "relent"}));
    scan->add_option("--steps", steps, "Number of grid points on [0,1]");
    scan->add_option("--out", out_path, "Output CSV path")->required();
    scan->add_flag("--patterns", with_patterns, "Append normalized pattern columns");

    // threshold
    auto* threshold = app.add_subcommand("threshold", "Locate the Werner bound crossing");
    std::string th_measure = "l1";
    std::string th_bound = "lhs";
    threshold->add_option("--measure", th_measure, "Coherence measure: l1 or relent")
        ->check(CLI::IsMember({"l1", "relent"}));
    threshold->add_option("--bound", th_bound, "Bound to cross: lhs or sqi")
        ->check(CLI::IsMember({"lhs", "sqi"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    std::string suite;
    std::size_t trials = 1000;
    std::uint64_t seed = config.seed;
    verify->add_option("--suite", suite, "coherence, lhs, sqi, quantum, qudit, mub or f")
        ->required();
    verify->add_option("--trials", trials, "Sample count");
    verify->add_option("--seed", seed, "Base seed");

    // mub
    auto* mub = app.add_subcommand("mub", "Dump a MUB family as JSON");
    std::size_t dim = 2;
    double theta = 0.0;
    double phi = 0.0;
    mub->add_option("--dim", dim, "Dimension")->required();
    mub->add_option("--theta", theta, "Qubit frame polar angle");
    mub->add_option("--phi", phi, "Qubit frame azimuthal angle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(config,
                               *state_opt ? std::optional<std::string>(state_path) : std::nullopt,
                               *werner_opt ? std::optional<double>(werner_p) : std::nullopt,
                               measure, optimize,
                               pattern.empty() ? std::nullopt
                                               : std::optional<std::string>(pattern));
        }
        if (scan->parsed()) {
            return cmd_scan(config, scan_measure, steps, out_path, with_patterns);
        }
        if (threshold->parsed()) {
            return cmd_threshold(config, th_measure, th_bound);
        }
        if (verify->parsed()) {
            return cmd_verify(suite, trials, seed);
        }
        if (mub->parsed()) {
            return cmd_mub(dim, theta, phi);
        }
    } catch (const std::exception& e) {
        std::cerr << app.get_subcommands().front()->get_name() << ": " << e.what() << "\n";
        return 2;
    }
    return 2;
}
