// Command-line front end: scenario ingestion, verification suites, and
// machine-readable reports.

#include "causalq/suites.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

using causalq::suites::Command;
using causalq::suites::Format;
using causalq::suites::RunConfig;

namespace {

int apply_common(RunConfig& cfg, const std::string& format,
                 const std::vector<std::string>& tolerance_overrides) {
    cfg.format = format == "csv" ? Format::Csv : Format::Json;
    for (const std::string& entry : tolerance_overrides) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            std::cerr << "error: --tolerance expects name=value, got \"" << entry << "\"\n";
            return 2;
        }
        double value = 0.0;
        try {
            value = std::stod(entry.substr(eq + 1));
        } catch (const std::exception&) {
            std::cerr << "error: bad tolerance value in \"" << entry << "\"\n";
            return 2;
        }
        try {
            cfg.tolerances.set(entry.substr(0, eq), value);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qubit time-order laboratory"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
    std::vector<std::string> tolerance_overrides;
    int parallel = 1;
    std::string scenario_path;

    app.add_option("--seed", seed, "seed for the property sweeps (default 0)");
    app.add_option("--out", out_path, "report file (stdout when omitted)");
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--tolerance", tolerance_overrides,
                   "override a named tolerance, e.g. state_equality=1e-8 (repeatable)");
    app.add_option("--parallel", parallel, "worker threads for independent checks")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify-all", "run every suite");
    auto* scenario = app.add_subcommand("scenario", "evaluate a scenario file");
    scenario->add_option("file", scenario_path, "JSON scenario file")->required();
    auto* families_cmd = app.add_subcommand("families", "solution-family certificates");
    auto* popt_cmd = app.add_subcommand("popt", "product-positivity suite");
    auto* steering_cmd = app.add_subcommand("steering", "no-signaling sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunConfig cfg;
    cfg.seed = seed;
    cfg.parallel = parallel;
    if (!out_path.empty()) cfg.output = out_path;
    if (const int rc = apply_common(cfg, format, tolerance_overrides); rc != 0) return rc;

    if (verify->parsed()) {
        cfg.command = Command::VerifyAll;
    } else if (scenario->parsed()) {
        cfg.command = Command::Scenario;
        cfg.scenario_path = scenario_path;
    } else if (families_cmd->parsed()) {
        cfg.command = Command::Families;
    } else if (popt_cmd->parsed()) {
        cfg.command = Command::Popt;
    } else if (steering_cmd->parsed()) {
        cfg.command = Command::Steering;
    }
    return causalq::suites::run(cfg);
}
