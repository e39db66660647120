// Batch front end: read a JSON network/matrix config, run the requested
// computation, emit a deterministic report (JSON, or CSV for sweeps).
//
// Exit codes: 0 ok, 1 usage/config errors, 2 physics-validity errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "gaussnet/errors.hpp"
#include "gaussnet/report.hpp"

namespace {

struct Flags {
    std::string config_path;
    std::string output_path;
    double tol = gaussnet::kDefaultTol;
    std::uint64_t seed = 0;
    int samples = 200;
    bool full_table = false;
};

void add_common(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config_path, "Path to the JSON config document");
    cmd->add_option("--seed", flags.seed, "Seed for randomized computations (default 0)");
    cmd->add_option("--samples", flags.samples, "Sample count for randomized searches (default 200)");
    cmd->add_option("--tol", flags.tol, "Numerical tolerance (default 1e-9)");
    cmd->add_option("--output", flags.output_path, "Write the report here instead of stdout");
    cmd->add_flag("--full-table", flags.full_table, "Include the per-bipartition table in ggqc reports");
}

void print_error(const std::string& code, const std::string& message) {
    nlohmann::json err;
    err["error"]["code"] = code;
    err["error"]["message"] = message;
    std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian network correlation toolkit"};
    app.require_subcommand(0, 1);

    Flags flags;
    std::string expected_command;
    for (const char* name : {"ggqc", "classify", "design", "verify-network", "sweep"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub, flags);
        sub->callback([&expected_command, name] { expected_command = name; });
    }
    add_common(&app, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems map to exit 1; --help stays 0
    }

    try {
        if (flags.config_path.empty()) throw gaussnet::ConfigError("usage", "--config is required");
        std::ifstream in(flags.config_path, std::ios::binary);
        if (!in) throw gaussnet::ConfigError("usage", "cannot read config file '" + flags.config_path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();

        gaussnet::RunConfig config = gaussnet::parse_config(buffer.str());
        if (!expected_command.empty() && to_string(config.command) != expected_command)
            throw gaussnet::ConfigError("config-semantic", "config command '" + to_string(config.command) +
                                                               "' does not match subcommand '" + expected_command + "'");
        config.tol = flags.tol;
        config.seed = flags.seed;
        config.samples = flags.samples;
        config.full_table = config.full_table || flags.full_table;

        const gaussnet::JsonReport report = gaussnet::run(config);
        gaussnet::emit_report(report, flags.output_path);
        return 0;
    } catch (const gaussnet::ConfigError& e) {
        print_error(e.code(), e.what());
        return 1;
    } catch (const gaussnet::CapacityError& e) {
        print_error("capacity", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        print_error("usage", e.what());
        return 1;
    } catch (const gaussnet::PhysicsError& e) {
        print_error("not-physical", e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return 1;
    }
}
