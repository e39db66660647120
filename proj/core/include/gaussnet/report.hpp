#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "gaussnet/search.hpp"

namespace gaussnet {

enum class Command { Ggqc, Classify, Design, VerifyNetwork, Sweep };

std::string to_string(Command command);
Command command_from_string(const std::string& name);

enum class OutputFormat { Json, Csv };

/// A fully validated run request. Mode indices arriving from JSON are
/// 1-based and are converted to the library's 0-based convention here.
struct RunConfig {
    Command command = Command::Ggqc;
    NetworkSpec spec;                          // ggqc / verify-network / sweep
    Eigen::Matrix4d matrix;                    // classify
    DesignInput design;                        // design
    CanonicalType sweep_type = CanonicalType::I;
    std::vector<double> sweep_grid;            // sweep
    int n_max = kDefaultMaxModes;
    bool full_table = false;
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    int samples = 200;
    std::string config_digest;  // fnv1a-64 over the raw config bytes
};

/// Parse and validate a JSON config document. Unknown fields are rejected
/// with a path-qualified ConfigError ("config-syntax" for malformed JSON,
/// "config-semantic" for bad values).
RunConfig parse_config(const std::string& text);

struct JsonReport {
    nlohmann::json doc;
    OutputFormat format = OutputFormat::Json;
};

/// Dispatch a validated config to the corresponding module and wrap the
/// result. Deterministic: identical (config, seed, version) produce
/// identical report bytes.
JsonReport run(const RunConfig& config);

/// Canonical serialization: sorted keys, floating-point numbers printed
/// with 17 significant digits ("%.17g"), UTF-8, trailing newline. CSV is
/// available only for sweep rows (header lambda,ggqc,eq9,gap).
std::string render_report(const JsonReport& report);

/// Render and write to `path`, or to stdout when `path` is empty. Nothing
/// is written on failure.
void emit_report(const JsonReport& report, const std::string& path);

/// fnv1a-64 hex digest used for the inputs echo in reports.
std::string fnv1a_hex(const std::string& bytes);

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace gaussnet
