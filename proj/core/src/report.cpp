#include "gaussnet/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "gaussnet/errors.hpp"

namespace gaussnet {

using nlohmann::json;

std::string to_string(Command command) {
    switch (command) {
        case Command::Ggqc: return "ggqc";
        case Command::Classify: return "classify";
        case Command::Design: return "design";
        case Command::VerifyNetwork: return "verify-network";
        case Command::Sweep: return "sweep";
    }
    throw std::invalid_argument("to_string: bad command");
}

Command command_from_string(const std::string& name) {
    if (name == "ggqc") return Command::Ggqc;
    if (name == "classify") return Command::Classify;
    if (name == "design") return Command::Design;
    if (name == "verify-network") return Command::VerifyNetwork;
    if (name == "sweep") return Command::Sweep;
    throw ConfigError("config-semantic", "unknown command '" + name + "'");
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

namespace {

[[noreturn]] void semantic_error(const std::string& path, const std::string& what) {
    throw ConfigError("config-semantic", path + ": " + what);
}

void expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) semantic_error(path, "expected an object");
}

void expect_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* key : allowed) ok = ok || item.key() == key;
        if (!ok) semantic_error(path + "." + item.key(), "unknown field");
    }
}

const json& need(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) semantic_error(path, std::string("missing required field '") + key + "'");
    return *it;
}

double need_number(const json& obj, const std::string& path, const char* key) {
    const json& v = need(obj, path, key);
    if (!v.is_number()) semantic_error(path + "." + key, "expected a number");
    return v.get<double>();
}

std::string need_string(const json& obj, const std::string& path, const char* key) {
    const json& v = need(obj, path, key);
    if (!v.is_string()) semantic_error(path + "." + key, "expected a string");
    return v.get<std::string>();
}

Mat parse_matrix(const json& rows, const std::string& path, int expect_dim = -1) {
    if (!rows.is_array() || rows.empty()) semantic_error(path, "expected an array of rows");
    const int n = static_cast<int>(rows.size());
    if (expect_dim > 0 && n != expect_dim)
        semantic_error(path, "expected " + std::to_string(expect_dim) + " rows");
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            semantic_error(path + "[" + std::to_string(i) + "]", "expected a row of " + std::to_string(n) + " numbers");
        for (int j = 0; j < n; ++j) {
            if (!row[j].is_number()) semantic_error(path + "[" + std::to_string(i) + "]", "expected numbers");
            m(i, j) = row[j].get<double>();
        }
    }
    return m;
}

StateKind parse_source(const json& src, const std::string& path) {
    expect_object(src, path);
    const std::string kind = need_string(src, path, "kind");
    if (kind == "two_mode_pure") {
        expect_keys(src, path, {"kind", "gamma"});
        const double gamma = need_number(src, path, "gamma");
        if (gamma < 1.0) semantic_error(path + ".gamma", "two_mode_pure needs gamma >= 1");
        return TwoModePureKind{gamma};
    }
    if (kind == "two_mode_standard") {
        expect_keys(src, path, {"kind", "a", "b", "c", "d"});
        const double a = need_number(src, path, "a"), b = need_number(src, path, "b");
        const double c = need_number(src, path, "c"), d = need_number(src, path, "d");
        if (a < 1.0 || b < 1.0) semantic_error(path, "two_mode_standard needs a >= 1 and b >= 1");
        return TwoModeStandardKind{a, b, c, d};
    }
    if (kind == "tritter") {
        expect_keys(src, path, {"kind", "gamma"});
        const double gamma = need_number(src, path, "gamma");
        if (gamma < 0.0) semantic_error(path + ".gamma", "tritter needs gamma >= 0");
        return TritterKind{gamma};
    }
    if (kind == "explicit") {
        expect_keys(src, path, {"kind", "cm", "mean"});
        Mat cm = parse_matrix(need(src, path, "cm"), path + ".cm");
        if (cm.rows() % 2 != 0) semantic_error(path + ".cm", "dimension must be even");
        Vec mean;
        if (src.contains("mean")) {
            const json& mj = src["mean"];
            if (!mj.is_array() || static_cast<Eigen::Index>(mj.size()) != cm.rows())
                semantic_error(path + ".mean", "expected " + std::to_string(cm.rows()) + " numbers");
            mean.resize(cm.rows());
            for (Eigen::Index i = 0; i < cm.rows(); ++i) mean(i) = mj[i].get<double>();
        }
        return ExplicitKind{std::move(cm), std::move(mean)};
    }
    if (kind == "random") {
        expect_keys(src, path, {"kind", "modes", "seed"});
        const double modes = need_number(src, path, "modes");
        if (modes < 1 || modes != std::floor(modes)) semantic_error(path + ".modes", "expected a positive integer");
        std::uint64_t seed = 0;
        if (src.contains("seed")) seed = src["seed"].get<std::uint64_t>();
        return RandomKind{static_cast<int>(modes), seed};
    }
    semantic_error(path + ".kind", "unknown source kind '" + kind + "'");
}

OperationKind parse_unitary(const json& u, const std::string& path) {
    expect_object(u, path);
    if (u.contains("design")) {
        expect_keys(u, path, {"design"});
        return DesignedOp{canonical_type_from_string(need_string(u, path, "design"))};
    }
    if (u.contains("xi")) {
        expect_keys(u, path, {"xi"});
        return SqueezerOp{need_number(u, path, "xi")};
    }
    if (u.contains("rows")) {
        expect_keys(u, path, {"rows"});
        const Mat m = parse_matrix(u["rows"], path + ".rows", 4);
        if (!is_symplectic(m)) throw PhysicsError(path + ".rows: matrix is not symplectic");
        return ExplicitOp{Eigen::Matrix4d(m)};
    }
    if (u.contains("type")) {
        expect_keys(u, path, {"type", "lambda", "lambda2"});
        CanonicalForm form;
        form.type = canonical_type_from_string(need_string(u, path, "type"));
        if (form.type != CanonicalType::V) form.lambda = need_number(u, path, "lambda");
        if (form.type == CanonicalType::IV)
            form.lambda2 = u.contains("lambda2") ? u["lambda2"].get<double>() : -form.lambda;
        try {
            canonical_matrix(form);  // domain check at load
        } catch (const std::invalid_argument& e) {
            semantic_error(path, e.what());
        }
        return CanonicalOp{form};
    }
    semantic_error(path, "expected one of 'type', 'xi', 'rows', 'design'");
}

NetworkOperation parse_operation(const json& op, const std::string& path, int total_modes) {
    expect_object(op, path);
    expect_keys(op, path, {"modes", "unitary"});
    const json& modes = need(op, path, "modes");
    if (!modes.is_array() || modes.size() != 2 || !modes[0].is_number_integer() || !modes[1].is_number_integer())
        semantic_error(path + ".modes", "expected two integer mode indices");
    NetworkOperation out;
    out.mode_a = modes[0].get<int>() - 1;  // 1-based on the wire
    out.mode_b = modes[1].get<int>() - 1;
    if (out.mode_a == out.mode_b) semantic_error(path + ".modes", "duplicate mode index");
    if (out.mode_a < 0 || out.mode_b < 0 || out.mode_a >= total_modes || out.mode_b >= total_modes)
        semantic_error(path + ".modes", "mode index out of range (modes are 1-based)");
    out.unitary = op.contains("unitary") ? parse_unitary(op["unitary"], path + ".unitary")
                                         : OperationKind{DesignedOp{CanonicalType::I}};
    return out;
}

NetworkSpec parse_network(const json& root, const std::string& path) {
    NetworkSpec spec;
    const json& sources = need(root, path, "sources");
    if (!sources.is_array() || sources.empty()) semantic_error(path + ".sources", "expected a nonempty array");
    for (std::size_t i = 0; i < sources.size(); ++i)
        spec.sources.push_back(parse_source(sources[i], path + ".sources[" + std::to_string(i) + "]"));
    const int n = spec.total_modes();
    if (root.contains("operations")) {
        const json& ops = root["operations"];
        if (!ops.is_array()) semantic_error(path + ".operations", "expected an array");
        for (std::size_t i = 0; i < ops.size(); ++i)
            spec.operations.push_back(parse_operation(ops[i], path + ".operations[" + std::to_string(i) + "]", n));
    }
    return spec;
}

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json modes_to_json(const std::vector<int>& modes) {
    json out = json::array();
    for (int m : modes) out.push_back(m + 1);  // 1-based on the wire
    return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config-syntax", e.what());
    }
    expect_object(root, "$");
    expect_keys(root, "$", {"command", "sources", "operations", "options", "matrix", "design", "sweep"});

    RunConfig config;
    config.config_digest = fnv1a_hex(text);
    config.command = command_from_string(need_string(root, "$", "command"));

    if (root.contains("options")) {
        const json& opts = root["options"];
        expect_object(opts, "$.options");
        expect_keys(opts, "$.options", {"n_max", "full_table"});
        if (opts.contains("n_max")) {
            if (!opts["n_max"].is_number_integer() || opts["n_max"].get<int>() < 2)
                semantic_error("$.options.n_max", "expected an integer >= 2");
            config.n_max = opts["n_max"].get<int>();
        }
        if (opts.contains("full_table")) {
            if (!opts["full_table"].is_boolean()) semantic_error("$.options.full_table", "expected a boolean");
            config.full_table = opts["full_table"].get<bool>();
        }
    }

    switch (config.command) {
        case Command::Ggqc:
        case Command::VerifyNetwork:
            config.spec = parse_network(root, "$");
            break;
        case Command::Classify: {
            const Mat m = parse_matrix(need(root, "$", "matrix"), "$.matrix", 4);
            config.matrix = m;
            break;
        }
        case Command::Design: {
            const json& d = need(root, "$", "design");
            expect_object(d, "$.design");
            expect_keys(d, "$.design", {"type", "gamma_out", "gamma_in"});
            config.design.type = canonical_type_from_string(need_string(d, "$.design", "type"));
            config.design.gamma_out = need_number(d, "$.design", "gamma_out");
            config.design.gamma_in = need_number(d, "$.design", "gamma_in");
            if (config.design.gamma_out < 1.0 || config.design.gamma_in < 1.0)
                semantic_error("$.design", "gamma parameters must be >= 1");
            break;
        }
        case Command::Sweep: {
            config.spec = parse_network(root, "$");
            const json& sw = need(root, "$", "sweep");
            expect_object(sw, "$.sweep");
            expect_keys(sw, "$.sweep", {"type", "grid"});
            config.sweep_type = canonical_type_from_string(need_string(sw, "$.sweep", "type"));
            const json& grid = need(sw, "$.sweep", "grid");
            if (!grid.is_array() || grid.empty()) semantic_error("$.sweep.grid", "expected a nonempty array");
            for (const json& v : grid) {
                if (!v.is_number()) semantic_error("$.sweep.grid", "expected numbers");
                config.sweep_grid.push_back(v.get<double>());
            }
            break;
        }
    }
    return config;
}

namespace {

json run_ggqc(const RunConfig& config) {
    const ProtocolRun run = run_network(config.spec);
    const GgqcReport report = ggqc(run.state, config.n_max);
    json results;
    results["value"] = report.value;
    results["argmin"] = modes_to_json(report.argmin.modes());
    results["det_gamma"] = report.det_gamma;
    results["modes"] = run.state.modes();
    results["degenerate_minor"] = report.degenerate_minor;
    if (config.full_table) {
        json table = json::array();
        for (const GgqcRow& row : report.table) {
            json r;
            r["modes"] = modes_to_json(Bipartition{run.state.modes(), row.mask}.modes());
            r["det_alpha"] = row.det_alpha;
            r["det_complement"] = row.det_complement;
            r["m"] = row.m;
            table.push_back(std::move(r));
        }
        results["table"] = std::move(table);
    }
    return results;
}

json run_classify(const RunConfig& config) {
    const ClassificationResult result = classify(config.matrix, config.tol);
    json results;
    results["type"] = to_string(result.form.type);
    results["lambda"] = result.form.lambda;
    if (result.form.type == CanonicalType::IV) results["lambda2"] = result.form.lambda2;
    results["left"] = matrix_to_json(result.left);
    results["right"] = matrix_to_json(result.right);
    results["residual"] = result.residual;
    results["det_s11"] = config.matrix.block<2, 2>(0, 0).determinant();
    return results;
}

json run_design(const RunConfig& config) {
    const DesignResult result = design_optimal(config.design);
    json results;
    results["type"] = to_string(config.design.type);
    results["gamma_out"] = config.design.gamma_out;
    results["gamma_in"] = config.design.gamma_in;
    results["threshold_lambda_sq"] = result.threshold_lambda_sq;
    results["lambda"] = result.form.lambda;
    if (config.design.type == CanonicalType::IV) {
        results["lambda2"] = result.form.lambda2;
        results["condition_lhs"] = result.condition_lhs;
        results["condition_rhs"] = result.condition_rhs;
    }
    return results;
}

json run_verify(const RunConfig& config) {
    const NetworkBoundReport report = verify_network_bound(config.spec, config.n_max);
    json results;
    results["bound"] = report.bound;
    results["resultant"] = report.resultant_ggqc;
    results["gap"] = report.gap;
    results["source_ggqc"] = report.source_ggqc;
    if (config.samples > 0 && !config.spec.operations.empty()) {
        // empirical cross-check: no sampled operation set may beat the bound
        SearchConfig search;
        search.spec = config.spec;
        search.samples = config.samples;
        search.seed = config.seed;
        const SearchResult best = random_search_max_ggqc(search);
        results["search"]["best"] = best.best_value;
        results["search"]["samples"] = config.samples;
        results["search"]["within_bound"] = best.best_value <= best.bound + 1e-9;
    }
    json ops = json::array();
    for (std::size_t i = 0; i < report.sufficiency_ok.size(); ++i) {
        json op;
        op["modes"] = json::array({config.spec.operations[i].mode_a + 1, config.spec.operations[i].mode_b + 1});
        op["gamma_out"] = report.boundary_gammas[i][0];
        op["gamma_in"] = report.boundary_gammas[i][1];
        op["eq9"] = static_cast<bool>(report.sufficiency_ok[i]);
        op["out_of_scope"] = static_cast<bool>(report.out_of_scope[i]);
        op["designed_lambda_sq"] = report.designed_lambda_sq[i];
        ops.push_back(std::move(op));
    }
    results["operations"] = std::move(ops);
    return results;
}

json run_sweep(const RunConfig& config) {
    const std::vector<SweepRow> rows = sweep_lambda(config.spec, config.sweep_type, config.sweep_grid);
    json arr = json::array();
    for (const SweepRow& row : rows) {
        json r;
        r["lambda"] = row.lambda;
        r["ggqc"] = row.ggqc_value;
        r["eq9"] = row.sufficiency_ok;
        r["gap"] = row.gap_to_bound;
        arr.push_back(std::move(r));
    }
    json results;
    results["rows"] = std::move(arr);
    return results;
}

void render_number(double v, std::string& out) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void render_json(const json& j, std::string& out) {
    switch (j.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& item : j.items()) {  // nlohmann objects iterate in sorted key order
                if (!first) out += ',';
                first = false;
                out += json(item.key()).dump();
                out += ':';
                render_json(item.value(), out);
            }
            out += '}';
            return;
        }
        case json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                render_json(j[i], out);
            }
            out += ']';
            return;
        }
        case json::value_t::number_float:
            render_number(j.get<double>(), out);
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

JsonReport run(const RunConfig& config) {
    JsonReport report;
    report.doc["command"] = to_string(config.command);
    report.doc["inputs_digest"] = config.config_digest;
    report.doc["library_version"] = kLibraryVersion;
    report.doc["seed"] = config.seed;
    switch (config.command) {
        case Command::Ggqc: report.doc["results"] = run_ggqc(config); break;
        case Command::Classify: report.doc["results"] = run_classify(config); break;
        case Command::Design: report.doc["results"] = run_design(config); break;
        case Command::VerifyNetwork: report.doc["results"] = run_verify(config); break;
        case Command::Sweep:
            report.doc["results"] = run_sweep(config);
            report.format = OutputFormat::Csv;
            break;
    }
    return report;
}

std::string render_report(const JsonReport& report) {
    if (report.format == OutputFormat::Csv) {
        const json& rows = report.doc.at("results").at("rows");
        std::string out = "lambda,ggqc,eq9,gap\n";
        for (const json& row : rows) {
            render_number(row.at("lambda").get<double>(), out);
            out += ',';
            render_number(row.at("ggqc").get<double>(), out);
            out += ',';
            out += row.at("eq9").get<bool>() ? "true" : "false";
            out += ',';
            render_number(row.at("gap").get<double>(), out);
            out += '\n';
        }
        return out;
    }
    std::string out;
    render_json(report.doc, out);
    out += '\n';
    return out;
}

void emit_report(const JsonReport& report, const std::string& path) {
    const std::string text = render_report(report);  // fully rendered before any write
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("emit_report: cannot open '" + path + "' for writing");
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file) throw std::runtime_error("emit_report: write to '" + path + "' failed");
}

}  // namespace gaussnet
