// Copyright 2026 The treehardy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// treehardy: level means, norms, multiplication operator analysis and
// scenario runs as JSON or CSV on stdout. Diagnostics go to stderr only.
//
// Exit codes: 0 success (Inconclusive verdicts included), 1 a scenario
// assertion failed, 2 bad input, 3 level too large to enumerate, 4 unknown
// scenario.

#include <treehardy/treehardy.hpp>

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace th = treehardy;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kTooLarge = 3, kUnknownScenario = 4 };

struct Config {
    std::uint32_t q = 2;
    bool q_given = false;
    std::string p = "2";
    unsigned depth = 10;
    std::uint64_t cap = th::kDefaultCap;
    double tol = th::kDefaultSpectralTol;
    std::string format = "json";
    std::string input;
};

th::json read_document(const std::string& input) {
    std::string text = input;
    const auto first = input.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || input[first] != '{') {
        std::ifstream in(input);
        if (!in) throw th::ParseError("cannot read input file '" + input + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return th::json::parse(text);
    } catch (const th::json::parse_error& e) {
        throw th::ParseError(std::string("malformed JSON: ") + e.what());
    }
}

th::FunctionRep load_function(const Config& cfg) {
    if (cfg.input.empty()) throw th::ParseError("--input is required");
    auto doc = read_document(cfg.input);
    if (cfg.q_given) {
        if (doc.contains("q") && doc["q"] != cfg.q) throw th::ParseError("--q disagrees with the document's \"q\"");
        doc["q"] = cfg.q;
    }
    auto f = th::function_from_json(doc, cfg.q);
    // Stored dense levels count as enumerated ones.
    if (const auto* d = f.as<th::DenseTruncated>())
        for (unsigned n = 0; n < d->levels.size(); ++n)
            if (d->levels[n].size() > cfg.cap) throw th::LevelTooLarge(n, cfg.cap);
    return f;
}

std::string csv_cell(const th::json& j) {
    if (j.is_string()) return j.get<std::string>();
    std::ostringstream os;
    th::detail::write_value(os, j, 0, 0);
    return os.str();
}

// "field,value" rows for the scalar members of a report.
void write_flat_csv(const th::json& j) {
    std::cout << "field,value\n";
    for (const auto& [key, value] : j.items())
        if (value.is_primitive()) std::cout << key << ',' << csv_cell(value) << '\n';
}

int cmd_means(const Config& cfg) {
    const auto f = load_function(cfg);
    const auto p = th::Exponent::parse(cfg.p);
    th::json rows = th::json::array();
    for (unsigned n = 0; n <= cfg.depth; ++n) {
        const auto m = th::level_mean_detailed(f, n, p, cfg.cap);
        rows.push_back({{"n", n}, {"mean", m.value}, {"method", th::to_string(m.method)}});
    }
    if (cfg.format == "csv") {
        std::cout << "n,mean,method\n";
        for (const auto& row : rows)
            std::cout << row["n"] << ',' << csv_cell(row["mean"]) << ',' << row["method"].get<std::string>() << '\n';
    } else {
        th::write_json(std::cout, rows);
    }
    return kOk;
}

int cmd_norm(const Config& cfg) {
    const auto f = load_function(cfg);
    const auto report = th::to_json(th::norm(f, th::Exponent::parse(cfg.p), cfg.depth, cfg.cap));
    if (cfg.format == "csv") write_flat_csv(report);
    else th::write_json(std::cout, report);
    return kOk;
}

int cmd_op_analyze(const Config& cfg) {
    const th::Symbol psi{load_function(cfg)};
    const auto report = th::to_json(th::analyze(psi, th::Exponent::parse(cfg.p), cfg.depth, cfg.tol, cfg.cap));
    if (cfg.format == "csv") write_flat_csv(report);
    else th::write_json(std::cout, report);
    return kOk;
}

int cmd_scenario_list(const Config& cfg) {
    if (cfg.format == "csv") {
        std::cout << "name,description\n";
        for (const auto& s : th::scenario_registry()) std::cout << s.name << ",\"" << s.description << "\"\n";
        return kOk;
    }
    th::json out = th::json::array();
    for (const auto& s : th::scenario_registry()) out.push_back({{"name", s.name}, {"description", s.description}});
    th::write_json(std::cout, out);
    return kOk;
}

int cmd_scenario_run(const Config& cfg, const std::string& name) {
    const auto* scenario = th::find_scenario(name);
    if (!scenario) {
        std::cerr << "error: UnknownScenario: no scenario named '" << name << "'\n";
        return kUnknownScenario;
    }
    const auto result = th::run_scenario(*scenario);
    if (cfg.format == "csv") {
        std::cout << "label,kind,passed,residual\n";
        for (const auto& a : result.assertions)
            std::cout << '"' << a.label << "\"," << th::to_string(a.kind) << ',' << (a.passed ? "true" : "false")
                      << ',' << csv_cell(a.residual) << '\n';
    } else {
        th::write_json(std::cout, th::to_json(result));
    }
    for (const auto& a : result.assertions)
        if (!a.passed) std::cerr << "FAIL [" << th::to_string(a.kind) << "] " << a.label << '\n';
    return result.passed() ? kOk : kFailed;
}

void validate(const Config& cfg) {
    if (cfg.q < 1) throw th::InvalidGeometry("--q must be at least 1");
    if (!(cfg.tol > 0.0)) throw th::InvalidArgument("--tol must be positive");
    (void)th::Exponent::parse(cfg.p);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Level means, norms and multiplication operators on homogeneous trees"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--q", cfg.q, "branching: every non-root vertex has q children")
            ->each([&cfg](const std::string&) { cfg.q_given = true; });
        cmd->add_option("--p", cfg.p, "exponent: positive decimal or inf")->capture_default_str();
        cmd->add_option("--depth", cfg.depth, "deepest level examined")->capture_default_str();
        cmd->add_option("--cap", cfg.cap, "largest level size enumerated")->capture_default_str();
        cmd->add_option("--tol", cfg.tol, "spectral and isometry tolerance")->capture_default_str();
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--input", cfg.input, "function document: a file path or inline JSON");
    };

    auto* means = app.add_subcommand("means", "level means M_p(n, f) for n = 0..depth");
    auto* norm = app.add_subcommand("norm", "sup of the level means with an exactness flag");
    auto* op = app.add_subcommand("op-analyze", "analysis of the multiplication operator with symbol --input");
    auto* scenario = app.add_subcommand("scenario", "built-in example checks");
    scenario->require_subcommand(1);
    auto* list = scenario->add_subcommand("list", "names of the registered scenarios");
    auto* run = scenario->add_subcommand("run", "run one scenario and report each assertion");
    std::string scenario_name;
    run->add_option("name", scenario_name, "scenario name")->required();
    for (auto* cmd : {means, norm, op, list, run}) add_common(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        validate(cfg);
        if (*means) return cmd_means(cfg);
        if (*norm) return cmd_norm(cfg);
        if (*op) return cmd_op_analyze(cfg);
        if (*list) return cmd_scenario_list(cfg);
        if (*run) return cmd_scenario_run(cfg, scenario_name);
    } catch (const th::LevelTooLarge& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
        return kTooLarge;
    } catch (const th::Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
