#pragma once

// Command implementations behind the `litigacost` executable. Each command
// returns its full stdout/stderr text and exit code; nothing is printed
// here, so a failing command never leaks partial output.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "litigacost/analysis.hpp"
#include "litigacost/document.hpp"
#include "litigacost/render.hpp"

namespace litigacost::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIo = 3;

inline constexpr const char* kPolicyEnvVar = "LITIGACOST_POLICY";

struct CommandOutput {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

inline CommandOutput failure(int code, const std::vector<Issue>& issues) {
    CommandOutput r{code, {}, {}};
    for (const auto& issue : issues) r.err += "error: " + describe(issue) + "\n";
    return r;
}

inline CommandOutput failure(int code, ErrorCode error, std::string message, std::string path = {}) {
    return failure(code, {Issue{error, std::move(message), std::move(path), {}}});
}

inline std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return ss.str();
}

/// Policy inputs in increasing priority: document, env file, --policy file.
struct PolicySources {
    std::optional<std::string> flag_path;
    std::optional<std::string> env_path;
};

struct Loaded {
    ScenarioDocument document;
    PolicyConfig policy;
};

/// Reads the scenario file and resolves the effective policy, or returns the
/// failure to report.
inline std::variant<Loaded, CommandOutput> load(const std::string& scenarios_path, const PolicySources& sources) {
    auto text = read_file(scenarios_path);
    if (!text) return failure(kExitIo, ErrorCode::IoError, "cannot read scenario file '" + scenarios_path + "'");
    auto doc = parse_scenario_document(*text);
    if (!doc) return failure(kExitValidation, doc.errors());

    Loaded loaded{*doc, doc->policy.value_or(PolicyConfig{})};
    const auto& policy_path = sources.flag_path ? sources.flag_path : sources.env_path;
    if (policy_path && !policy_path->empty()) {
        auto policy_text = read_file(*policy_path);
        if (!policy_text) return failure(kExitIo, ErrorCode::IoError, "cannot read policy file '" + *policy_path + "'");
        auto policy = parse_policy_text(*policy_text);
        if (!policy) return failure(kExitValidation, policy.errors());
        loaded.policy = *policy;
    }
    return loaded;
}

inline std::variant<const DisputeScenario*, CommandOutput> find_scenario(const ScenarioDocument& doc,
                                                                         const std::string& id) {
    if (const auto* s = doc.find(id)) return s;
    return failure(kExitValidation, ErrorCode::UnknownScenario, "no scenario with id '" + id + "'", "id");
}

inline std::variant<Format, CommandOutput> resolve_format(const std::string& name) {
    if (auto f = parse_format(name)) return *f;
    return failure(kExitValidation, ErrorCode::InvalidValue, "unknown format '" + name + "'", "format");
}

// ---------------------------------------------------------------------------

struct EvalOptions {
    std::string scenarios_path;
    std::string format = "table";
    PolicySources policy;
};

inline CommandOutput run_eval(const EvalOptions& opt) {
    auto format = resolve_format(opt.format);
    if (auto* f = std::get_if<CommandOutput>(&format)) return *f;
    auto loaded = load(opt.scenarios_path, opt.policy);
    if (auto* f = std::get_if<CommandOutput>(&loaded)) return *f;
    const auto& [doc, policy] = std::get<Loaded>(loaded);

    std::vector<Evaluation> results;
    results.reserve(doc.scenarios.size());
    for (const auto& s : doc.scenarios) results.push_back(evaluate(s, policy));
    return {kExitOk, render_results(results, std::get<Format>(format)), {}};
}

struct SweepOptions {
    std::string scenarios_path;
    std::string id;
    std::string param = "confirmation";
    std::string min;
    std::string max;
    std::int64_t steps = 0;
    std::string format = "table";
    PolicySources policy;
};

inline CommandOutput run_sweep(const SweepOptions& opt) {
    auto format = resolve_format(opt.format);
    if (auto* f = std::get_if<CommandOutput>(&format)) return *f;
    if (opt.param != "confirmation")
        return failure(kExitValidation, ErrorCode::UnknownParameter,
                       "only 'confirmation' can be swept, got '" + opt.param + "'", "param");
    auto f_min = Fraction::parse(opt.min);
    auto f_max = Fraction::parse(opt.max);
    std::vector<Issue> issues;
    if (!f_min) issues.push_back({ErrorCode::FractionOutOfRange, "'" + opt.min + "' is not a fraction in [0, 1]", "min", {}});
    if (!f_max) issues.push_back({ErrorCode::FractionOutOfRange, "'" + opt.max + "' is not a fraction in [0, 1]", "max", {}});
    if (!issues.empty()) return failure(kExitValidation, issues);

    auto loaded = load(opt.scenarios_path, opt.policy);
    if (auto* f = std::get_if<CommandOutput>(&loaded)) return *f;
    const auto& [doc, policy] = std::get<Loaded>(loaded);
    auto found = find_scenario(doc, opt.id);
    if (auto* f = std::get_if<CommandOutput>(&found)) return *f;
    const auto& s = *std::get<const DisputeScenario*>(found);

    auto series = sweep_confirmation(s, *f_min, *f_max, opt.steps, policy);
    if (!series) return failure(kExitValidation, series.errors());
    return {kExitOk, render_sweep(s, *series, std::get<Format>(format)), {}};
}

struct BreakEvenOptions {
    std::string scenarios_path;
    std::string id;
    std::string target_fraction;
    std::string format = "table";
};

inline CommandOutput run_breakeven(const BreakEvenOptions& opt) {
    auto format = resolve_format(opt.format);
    if (auto* f = std::get_if<CommandOutput>(&format)) return *f;
    auto target = Decimal::parse(opt.target_fraction);
    if (!target)
        return failure(kExitValidation, ErrorCode::InvalidValue,
                       "'" + opt.target_fraction + "' is not a decimal with at most 6 decimals", "target_fraction");
    auto loaded = load(opt.scenarios_path, {});
    if (auto* f = std::get_if<CommandOutput>(&loaded)) return *f;
    const auto& doc = std::get<Loaded>(loaded).document;
    auto found = find_scenario(doc, opt.id);
    if (auto* f = std::get_if<CommandOutput>(&found)) return *f;
    const auto& s = *std::get<const DisputeScenario*>(found);

    auto f = break_even_fraction(s, *target);
    if (!f) return failure(kExitValidation, f.errors());
    return {kExitOk, render_break_even(s, *target, *f, std::get<Format>(format)), {}};
}

struct CompareOptions {
    std::string scenarios_path;
    std::string id;
    std::string before;
    std::string after;
    std::string format = "table";
};

inline CommandOutput run_compare(const CompareOptions& opt) {
    auto format = resolve_format(opt.format);
    if (auto* f = std::get_if<CommandOutput>(&format)) return *f;
    auto loaded = load(opt.scenarios_path, {});
    if (auto* f = std::get_if<CommandOutput>(&loaded)) return *f;
    const auto& doc = std::get<Loaded>(loaded).document;
    auto found = find_scenario(doc, opt.id);
    if (auto* f = std::get_if<CommandOutput>(&found)) return *f;
    const auto& s = *std::get<const DisputeScenario*>(found);

    std::vector<Issue> issues;
    auto before = find_preset(opt.before, doc.presets);
    auto after = find_preset(opt.after, doc.presets);
    if (!before) issues.push_back({ErrorCode::UnknownPreset, "no preset named '" + opt.before + "'", "before", {}});
    if (!after) issues.push_back({ErrorCode::UnknownPreset, "no preset named '" + opt.after + "'", "after", {}});
    if (!issues.empty()) return failure(kExitValidation, issues);

    auto cmp = compare_regimes(s, *before, *after);
    return {kExitOk, render_comparison(cmp, s.currency(), std::get<Format>(format)), {}};
}

}  // namespace litigacost::cli
