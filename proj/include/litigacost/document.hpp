#pragma once

// JSON scenario documents:
//
//   {
//     "schema_version": 1,
//     "policy":   { "plaintiff_settle_threshold": "0.25", "defendant_settle_bound": "0.8" },
//     "presets":  [ { "name": "...", "indicators": { "z": 1, "kb": 1, "t_long": 1,
//                                                   "y": null, "ka": 0, "t_short": 0 } } ],
//     "scenarios": [ { "id": "h1", "currency": "EUR", "claim": "100000.00",
//                      "confirmation": "0.8", "plaintiff_trial_cost": "9000.00", ... } ]
//   }
//
// Amounts are decimal strings in major units (at most two decimals, optional
// " CUR" suffix). Fractions are decimal strings or JSON numbers with at most
// six decimals. Every problem found is reported, each with a field path.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "litigacost/analysis.hpp"
#include "litigacost/model.hpp"

namespace litigacost {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct ScenarioDocument {
    int schema_version = kSchemaVersion;
    std::optional<PolicyConfig> policy;
    std::vector<RegimePreset> presets;
    std::vector<DisputeScenario> scenarios;

    const DisputeScenario* find(std::string_view id) const {
        for (const auto& s : scenarios)
            if (s.id() == id) return &s;
        return nullptr;
    }

    bool operator==(const ScenarioDocument&) const = default;
};

namespace json_detail {

inline std::string join(const std::string& prefix, std::string_view key) {
    return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

/// Collects issues while reading one JSON object.
class Reader {
public:
    Reader(const Json& obj, std::string path, std::string scenario_id, std::vector<Issue>& issues)
        : obj_(obj), path_(std::move(path)), id_(std::move(scenario_id)), issues_(issues) {}

    bool has(std::string_view key) const { return obj_.contains(key) && !obj_.at(std::string(key)).is_null(); }

    void fail(ErrorCode code, std::string_view key, std::string message) {
        issues_.push_back({code, std::move(message), join(path_, key), id_});
    }

    const Json* get(std::string_view key, bool required) {
        if (!has(key)) {
            if (required) fail(ErrorCode::MissingField, key, "required field missing");
            return nullptr;
        }
        return &obj_.at(std::string(key));
    }

    /// Numbers are read through their shortest textual form so 0.8 stays 0.8.
    std::optional<std::string> decimal_text(std::string_view key, bool required) {
        const Json* v = get(key, required);
        if (!v) return std::nullopt;
        if (v->is_string()) return v->get<std::string>();
        if (v->is_number()) return v->dump();
        fail(ErrorCode::InvalidValue, key, "expected a decimal string or number");
        return std::nullopt;
    }

    std::optional<RawAmount> amount(std::string_view key, bool required) {
        auto text = decimal_text(key, required);
        if (!text) return std::nullopt;
        auto parsed = parse_amount(*text);
        if (!parsed) {
            fail(ErrorCode::InvalidValue, key, "'" + *text + "' is not an amount with at most 2 decimals");
            return std::nullopt;
        }
        return RawAmount{parsed->minor_units, parsed->currency.value_or("")};
    }

    std::optional<Decimal> decimal(std::string_view key, bool required) {
        auto text = decimal_text(key, required);
        if (!text) return std::nullopt;
        auto d = Decimal::parse(*text);
        if (!d) fail(ErrorCode::InvalidValue, key, "'" + *text + "' is not a decimal with at most 6 decimals");
        return d;
    }

    std::optional<std::string> string(std::string_view key, bool required) {
        const Json* v = get(key, required);
        if (!v) return std::nullopt;
        if (!v->is_string()) {
            fail(ErrorCode::InvalidValue, key, "expected a string");
            return std::nullopt;
        }
        return v->get<std::string>();
    }

    std::optional<std::int64_t> integer(std::string_view key, bool required) {
        const Json* v = get(key, required);
        if (!v) return std::nullopt;
        if (v->is_boolean()) return v->get<bool>() ? 1 : 0;
        if (v->is_number_integer()) return v->get<std::int64_t>();
        fail(ErrorCode::InvalidValue, key, "expected an integer");
        return std::nullopt;
    }

    const std::string& path() const { return path_; }

private:
    const Json& obj_;
    std::string path_;
    std::string id_;
    std::vector<Issue>& issues_;
};

inline std::optional<RawIndicators> read_indicators(const Json& j, const std::string& path, const std::string& id,
                                                    std::vector<Issue>& issues) {
    if (!j.is_object()) {
        issues.push_back({ErrorCode::InvalidValue, "expected an object", path, id});
        return std::nullopt;
    }
    Reader r(j, path, id, issues);
    const std::size_t before = issues.size();
    RawIndicators ind;
    ind.z = r.integer("z", true).value_or(0);
    ind.kb = r.integer("kb", true).value_or(0);
    ind.t_long = r.integer("t_long", true).value_or(0);
    ind.y = r.integer("y", true).value_or(0);
    ind.ka = r.integer("ka", true).value_or(0);
    ind.t_short = r.integer("t_short", true).value_or(0);
    if (issues.size() != before) return std::nullopt;
    return ind;
}

inline void prefix_paths(std::vector<Issue>& issues, const std::string& prefix) {
    if (prefix.empty()) return;
    for (auto& issue : issues) issue.field_path = join(prefix, issue.field_path);
}

}  // namespace json_detail

/// Reads one scenario object; `path` prefixes every reported field path.
/// A missing id is allowed only when `require_id` is false.
inline Expected<DisputeScenario> parse_scenario(const Json& j, const std::string& path = {},
                                                bool require_id = false) {
    std::vector<Issue> issues;
    if (!j.is_object()) return Issue{ErrorCode::InvalidValue, "scenario must be an object", path, {}};

    std::string id;
    if (j.contains("id") && j["id"].is_string()) id = j["id"].get<std::string>();
    json_detail::Reader r(j, path, id, issues);
    if (require_id && id.empty()) {
        if (r.has("id"))
            r.fail(ErrorCode::InvalidValue, "id", "id must be a non-empty string");
        else
            r.fail(ErrorCode::MissingField, "id", "required field missing");
    } else if (r.has("id") && !j["id"].is_string()) {
        r.fail(ErrorCode::InvalidValue, "id", "id must be a string");
    }

    RawScenario raw;
    raw.id = id;
    raw.currency = r.string("currency", true).value_or("");
    auto claim = r.amount("claim", true);
    auto confirmation = r.decimal("confirmation", true);
    auto td = r.amount("t_d_override", false);
    auto c_tp1 = r.amount("plaintiff_trial_cost", true);
    auto c_td1 = r.amount("defendant_trial_cost", true);
    auto c_tp = r.amount("plaintiff_settle_cost", false);
    auto c_td = r.amount("defendant_settle_cost", false);
    std::optional<RawIndicators> indicators;
    if (const Json* ind = r.get("indicators", true))
        indicators = json_detail::read_indicators(*ind, json_detail::join(path, "indicators"), id, issues);

    if (!issues.empty() || !claim || !confirmation || !c_tp1 || !c_td1 || !indicators) return issues;

    raw.claim = *claim;
    raw.confirmation_micros = confirmation->micros();
    raw.t_d_override = td;
    raw.plaintiff_trial_cost = *c_tp1;
    raw.defendant_trial_cost = *c_td1;
    raw.plaintiff_settle_cost = c_tp.value_or(RawAmount{});
    raw.defendant_settle_cost = c_td.value_or(RawAmount{});
    raw.indicators = *indicators;

    auto scenario = validate_scenario(raw);
    if (!scenario) {
        auto errs = scenario.errors();
        json_detail::prefix_paths(errs, path);
        return errs;
    }
    return scenario;
}

inline Expected<PolicyConfig> parse_policy(const Json& j, const std::string& path = {}) {
    if (!j.is_object()) return Issue{ErrorCode::InvalidValue, "policy must be an object", path, {}};
    std::vector<Issue> issues;
    json_detail::Reader r(j, path, {}, issues);
    PolicyConfig defaults;
    auto threshold = r.decimal("plaintiff_settle_threshold", false);
    auto bound = r.decimal("defendant_settle_bound", false);
    if (!issues.empty()) return issues;
    auto policy = PolicyConfig::make(threshold.value_or(defaults.plaintiff_settle_threshold()),
                                     bound.value_or(defaults.defendant_settle_bound()));
    if (!policy) {
        auto errs = policy.errors();
        json_detail::prefix_paths(errs, path);
        return errs;
    }
    return policy;
}

inline Expected<PolicyConfig> parse_policy_text(std::string_view text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) return Issue{ErrorCode::MalformedJson, "policy is not valid JSON", {}, {}};
    return parse_policy(j);
}

/// Preset object: name, optional description, indicators. A null or absent
/// "y" means the scenario's own y is used.
inline Expected<RegimePreset> parse_preset(const Json& j, const std::string& path = {}) {
    if (!j.is_object()) return Issue{ErrorCode::InvalidValue, "preset must be an object", path, {}};
    std::vector<Issue> issues;
    json_detail::Reader r(j, path, {}, issues);
    RegimePreset preset;
    preset.name = r.string("name", true).value_or("");
    if (r.has("name") && preset.name.empty()) r.fail(ErrorCode::InvalidValue, "name", "name must be non-empty");
    preset.description = r.string("description", false).value_or("");
    const Json* ind = r.get("indicators", true);
    if (ind && !ind->is_object()) {
        r.fail(ErrorCode::InvalidValue, "indicators", "expected an object");
        ind = nullptr;
    }
    if (ind) {
        Json filled = *ind;
        preset.inherit_y = !filled.contains("y") || filled["y"].is_null();
        if (preset.inherit_y) filled["y"] = 0;
        auto raw = json_detail::read_indicators(filled, json_detail::join(path, "indicators"), {}, issues);
        if (raw) {
            const std::pair<std::int64_t, const char*> bits[] = {
                {raw->z, "z"}, {raw->kb, "kb"}, {raw->t_long, "t_long"},
                {raw->y, "y"}, {raw->ka, "ka"}, {raw->t_short, "t_short"}};
            bool all_bits = true;
            for (const auto& [bit, key] : bits) {
                if (bit != 0 && bit != 1) {
                    issues.push_back({ErrorCode::InvalidIndicators, "indicator must be 0 or 1",
                                      json_detail::join(json_detail::join(path, "indicators"), key), {}});
                    all_bits = false;
                }
            }
            preset.indicators = {raw->z == 1, raw->kb == 1, raw->t_long == 1,
                                 raw->y == 1, raw->ka == 1, raw->t_short == 1};
            if (all_bits && !preset.indicators.valid())
                issues.push_back({ErrorCode::InvalidIndicators, "kb+ka and t_long+t_short must each equal 1",
                                  json_detail::join(path, "indicators"), {}});
        }
    }
    if (!issues.empty()) return issues;
    return preset;
}

inline Expected<ScenarioDocument> parse_scenario_document(std::string_view text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) return Issue{ErrorCode::MalformedJson, "document is not valid JSON", {}, {}};
    if (!j.is_object()) return Issue{ErrorCode::MalformedJson, "document must be a JSON object", {}, {}};

    std::vector<Issue> issues;
    ScenarioDocument doc;
    json_detail::Reader r(j, {}, {}, issues);
    auto version = r.integer("schema_version", true);
    if (!version) return issues;
    if (*version != kSchemaVersion)
        return Issue{ErrorCode::UnknownSchemaVersion, "unsupported schema_version " + std::to_string(*version),
                     "schema_version", {}};
    doc.schema_version = static_cast<int>(*version);

    if (const Json* p = r.get("policy", false)) {
        auto policy = parse_policy(*p, "policy");
        if (policy)
            doc.policy = *policy;
        else
            issues.insert(issues.end(), policy.errors().begin(), policy.errors().end());
    }

    if (const Json* presets = r.get("presets", false)) {
        if (!presets->is_array()) {
            r.fail(ErrorCode::InvalidValue, "presets", "expected an array");
        } else {
            std::set<std::string> names;
            for (std::size_t i = 0; i < presets->size(); ++i) {
                const std::string path = "presets[" + std::to_string(i) + "]";
                auto preset = parse_preset((*presets)[i], path);
                if (!preset) {
                    issues.insert(issues.end(), preset.errors().begin(), preset.errors().end());
                    continue;
                }
                if (!names.insert(preset->name).second) {
                    issues.push_back({ErrorCode::DuplicateId, "duplicate preset name '" + preset->name + "'",
                                      path + ".name", {}});
                    continue;
                }
                doc.presets.push_back(*preset);
            }
        }
    }

    const Json* scenarios = r.get("scenarios", true);
    if (scenarios && !scenarios->is_array()) {
        r.fail(ErrorCode::InvalidValue, "scenarios", "expected an array");
        scenarios = nullptr;
    }
    if (scenarios) {
        std::set<std::string> ids;
        for (std::size_t i = 0; i < scenarios->size(); ++i) {
            const std::string path = "scenarios[" + std::to_string(i) + "]";
            auto scenario = parse_scenario((*scenarios)[i], path, true);
            if (!scenario) {
                issues.insert(issues.end(), scenario.errors().begin(), scenario.errors().end());
                continue;
            }
            if (!ids.insert(scenario->id()).second) {
                issues.push_back({ErrorCode::DuplicateId, "duplicate scenario id '" + scenario->id() + "'",
                                  path + ".id", scenario->id()});
                continue;
            }
            doc.scenarios.push_back(*scenario);
        }
    }

    if (!issues.empty()) return issues;
    return doc;
}

// ---------------------------------------------------------------------------
// Serialization (inverse of the parsers above)

inline Json indicators_to_json(const RiskIndicators& ind) {
    return Json{{"z", int{ind.z}},   {"kb", int{ind.kb}}, {"t_long", int{ind.t_long}},
                {"y", int{ind.y}},   {"ka", int{ind.ka}}, {"t_short", int{ind.t_short}}};
}

inline Json scenario_to_json(const DisputeScenario& s) {
    Json j;
    j["id"] = s.id();
    j["currency"] = s.currency().str();
    j["claim"] = s.claim().to_string();
    j["confirmation"] = s.confirmation().canonical();
    if (s.t_d_override()) j["t_d_override"] = s.t_d_override()->to_string();
    j["plaintiff_trial_cost"] = s.plaintiff_trial_cost().to_string();
    j["defendant_trial_cost"] = s.defendant_trial_cost().to_string();
    j["plaintiff_settle_cost"] = s.plaintiff_settle_cost().to_string();
    j["defendant_settle_cost"] = s.defendant_settle_cost().to_string();
    j["indicators"] = indicators_to_json(s.indicators());
    return j;
}

inline Json policy_to_json(const PolicyConfig& p) {
    return Json{{"plaintiff_settle_threshold", p.plaintiff_settle_threshold().canonical()},
                {"defendant_settle_bound", p.defendant_settle_bound().canonical()}};
}

inline Json preset_to_json(const RegimePreset& p) {
    Json ind = indicators_to_json(p.indicators);
    if (p.inherit_y) ind["y"] = nullptr;
    return Json{{"name", p.name}, {"description", p.description}, {"indicators", ind}};
}

inline Json document_to_json(const ScenarioDocument& doc) {
    Json j;
    j["schema_version"] = doc.schema_version;
    if (doc.policy) j["policy"] = policy_to_json(*doc.policy);
    if (!doc.presets.empty()) {
        j["presets"] = Json::array();
        for (const auto& p : doc.presets) j["presets"].push_back(preset_to_json(p));
    }
    j["scenarios"] = Json::array();
    for (const auto& s : doc.scenarios) j["scenarios"].push_back(scenario_to_json(s));
    return j;
}

}  // namespace litigacost
