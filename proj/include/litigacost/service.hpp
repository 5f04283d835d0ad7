#pragma once

// HTTP facade over the model. Routing and payload handling live in Api,
// which is a pure function of (method, path, body) and knows nothing about
// sockets; service_http.hpp binds it to a listening server.
//
// Every /api/v1 response is an envelope:
//   { "ok": bool, "result": <payload> | null, "errors": [ {code, message, field_path} ] }

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litigacost/analysis.hpp"
#include "litigacost/document.hpp"
#include "litigacost/render.hpp"

namespace litigacost::service {

struct HttpReply {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

struct ServiceConfig {
    PolicyConfig default_policy;
    std::vector<RegimePreset> presets;  // in addition to the built-in ones
    std::string allow_origin;           // empty: no CORS headers
};

inline Json error_to_json(const Issue& issue) {
    return Json{{"code", to_string(issue.code)}, {"message", issue.message}, {"field_path", issue.field_path}};
}

inline HttpReply envelope_ok(Json result) {
    return {200, Json{{"ok", true}, {"result", std::move(result)}, {"errors", Json::array()}}.dump(), "application/json"};
}

inline HttpReply envelope_error(int status, const std::vector<Issue>& issues) {
    Json errors = Json::array();
    for (const auto& i : issues) errors.push_back(error_to_json(i));
    return {status, Json{{"ok", false}, {"result", nullptr}, {"errors", std::move(errors)}}.dump(), "application/json"};
}

inline HttpReply envelope_error(int status, std::string_view code, std::string message) {
    Json errors = Json::array({Json{{"code", code}, {"message", std::move(message)}, {"field_path", ""}}});
    return {status, Json{{"ok", false}, {"result", nullptr}, {"errors", std::move(errors)}}.dump(), "application/json"};
}

class Api {
public:
    explicit Api(ServiceConfig config = {}) : config_(std::move(config)) {}

    const ServiceConfig& config() const noexcept { return config_; }

    HttpReply handle(std::string_view method, std::string_view path, std::string_view body) const {
        try {
            return route(method, path, body);
        } catch (const std::exception& e) {
            return envelope_error(500, "InternalError", e.what());
        }
    }

private:
    using Handler = HttpReply (Api::*)(const Json&) const;

    HttpReply route(std::string_view method, std::string_view path, std::string_view body) const {
        if (path == "/healthz") {
            if (method != "GET") return envelope_error(405, "MethodNotAllowed", "use GET");
            return {200, "ok", "text/plain"};
        }
        if (path == "/api/v1/presets") {
            if (method != "GET") return envelope_error(405, "MethodNotAllowed", "use GET");
            return presets();
        }
        static constexpr std::pair<std::string_view, Handler> posts[] = {
            {"/api/v1/evaluate", &Api::evaluate_route},
            {"/api/v1/sweep", &Api::sweep_route},
            {"/api/v1/breakeven", &Api::breakeven_route},
            {"/api/v1/compare", &Api::compare_route},
        };
        for (const auto& [route_path, handler] : posts) {
            if (path != route_path) continue;
            if (method != "POST") return envelope_error(405, "MethodNotAllowed", "use POST");
            Json j = Json::parse(body, nullptr, false);
            if (j.is_discarded() || !j.is_object())
                return envelope_error(400, {Issue{ErrorCode::MalformedJson, "body must be a JSON object", "", {}}});
            return (this->*handler)(j);
        }
        return envelope_error(404, "NotFound", "no route for " + std::string(path));
    }

    HttpReply presets() const {
        Json list = Json::array();
        for (const auto& p : config_.presets) list.push_back(preset_to_json(p));
        for (const auto& p : builtin_presets())
            if (!find_custom(p.name)) list.push_back(preset_to_json(p));
        return envelope_ok(std::move(list));
    }

    const RegimePreset* find_custom(std::string_view name) const {
        for (const auto& p : config_.presets)
            if (p.name == name) return &p;
        return nullptr;
    }

    /// Reads body.scenario and body.policy (falls back to the server default).
    struct Inputs {
        std::optional<DisputeScenario> scenario;
        PolicyConfig policy;
        std::vector<Issue> issues;
    };

    Inputs read_inputs(const Json& body) const {
        Inputs in{std::nullopt, config_.default_policy, {}};
        if (!body.contains("scenario") || body["scenario"].is_null()) {
            in.issues.push_back({ErrorCode::MissingField, "required field missing", "scenario", {}});
        } else {
            // Field paths are reported relative to the scenario object, so a
            // bad confirmation surfaces as "confirmation".
            auto s = parse_scenario(body["scenario"]);
            if (s)
                in.scenario = *s;
            else
                in.issues.insert(in.issues.end(), s.errors().begin(), s.errors().end());
        }
        if (body.contains("policy") && !body["policy"].is_null()) {
            auto p = parse_policy(body["policy"], "policy");
            if (p)
                in.policy = *p;
            else
                in.issues.insert(in.issues.end(), p.errors().begin(), p.errors().end());
        }
        return in;
    }

    HttpReply evaluate_route(const Json& body) const {
        auto in = read_inputs(body);
        if (!in.issues.empty()) return envelope_error(422, in.issues);
        return envelope_ok(evaluation_to_json(evaluate(*in.scenario, in.policy)));
    }

    HttpReply sweep_route(const Json& body) const {
        auto in = read_inputs(body);
        json_detail::Reader r(body, {}, {}, in.issues);
        auto param = r.string("param", false).value_or("confirmation");
        if (param != "confirmation")
            r.fail(ErrorCode::UnknownParameter, "param", "only 'confirmation' can be swept");
        auto f_min = r.decimal("min", true);
        auto f_max = r.decimal("max", true);
        auto steps = r.integer("steps", true);
        std::optional<Fraction> lo, hi;
        if (f_min && !(lo = Fraction::make(*f_min))) r.fail(ErrorCode::FractionOutOfRange, "min", "must lie in [0, 1]");
        if (f_max && !(hi = Fraction::make(*f_max))) r.fail(ErrorCode::FractionOutOfRange, "max", "must lie in [0, 1]");
        if (!in.issues.empty()) return envelope_error(422, in.issues);

        auto series = sweep_confirmation(*in.scenario, *lo, *hi, *steps, in.policy);
        if (!series) return envelope_error(422, series.errors());
        return envelope_ok(sweep_to_json(*in.scenario, *series));
    }

    HttpReply breakeven_route(const Json& body) const {
        auto in = read_inputs(body);
        json_detail::Reader r(body, {}, {}, in.issues);
        auto target = r.decimal("target_fraction", true);
        if (!in.issues.empty()) return envelope_error(422, in.issues);

        auto f = break_even_fraction(*in.scenario, *target);
        if (!f) return envelope_error(422, f.errors());
        return envelope_ok(break_even_to_json(*in.scenario, *target, *f));
    }

    /// "before"/"after" are preset names or inline preset objects.
    std::optional<RegimePreset> read_preset(const Json& body, const char* key, std::vector<Issue>& issues) const {
        if (!body.contains(key) || body[key].is_null()) {
            issues.push_back({ErrorCode::MissingField, "required field missing", key, {}});
            return std::nullopt;
        }
        const Json& v = body[key];
        if (v.is_string()) {
            const auto name = v.get<std::string>();
            if (auto p = find_preset(name, config_.presets)) return p;
            issues.push_back({ErrorCode::UnknownPreset, "no preset named '" + name + "'", key, {}});
            return std::nullopt;
        }
        auto p = parse_preset(v, key);
        if (p) return *p;
        issues.insert(issues.end(), p.errors().begin(), p.errors().end());
        return std::nullopt;
    }

    HttpReply compare_route(const Json& body) const {
        auto in = read_inputs(body);
        auto before = read_preset(body, "before", in.issues);
        auto after = read_preset(body, "after", in.issues);
        if (!in.issues.empty()) return envelope_error(422, in.issues);
        auto cmp = compare_regimes(*in.scenario, *before, *after);
        return envelope_ok(comparison_to_json(cmp, in.scenario->currency()));
    }

    ServiceConfig config_;
};

}  // namespace litigacost::service
