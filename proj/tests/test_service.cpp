#include <algorithm>
#include <thread>

#include <gtest/gtest.h>

#include "litigacost/service_http.hpp"
#include "support/generators.hpp"

using namespace litigacost;
using namespace litigacost::service;

namespace {

Json hypothesis_body(const std::string& confirmation) {
    Json s = scenario_to_json(litigacost::testing::hypothesis(800'000));
    s["confirmation"] = confirmation;
    return Json{{"scenario", s}};
}

Json post(const Api& api, const std::string& path, const Json& body, int expected_status) {
    auto reply = api.handle("POST", path, body.dump());
    EXPECT_EQ(reply.status, expected_status) << reply.body;
    return Json::parse(reply.body);
}

bool has_error(const Json& envelope, const std::string& code, const std::string& path) {
    for (const auto& e : envelope["errors"])
        if (e["code"] == code && e["field_path"] == path) return true;
    return false;
}

}  // namespace

TEST(Api, EvaluateHypothesisOne) {
    Api api;
    Json env = post(api, "/api/v1/evaluate", hypothesis_body("0.8"), 200);
    EXPECT_EQ(env["ok"], true);
    EXPECT_TRUE(env["errors"].empty());
    EXPECT_EQ(env["result"]["tc"], "4000.00");
    EXPECT_EQ(env["result"]["risk_coefficient"], 2);
    EXPECT_EQ(env["result"]["plaintiff_action"], "Litigate");
}

TEST(Api, EvaluateHypothesisTwo) {
    Json env = post(Api{}, "/api/v1/evaluate", hypothesis_body("0.5"), 200);
    EXPECT_EQ(env["result"]["tc_fraction_of_claim"], "0.6400");
}

TEST(Api, ConfirmationOutOfRangeIs422) {
    Json env = post(Api{}, "/api/v1/evaluate", hypothesis_body("1.5"), 422);
    EXPECT_EQ(env["ok"], false);
    EXPECT_TRUE(env["result"].is_null());
    EXPECT_TRUE(has_error(env, "FractionOutOfRange", "confirmation"));
}

TEST(Api, MalformedJsonIs400) {
    auto reply = Api{}.handle("POST", "/api/v1/evaluate", "{oops");
    EXPECT_EQ(reply.status, 400);
    Json env = Json::parse(reply.body);
    EXPECT_EQ(env["ok"], false);
    EXPECT_EQ(env["errors"][0]["code"], "MalformedJson");
}

TEST(Api, MissingScenarioIs422) {
    Json env = post(Api{}, "/api/v1/evaluate", Json::object(), 422);
    EXPECT_TRUE(has_error(env, "MissingField", "scenario"));
}

TEST(Api, PolicyInBodyApplies) {
    Json body = hypothesis_body("0.5");
    body["policy"] = {{"plaintiff_settle_threshold", "0.7"}};
    EXPECT_EQ(post(Api{}, "/api/v1/evaluate", body, 200)["result"]["plaintiff_action"], "Litigate");
    body["policy"] = {{"plaintiff_settle_threshold", "7"}};
    EXPECT_TRUE(has_error(post(Api{}, "/api/v1/evaluate", body, 422), "InvalidPolicy",
                          "policy.plaintiff_settle_threshold"));
}

TEST(Api, ServerDefaultPolicy) {
    ServiceConfig config;
    config.default_policy = PolicyConfig::make(Decimal::from_micros(700'000), Decimal::from_micros(800'000)).value();
    EXPECT_EQ(post(Api{config}, "/api/v1/evaluate", hypothesis_body("0.5"), 200)["result"]["plaintiff_action"],
              "Litigate");
}

TEST(Api, Sweep) {
    Json body = hypothesis_body("0.8");
    body["min"] = "0.5";
    body["max"] = "0.8";
    body["steps"] = 2;
    Json env = post(Api{}, "/api/v1/sweep", body, 200);
    ASSERT_EQ(env["result"]["points"].size(), 2u);
    EXPECT_EQ(env["result"]["points"][0]["tc"], "64000.00");
    EXPECT_EQ(env["result"]["points"][1]["tc"], "4000.00");

    body["max"] = "0.5";
    EXPECT_TRUE(has_error(post(Api{}, "/api/v1/sweep", body, 422), "InvalidRange", "min"));
    body["param"] = "claim";
    EXPECT_TRUE(has_error(post(Api{}, "/api/v1/sweep", body, 422), "UnknownParameter", "param"));
}

TEST(Api, BreakEven) {
    Json body = hypothesis_body("0.8");
    body["target_fraction"] = "0.04";
    EXPECT_EQ(post(Api{}, "/api/v1/breakeven", body, 200)["result"]["fraction"], "0.8000");
    body["target_fraction"] = "2.0";
    EXPECT_TRUE(has_error(post(Api{}, "/api/v1/breakeven", body, 422), "NoSolution", "target_fraction"));
}

TEST(Api, Compare) {
    Json body = hypothesis_body("0.8");
    body["before"] = "BG-pre-reform";
    body["after"] = "BG-pre-reform";
    EXPECT_EQ(post(Api{}, "/api/v1/compare", body, 200)["result"]["verdict"], "ReformIneffective");
    body["after"] = "reformed";
    Json env = post(Api{}, "/api/v1/compare", body, 200);
    EXPECT_EQ(env["result"]["delta"], "-10000.00");
    EXPECT_EQ(env["result"]["verdict"], "ReformEffective");
    body["after"] = Json{{"name", "inline"},
                         {"indicators", {{"z", 1}, {"kb", 1}, {"t_long", 1}, {"y", 0}, {"ka", 0}, {"t_short", 0}}}};
    EXPECT_EQ(post(Api{}, "/api/v1/compare", body, 200)["result"]["delta"], "2000.00");
    body["after"] = "missing";
    EXPECT_TRUE(has_error(post(Api{}, "/api/v1/compare", body, 422), "UnknownPreset", "after"));
}

TEST(Api, Presets) {
    auto reply = Api{}.handle("GET", "/api/v1/presets", "");
    ASSERT_EQ(reply.status, 200);
    Json env = Json::parse(reply.body);
    const auto& list = env["result"];
    auto it = std::find_if(list.begin(), list.end(), [](const Json& p) { return p["name"] == "BG-pre-reform"; });
    ASSERT_NE(it, list.end());
    EXPECT_EQ((*it)["indicators"]["z"], 1);
    EXPECT_TRUE(std::any_of(list.begin(), list.end(), [](const Json& p) { return p["name"] == "reformed"; }));
}

TEST(Api, HealthzAndRouting) {
    Api api;
    auto health = api.handle("GET", "/healthz", "");
    EXPECT_EQ(health.status, 200);
    EXPECT_EQ(health.body, "ok");

    auto unknown = api.handle("GET", "/nope", "");
    EXPECT_EQ(unknown.status, 404);
    EXPECT_EQ(Json::parse(unknown.body)["ok"], false);

    // unversioned API paths are not served
    EXPECT_EQ(api.handle("POST", "/api/evaluate", hypothesis_body("0.8").dump()).status, 404);
    EXPECT_EQ(api.handle("GET", "/api/v1/evaluate", "").status, 405);
}

TEST(Api, StatelessUnderReordering) {
    Api api;
    std::vector<std::pair<std::string, Json>> requests;
    for (const char* f : {"0.8", "0.5", "0.9", "0.33"}) requests.emplace_back("/api/v1/evaluate", hypothesis_body(f));
    Json be = hypothesis_body("0.8");
    be["target_fraction"] = "0.1";
    requests.emplace_back("/api/v1/breakeven", be);

    std::vector<std::string> forward, backward(requests.size());
    for (const auto& [path, body] : requests) forward.push_back(api.handle("POST", path, body.dump()).body);
    for (std::size_t i = requests.size(); i-- > 0;)
        backward[i] = api.handle("POST", requests[i].first, requests[i].second.dump()).body;
    EXPECT_EQ(forward, backward);
}

TEST(HttpServer, ParseListen) {
    auto a = parse_listen("127.0.0.1:8080");
    ASSERT_TRUE(a);
    EXPECT_EQ(a->host, "127.0.0.1");
    EXPECT_EQ(a->port, 8080);
    EXPECT_EQ(parse_listen("[::1]:9000")->host, "::1");
    EXPECT_FALSE(parse_listen("8080"));
    EXPECT_FALSE(parse_listen("host:"));
    EXPECT_FALSE(parse_listen("host:70000"));
    EXPECT_FALSE(parse_listen("host:-1"));
}

TEST(HttpServer, ServesOverLoopback) {
    ServiceConfig config;
    config.allow_origin = "http://localhost:5173";
    HttpServer server{Api(config)};
    int port = server.bind({"127.0.0.1", 0});
    ASSERT_GT(port, 0);
    std::thread worker([&] { server.serve(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto health = client.Get("/healthz");
    ASSERT_TRUE(health);
    EXPECT_EQ(health->status, 200);
    EXPECT_EQ(health->body, "ok");

    auto res = client.Post("/api/v1/evaluate", hypothesis_body("0.8").dump(), "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "http://localhost:5173");
    EXPECT_EQ(Json::parse(res->body)["result"]["tc"], "4000.00");

    auto missing = client.Get("/api/v2/evaluate");
    ASSERT_TRUE(missing);
    EXPECT_EQ(missing->status, 404);

    server.stop();
    worker.join();
}
