#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "litigacost/commands.hpp"

using namespace litigacost;
using namespace litigacost::cli;

namespace {

const char* kDoc = R"({
  "schema_version": 1,
  "presets": [{"name": "worse", "indicators": {"z": 1, "kb": 1, "t_long": 1, "y": 0, "ka": 0, "t_short": 0}}],
  "scenarios": [
    {"id": "h1", "currency": "EUR", "claim": "100000.00", "confirmation": "0.8",
     "plaintiff_trial_cost": "9000.00", "defendant_trial_cost": "9000.00",
     "plaintiff_settle_cost": "9000.00", "defendant_settle_cost": "9000.00",
     "indicators": {"z": 1, "kb": 1, "t_long": 1, "y": 1, "ka": 0, "t_short": 0}},
    {"id": "h2", "currency": "EUR", "claim": "100000.00", "confirmation": "0.5",
     "plaintiff_trial_cost": "9000.00", "defendant_trial_cost": "9000.00",
     "indicators": {"z": 1, "kb": 1, "t_long": 1, "y": 1, "ka": 0, "t_short": 0}}
  ]
})";

class CommandsTest : public ::testing::Test {
protected:
    void SetUp() override {
        std::random_device rd;
        dir_ = std::filesystem::temp_directory_path() / ("litigacost-cmd-" + std::to_string(rd()));
        std::filesystem::create_directories(dir_);
        doc_ = write("doc.json", kDoc);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& content) {
        auto path = dir_ / name;
        std::ofstream(path) << content;
        return path.string();
    }

    std::filesystem::path dir_;
    std::string doc_;
};

}  // namespace

TEST_F(CommandsTest, EvalCsv) {
    auto r = run_eval({doc_, "csv", {}});
    ASSERT_EQ(r.exit_code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("h1,EUR,100000.00,0.8000,2,4000.00,0.0400,Litigate,ProposeSettlement,false"),
              std::string::npos);
    EXPECT_NE(r.out.find("h2,EUR,100000.00,0.5000,2,64000.00,0.6400,ProposeSettlement"), std::string::npos);
}

TEST_F(CommandsTest, EvalMissingFileIsIoError) {
    auto r = run_eval({(dir_ / "missing.json").string(), "csv", {}});
    EXPECT_EQ(r.exit_code, kExitIo);
    EXPECT_TRUE(r.out.empty());
}

TEST_F(CommandsTest, EvalInvalidDocumentPrintsNothingToStdout) {
    auto bad = write("bad.json", R"({"schema_version": 1, "scenarios": [
        {"id": "ok", "currency": "EUR", "claim": "10.00", "confirmation": "0.5",
         "plaintiff_trial_cost": "0", "defendant_trial_cost": "0",
         "indicators": {"z": 0, "kb": 1, "t_long": 1, "y": 0, "ka": 0, "t_short": 0}},
        {"id": "broken", "currency": "EUR", "claim": "10.00", "confirmation": "0.5",
         "plaintiff_trial_cost": "0", "defendant_trial_cost": "0",
         "indicators": {"z": 0, "kb": 1, "t_long": 1, "y": 0, "ka": 1, "t_short": 0}}]})");
    auto r = run_eval({bad, "csv", {}});
    EXPECT_EQ(r.exit_code, kExitValidation);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("broken"), std::string::npos);
    EXPECT_NE(r.err.find("indicators"), std::string::npos);
}

TEST_F(CommandsTest, PolicyPrecedence) {
    // threshold 0.7 makes h2 (0.64) litigate; 0.5 makes it settle
    auto high = write("high.json", R"({"plaintiff_settle_threshold": "0.7"})");
    auto low = write("low.json", R"({"plaintiff_settle_threshold": "0.5"})");
    auto h2_action = [&](PolicySources sources) {
        auto r = run_eval({doc_, "json", sources});
        EXPECT_EQ(r.exit_code, kExitOk) << r.err;
        return Json::parse(r.out)["results"][1]["plaintiff_action"].get<std::string>();
    };
    EXPECT_EQ(h2_action({}), "ProposeSettlement");
    EXPECT_EQ(h2_action({std::nullopt, high}), "Litigate");
    EXPECT_EQ(h2_action({low, high}), "ProposeSettlement");
    EXPECT_EQ(h2_action({high, low}), "Litigate");
}

TEST_F(CommandsTest, BadPolicyFile) {
    auto bad = write("bad-policy.json", R"({"plaintiff_settle_threshold": "1.5"})");
    EXPECT_EQ(run_eval({doc_, "csv", {bad, std::nullopt}}).exit_code, kExitValidation);
    EXPECT_EQ(run_eval({doc_, "csv", {(dir_ / "nope").string(), std::nullopt}}).exit_code, kExitIo);
}

TEST_F(CommandsTest, Sweep) {
    SweepOptions opt;
    opt.scenarios_path = doc_;
    opt.id = "h1";
    opt.min = "0.5";
    opt.max = "0.8";
    opt.steps = 4;
    opt.format = "csv";
    auto r = run_sweep(opt);
    ASSERT_EQ(r.exit_code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("0.6000,2,44000.00"), std::string::npos) << r.out;

    opt.param = "claim";
    EXPECT_EQ(run_sweep(opt).exit_code, kExitValidation);
    opt.param = "confirmation";
    opt.id = "nope";
    EXPECT_EQ(run_sweep(opt).exit_code, kExitValidation);
    opt.id = "h1";
    opt.max = "0.5";
    EXPECT_EQ(run_sweep(opt).exit_code, kExitValidation);
    opt.max = "1.5";
    EXPECT_EQ(run_sweep(opt).exit_code, kExitValidation);
}

TEST_F(CommandsTest, BreakEven) {
    auto r = run_breakeven({doc_, "h1", "0.04", "table"});
    ASSERT_EQ(r.exit_code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "0.8000\n");
    auto none = run_breakeven({doc_, "h1", "2.0", "table"});
    EXPECT_EQ(none.exit_code, kExitValidation);
    EXPECT_NE(none.err.find("NoSolution"), std::string::npos);
    EXPECT_EQ(run_breakeven({doc_, "h1", "abc", "table"}).exit_code, kExitValidation);
}

TEST_F(CommandsTest, Compare) {
    auto r = run_compare({doc_, "h1", "BG-pre-reform", "BG-pre-reform", "json"});
    ASSERT_EQ(r.exit_code, kExitOk) << r.err;
    EXPECT_EQ(Json::parse(r.out)["verdict"], "ReformIneffective");

    auto worse = run_compare({doc_, "h1", "BG-pre-reform", "worse", "json"});
    ASSERT_EQ(worse.exit_code, kExitOk) << worse.err;
    EXPECT_EQ(Json::parse(worse.out)["delta"], "2000.00");

    auto unknown = run_compare({doc_, "h1", "nope", "also-nope", "table"});
    EXPECT_EQ(unknown.exit_code, kExitValidation);
    EXPECT_NE(unknown.err.find("nope"), std::string::npos);
}

TEST_F(CommandsTest, UnknownFormat) {
    EXPECT_EQ(run_eval({doc_, "xml", {}}).exit_code, kExitValidation);
}
