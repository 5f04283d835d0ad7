// litigacost: command-line entry point.
//
//   litigacost eval      --scenarios FILE [--format table|csv|json] [--policy FILE]
//   litigacost sweep     --scenarios FILE --id ID --param confirmation --min F --max F --steps N [--format ...]
//   litigacost breakeven --scenarios FILE --id ID --target-fraction X
//   litigacost compare   --scenarios FILE --id ID --before PRESET --after PRESET
//   litigacost serve     --listen HOST:PORT [--allow-origin ORIGIN] [--policy FILE] [--scenarios FILE]

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "litigacost/commands.hpp"
#include "litigacost/service_http.hpp"

namespace {

using namespace litigacost;

int emit(const cli::CommandOutput& r) {
    if (r.exit_code == cli::kExitOk)
        std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    return r.exit_code;
}

std::optional<std::string> env_policy() {
    if (const char* v = std::getenv(cli::kPolicyEnvVar)) return std::string(v);
    return std::nullopt;
}

struct ServeOptions {
    std::string listen;
    std::string allow_origin;
    std::string policy_path;
    std::string scenarios_path;
};

int run_serve(const ServeOptions& opt) {
    auto addr = service::parse_listen(opt.listen);
    if (!addr) {
        std::cerr << "error: --listen expects HOST:PORT, got '" << opt.listen << "'\n";
        return cli::kExitValidation;
    }
    service::ServiceConfig config;
    config.allow_origin = opt.allow_origin;

    std::optional<std::string> policy_path;
    if (!opt.policy_path.empty()) policy_path = opt.policy_path;
    else policy_path = env_policy();
    if (policy_path && !policy_path->empty()) {
        auto text = cli::read_file(*policy_path);
        if (!text) {
            std::cerr << "error: cannot read policy file '" << *policy_path << "'\n";
            return cli::kExitIo;
        }
        auto policy = parse_policy_text(*text);
        if (!policy) return emit(cli::failure(cli::kExitValidation, policy.errors()));
        config.default_policy = *policy;
    }
    if (!opt.scenarios_path.empty()) {
        auto loaded = cli::load(opt.scenarios_path, {});
        if (auto* f = std::get_if<cli::CommandOutput>(&loaded)) return emit(*f);
        config.presets = std::get<cli::Loaded>(loaded).document.presets;
    }

    service::HttpServer server{service::Api(std::move(config))};
    int port = server.bind(*addr);
    if (port < 0) {
        std::cerr << "error: cannot listen on " << opt.listen << "\n";
        return cli::kExitIo;
    }
    std::cerr << "listening on " << addr->host << ":" << port << std::endl;
    return server.serve() ? cli::kExitOk : cli::kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Risk-adjusted transaction costs of trade litigation"};
    app.require_subcommand(1);

    std::string policy_path;

    cli::EvalOptions eval_opt;
    auto* eval = app.add_subcommand("eval", "Evaluate every scenario in a document");
    eval->add_option("--scenarios", eval_opt.scenarios_path, "Scenario document (JSON)")->required();
    eval->add_option("--format", eval_opt.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    eval->add_option("--policy", policy_path, "Policy file (overrides " + std::string(cli::kPolicyEnvVar) + ")");

    cli::SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "Sweep the confirmation fraction of one scenario");
    sweep->add_option("--scenarios", sweep_opt.scenarios_path)->required();
    sweep->add_option("--id", sweep_opt.id)->required();
    sweep->add_option("--param", sweep_opt.param)->required();
    sweep->add_option("--min", sweep_opt.min)->required();
    sweep->add_option("--max", sweep_opt.max)->required();
    sweep->add_option("--steps", sweep_opt.steps)->required();
    sweep->add_option("--format", sweep_opt.format)->check(CLI::IsMember({"table", "csv", "json"}));
    sweep->add_option("--policy", policy_path);

    cli::BreakEvenOptions be_opt;
    auto* breakeven = app.add_subcommand("breakeven", "Confirmation at which TC reaches a fraction of the claim");
    breakeven->add_option("--scenarios", be_opt.scenarios_path)->required();
    breakeven->add_option("--id", be_opt.id)->required();
    breakeven->add_option("--target-fraction", be_opt.target_fraction)->required();
    breakeven->add_option("--format", be_opt.format)->check(CLI::IsMember({"table", "csv", "json"}));

    cli::CompareOptions cmp_opt;
    auto* compare = app.add_subcommand("compare", "Compare TC under two institutional regimes");
    compare->add_option("--scenarios", cmp_opt.scenarios_path)->required();
    compare->add_option("--id", cmp_opt.id)->required();
    compare->add_option("--before", cmp_opt.before)->required();
    compare->add_option("--after", cmp_opt.after)->required();
    compare->add_option("--format", cmp_opt.format)->check(CLI::IsMember({"table", "csv", "json"}));

    ServeOptions serve_opt;
    auto* serve = app.add_subcommand("serve", "Start the HTTP service");
    serve->add_option("--listen", serve_opt.listen, "HOST:PORT")->required();
    serve->add_option("--allow-origin", serve_opt.allow_origin, "CORS origin to allow");
    serve->add_option("--policy", serve_opt.policy_path, "Default policy file");
    serve->add_option("--scenarios", serve_opt.scenarios_path, "Document whose presets are served");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitValidation;
    }

    cli::PolicySources sources{policy_path.empty() ? std::nullopt : std::optional<std::string>(policy_path),
                               env_policy()};
    if (*eval) {
        eval_opt.policy = sources;
        return emit(cli::run_eval(eval_opt));
    }
    if (*sweep) {
        sweep_opt.policy = sources;
        return emit(cli::run_sweep(sweep_opt));
    }
    if (*breakeven) return emit(cli::run_breakeven(be_opt));
    if (*compare) return emit(cli::run_compare(cmp_opt));
    if (*serve) return run_serve(serve_opt);
    return cli::kExitValidation;
}
