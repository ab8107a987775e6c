#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dlmp/run.hpp"

namespace {

// "inf" or a non-negative integer
bool parse_lambda(const std::string& text, std::int64_t& lambda) {
    if (text == "inf" || text == "INF" || text == "Inf") {
        lambda = dlmp::unlimited_distance;
        return true;
    }
    try {
        std::size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != text.size() || value < 0) return false;
        lambda = value;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (d,lambda)-MP search and reliability for multistate flow networks"};
    app.require_subcommand(1);

    dlmp::RunConfig config;
    std::string lambda_text = "inf";
    std::string format_text = "table";
    std::string pmf_text;

    auto add_common = [&](CLI::App* cmd, bool with_demand) {
        cmd->add_option("-n,--network", config.network_path, "network definition file")
            ->required();
        if (with_demand) {
            cmd->add_option("-d,--demand", config.demand, "required flow units")->required();
            cmd->add_option("-l,--lambda", lambda_text,
                            "transmission distance limit (integer or 'inf')");
        }
        cmd->add_option("--format", format_text, "output format: table or json")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--pmf", pmf_text, "synthesize pmfs: 'uniform'")
            ->check(CLI::IsMember({"uniform"}));
        cmd->add_option("--sigma-guard", config.sigma_guard,
                        "refuse inclusion-exclusion beyond this many minimal vectors");
        cmd->add_option("--state-limit", config.state_limit,
                        "oracle state-space ceiling");
        cmd->add_option("-j,--jobs", config.jobs, "worker threads (0 = auto)");
        cmd->add_flag("--no-timing", config.no_timing,
                      "report elapsed_ms as 0 for reproducible output");
    };

    CLI::App* mps = app.add_subcommand("mps", "enumerate the minimal paths");
    add_common(mps, false);
    CLI::App* dlmp_cmd = app.add_subcommand("dlmp", "find all (d,lambda)-MPs");
    add_common(dlmp_cmd, true);
    CLI::App* reliability =
        app.add_subcommand("reliability", "compute the (d,lambda) reliability");
    add_common(reliability, true);
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force state-space reference");
    add_common(oracle, true);
    CLI::App* verify =
        app.add_subcommand("verify", "run search and oracle, compare results");
    add_common(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return dlmp::exit_input_error;
    }

    if (mps->parsed()) config.command = dlmp::Command::mps;
    if (dlmp_cmd->parsed()) config.command = dlmp::Command::dlmp;
    if (reliability->parsed()) config.command = dlmp::Command::reliability;
    if (oracle->parsed()) config.command = dlmp::Command::oracle;
    if (verify->parsed()) config.command = dlmp::Command::verify;

    if (!parse_lambda(lambda_text, config.lambda)) {
        std::cerr << "error: lambda must be a non-negative integer or 'inf'\n";
        return dlmp::exit_input_error;
    }
    config.format =
        format_text == "json" ? dlmp::OutputFormat::json : dlmp::OutputFormat::table;
    config.uniform_pmfs = pmf_text == "uniform";

    return dlmp::run(config, std::cout, std::cerr);
}
