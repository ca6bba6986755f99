#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cfgspace/cli.hpp"

namespace {

std::optional<cfgspace::json> load_input(const std::string& path) {
    if (path.empty()) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw cfgspace::ParseError(path + ": cannot open input file");
    try {
        return cfgspace::json::parse(in);
    } catch (const cfgspace::json::parse_error& e) {
        throw cfgspace::ParseError(path + ": " + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry of Boolean metric spaces over finite rings"};
    app.require_subcommand(1);

    std::string input_path;
    cfgspace::CliOptions options;

    const auto add_common = [&](CLI::App* cmd, bool input_required) {
        auto* opt = cmd->add_option("--input", input_path, "job file (one JSON document)");
        if (input_required) opt->required();
        cmd->add_flag("--pretty", options.pretty, "indent the JSON report");
        cmd->add_option("--limit", options.limit, "enumeration cap (points/tables)");
        cmd->add_option("--seed", options.seed, "seed for sampled checks");
    };

    add_common(app.add_subcommand("classify", "invariant sequences and isometry verdict"), true);
    add_common(app.add_subcommand("solve", "variety of a polynomial system"), true);
    add_common(app.add_subcommand("interpolate", "polynomials from a contractive table"), true);
    add_common(app.add_subcommand("orthogonalize", "referential of a space"), true);
    add_common(app.add_subcommand("base", "norm-sorted base and invariants"), true);
    add_common(app.add_subcommand("verify", "run the brute-force theorem suite"), false);

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        const auto input = load_input(input_path);
        const cfgspace::json report = cfgspace::run_command(command, input, options);
        std::cout << report.dump(options.pretty ? 2 : -1) << std::endl;
        if (command == "verify" && !report.at("pass").get<bool>()) return 2;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << cfgspace::json{{"error", e.what()}}.dump() << std::endl;
        return 1;
    }
}
