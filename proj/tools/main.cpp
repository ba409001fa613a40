#include "nullwave/cli/report.hpp"
#include "nullwave/cli/scenario.hpp"
#include "nullwave/cli/suites.hpp"
#include "nullwave/interaction/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kUsageError = 2;

std::string usage_footer() {
    std::string s = "Commands:\n";
    for (const auto& name : nullwave::command_names()) s += "  " + name + "\n";
    s += "\nExit status: 0 when every verdict passes, 1 when one fails, 2 on a usage or scenario error.";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace nullwave;

    CLI::App app{"Exact verification of the four-wave interaction symbol calculus", "nullwave"};
    app.footer(usage_footer());
    std::vector<std::string> words;
    std::string scenario_path;
    std::string format_name;
    std::string out_path;
    std::optional<double> rho;
    app.add_option("command", words, "Command words, e.g. 'verify items'")->required();
    app.add_option("--scenario", scenario_path, "Scenario file (key = value lines)");
    app.add_option("--format", format_name, "Report format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--out", out_path, "Also write the report to this file");
    app.add_option("--rho", rho, "Sample point for the oracle command, in [1.5, 4]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    const auto command = parse_command(words);
    if (!command) {
        std::string given;
        for (const auto& w : words) given += (given.empty() ? "" : " ") + w;
        std::cerr << "nullwave: unknown command '" << given << "'\n" << usage_footer() << "\n";
        return kUsageError;
    }
    if (rho && *command != Command::Oracle) {
        std::cerr << "nullwave: --rho applies to the oracle command only\n";
        return kUsageError;
    }
    if (rho && !(*rho >= oracle::kRhoMin && *rho <= oracle::kRhoMax)) {
        std::cerr << "nullwave: --rho must lie in [1.5, 4]\n";
        return kUsageError;
    }

    Scenario scenario;
    try {
        if (!scenario_path.empty()) scenario = load_scenario(scenario_path);
    } catch (const ScenarioError& e) {
        std::cerr << "nullwave: " << e.what() << "\n";
        return kUsageError;
    }
    ReportFormat format = scenario.format;
    if (!format_name.empty()) format = format_name == "machine" ? ReportFormat::Machine : ReportFormat::Text;

    RunOptions options;
    if (rho) options.oracle_rhos = {*rho};

    report::Report result;
    try {
        result = run_command(*command, scenario, options);
    } catch (const std::exception& e) {
        std::cerr << "nullwave: internal error: " << e.what() << "\n";
        return 1;
    }

    const std::string rendered = format == ReportFormat::Machine ? report::to_machine(result) : report::to_text(result);
    std::cout << rendered;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!(out << rendered)) {
            std::cerr << "nullwave: cannot write " << out_path << "\n";
            return kUsageError;
        }
    }

    const auto failed = result.failures();
    for (const auto& v : failed) std::cerr << "nullwave: verdict failed: " << v.id << " (" << v.citation << ")\n";
    return failed.empty() ? 0 : 1;
}
