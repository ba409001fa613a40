#pragma once

#include "nullwave/cli/report.hpp"
#include "nullwave/cli/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nullwave {

enum class Command {
    PairingTable,
    DeriveForms,
    VerifyGauge,
    VerifyCancellation,
    VerifyItems,
    VerifyTotal,
    VerifyConformal,
    VerifyOrders,
    VerifyAll,
    Oracle,
};

/// "report pairing-table", "verify items", "oracle", "oracle verify total", ...
std::optional<Command> parse_command(const std::vector<std::string>& words);
std::string to_string(Command c);
/// Every accepted command line, for usage text.
std::vector<std::string> command_names();

struct RunOptions {
    /// Sample points for the floating-point comparison; the scenario's list
    /// when empty.
    std::vector<double> oracle_rhos;
};

/// Runs one suite. Verdicts that compare against the published values are
/// emitted only for the standard configuration; custom covectors get the
/// structural checks and tables alone.
report::Report run_command(Command c, const Scenario& scenario, const RunOptions& options = {});

}  // namespace nullwave
