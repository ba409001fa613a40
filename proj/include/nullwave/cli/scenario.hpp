#pragma once

#include "nullwave/geometry/null_config.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nullwave {

enum class ReportFormat { Text, Machine };

/// Run settings read from a flat key-value file.
///
///   # comment
///   rho = symbolic
///   zeta1 = 1, 0, 1, 0
///   zeta2 = -1, 0, 0, -1
///   zeta3 = 1/2*rho^-10, 1/2*rho^-10, 0, 0
///   zeta4 = rho^10, -rho^10, 0, 0
///   oracle_rho = 2.0, 3.0
///   format = machine
///
/// Keys may appear at most once. Covectors are given either all four or not
/// at all; each is four comma-separated expressions in rho.
struct Scenario {
    std::optional<std::array<CoVec4, 4>> zetas;
    std::vector<double> oracle_rhos{2.0, 3.0};
    ReportFormat format = ReportFormat::Text;
    bool format_set = false;

    /// The standard configuration, or the custom covectors validated as a
    /// NullConfig (ConfigError propagates).
    NullConfig config() const;
};

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ScenarioError naming the offending line.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);

}  // namespace nullwave
