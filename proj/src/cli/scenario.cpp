#include "nullwave/cli/scenario.hpp"

#include "nullwave/interaction/oracle.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace nullwave {

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r";
    std::size_t a = s.find_first_not_of(ws);
    if (a == std::string_view::npos) return {};
    std::size_t b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
}

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        parts.push_back(trim(s.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

double parse_decimal(std::string_view s) {
    double v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) throw std::invalid_argument("not a decimal number");
    return v;
}

}  // namespace

NullConfig Scenario::config() const {
    if (!zetas) return standard_config();
    return NullConfig(*zetas);
}

Scenario parse_scenario(std::string_view text) {
    Scenario sc;
    std::array<std::optional<CoVec4>, 4> zetas;
    std::set<std::string> seen;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++number;
        auto fail = [&](const std::string& what) {
            return ScenarioError("scenario line " + std::to_string(number) + ": " + what);
        };
        std::string_view line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw fail("expected 'key = value'");
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw fail("empty key or value");
        if (!seen.insert(key).second) throw fail("duplicate key '" + key + "'");

        if (key == "rho") {
            if (value != "symbolic") throw fail("rho supports only 'symbolic'");
        } else if (key.size() == 5 && key.rfind("zeta", 0) == 0 && key[4] >= '1' && key[4] <= '4') {
            auto parts = split_commas(value);
            if (parts.size() != 4) throw fail(key + " needs four components");
            CoVec4 v;
            for (int i = 0; i < 4; ++i) {
                try {
                    v[i] = parse_rho_rational(parts[static_cast<std::size_t>(i)]);
                } catch (const std::exception& e) {
                    throw fail(key + " component " + std::to_string(i) + ": " + e.what());
                }
            }
            zetas[static_cast<std::size_t>(key[4] - '1')] = v;
        } else if (key == "oracle_rho") {
            sc.oracle_rhos.clear();
            for (auto part : split_commas(value)) {
                double rho = 0;
                try {
                    rho = parse_decimal(part);
                } catch (const std::exception&) {
                    throw fail("oracle_rho entry '" + std::string(part) + "' is not a decimal");
                }
                if (!(rho >= oracle::kRhoMin && rho <= oracle::kRhoMax)) throw fail("oracle_rho must lie in [1.5, 4]");
                sc.oracle_rhos.push_back(rho);
            }
        } else if (key == "format") {
            if (value == "text") sc.format = ReportFormat::Text;
            else if (value == "machine") sc.format = ReportFormat::Machine;
            else throw fail("format must be 'text' or 'machine'");
            sc.format_set = true;
        } else {
            throw fail("unknown key '" + key + "'");
        }
    }
    int given = 0;
    for (const auto& z : zetas) given += z.has_value();
    if (given != 0 && given != 4) throw ScenarioError("scenario: give all four covectors zeta1..zeta4 or none");
    if (given == 4) {
        sc.zetas = std::array<CoVec4, 4>{*zetas[0], *zetas[1], *zetas[2], *zetas[3]};
        try {
            NullConfig check(*sc.zetas);
        } catch (const ConfigError& e) {
            throw ScenarioError(std::string("scenario covectors rejected: ") + e.what());
        }
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot read scenario file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

}  // namespace nullwave
