#include "nullwave/cli/report.hpp"
#include "nullwave/cli/scenario.hpp"
#include "nullwave/cli/suites.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace nullwave;

namespace {

report::Report sample_report() {
    report::Report r;
    r.command = "verify sample";
    auto& s = r.section("values");
    s.row("h(zeta1,zeta4)", "-rho^10");
    s.verdict("pairing-14", true, "Sec. 5 Step 3", "h(zeta1, zeta4) = -rho^10");
    s.verdict("tricky", false, "Sec. 5", "tab\there, newline\nthere, backslash \\", "detail");
    r.section("trace").trace("line one");
    return r;
}

const char* kCustom = R"(# standard shape with rho^5 in place of rho^10
rho = symbolic
zeta1 = 1, 0, 1, 0
zeta2 = -1, 0, 0, -1
zeta3 = 1/2*rho^-5, 1/2*rho^-5, 0, 0
zeta4 = rho^5, -rho^5, 0, 0
oracle_rho = 2.5
format = machine
)";

bool has_row(const report::Report& r, const std::string& key, const std::string& value) {
    for (const auto& s : r.sections)
        for (const auto& e : s.entries)
            if (const auto* row = std::get_if<report::Row>(&e); row && row->key == key && row->value == value)
                return true;
    return false;
}

}  // namespace

TEST_CASE("machine reports round-trip", "[report]") {
    const report::Report r = sample_report();
    const std::string text = report::to_machine(r);
    CHECK(text.rfind("nullwave-report 1\n", 0) == 0);
    CHECK(report::parse_machine(text) == r);
    CHECK(report::to_machine(report::parse_machine(text)) == text);
    CHECK_FALSE(r.all_passed());
    REQUIRE(r.failures().size() == 1);
    CHECK(r.failures()[0].id == "tricky");
    CHECK(report::to_text(r).find("FAIL") != std::string::npos);
}

TEST_CASE("malformed machine reports are rejected", "[report]") {
    const std::string good = report::to_machine(sample_report());
    CHECK_THROWS_AS(report::parse_machine(""), report::FormatError);
    CHECK_THROWS_AS(report::parse_machine("nullwave-report 2\nend\n"), report::FormatError);
    CHECK_THROWS_AS(report::parse_machine(good.substr(0, good.size() - 4)), report::FormatError);
    CHECK_THROWS_AS(report::parse_machine("nullwave-report 1\nrow\ta\tb\nend\n"), report::FormatError);
    CHECK_THROWS_AS(report::parse_machine("nullwave-report 1\nsection\ts\nverdict\tMAYBE\tx\tc\tq\td\nend\n"),
                    report::FormatError);
    CHECK_THROWS_AS(report::parse_machine("nullwave-report 1\nsection\ts\nrow\ta\\q\tb\nend\n"),
                    report::FormatError);
}

TEST_CASE("scenario parsing", "[scenario]") {
    const Scenario empty = parse_scenario("# nothing\n\n");
    CHECK_FALSE(empty.zetas.has_value());
    CHECK(empty.oracle_rhos == std::vector<double>{2.0, 3.0});
    CHECK(empty.format == ReportFormat::Text);

    const Scenario s = parse_scenario(kCustom);
    REQUIRE(s.zetas.has_value());
    CHECK(s.oracle_rhos == std::vector<double>{2.5});
    CHECK(s.format == ReportFormat::Machine);
    CHECK(s.format_set);
    CHECK((*s.zetas)[3] == CoVec4(RhoRational::monomial(1, 5), RhoRational::monomial(-1, 5), 0, 0));
    CHECK(s.config().zeta(3) == (*s.zetas)[2]);
}

TEST_CASE("scenario errors name the line", "[scenario]") {
    auto message = [](const std::string& text) {
        try {
            parse_scenario(text);
        } catch (const ScenarioError& e) {
            return std::string(e.what());
        }
        return std::string("accepted");
    };
    CHECK(message("format = text\nformat = machine\n") == "scenario line 2: duplicate key 'format'");
    CHECK(message("colour = red\n") == "scenario line 1: unknown key 'colour'");
    CHECK(message("just words\n") == "scenario line 1: expected 'key = value'");
    CHECK(message("rho = 2\n") == "scenario line 1: rho supports only 'symbolic'");
    CHECK(message("oracle_rho = 5\n") == "scenario line 1: oracle_rho must lie in [1.5, 4]");
    CHECK(message("oracle_rho = two\n") == "scenario line 1: oracle_rho entry 'two' is not a decimal");
    CHECK(message("\nzeta3 = 1, 2, 3\n") == "scenario line 2: zeta3 needs four components");
    CHECK(message("zeta1 = 1, 0, 1, 0\n").find("all four") != std::string::npos);
    CHECK(message("zeta1 = 1, 0, 1, rho^\n").rfind("scenario line 1: zeta1 component 3", 0) == 0);

    std::string not_null = kCustom;
    not_null.replace(not_null.find("zeta1 = 1, 0, 1, 0"), 18, "zeta1 = 1, 1, 1, 0");
    CHECK(message(not_null).rfind("scenario covectors rejected", 0) == 0);
    CHECK_THROWS_AS(load_scenario("/nonexistent/file.scenario"), ScenarioError);
}

TEST_CASE("command words", "[suites]") {
    CHECK(parse_command({"report", "pairing-table"}) == Command::PairingTable);
    CHECK(parse_command({"derive", "forms"}) == Command::DeriveForms);
    CHECK(parse_command({"verify", "all"}) == Command::VerifyAll);
    CHECK(parse_command({"oracle"}) == Command::Oracle);
    CHECK(parse_command({"oracle", "verify", "total"}) == Command::Oracle);
    CHECK_FALSE(parse_command({"verify", "nothing"}).has_value());
    CHECK_FALSE(parse_command({}).has_value());
    for (const auto& name : command_names()) {
        std::vector<std::string> words;
        std::size_t start = 0;
        while (start <= name.size()) {
            const auto space = std::min(name.find(' ', start), name.size());
            words.push_back(name.substr(start, space - start));
            start = space + 1;
        }
        INFO(name);
        CHECK(parse_command(words).has_value());
    }
}

TEST_CASE("suites on the standard configuration", "[suites]") {
    const report::Report r = run_command(Command::PairingTable, Scenario{});
    CHECK(r.all_passed());
    CHECK(has_row(r, "h(zeta1,zeta4)", "-rho^10"));
    const report::Report g = run_command(Command::VerifyGauge, Scenario{});
    CHECK(g.all_passed());
    CHECK(report::parse_machine(report::to_machine(g)) == g);
}

TEST_CASE("suites on custom covectors skip the published values", "[suites]") {
    const Scenario s = parse_scenario(kCustom);
    const report::Report r = run_command(Command::PairingTable, s);
    CHECK(has_row(r, "published values", "not compared: custom covectors"));
    CHECK(has_row(r, "h(zeta1,zeta4)", "-rho^5"));
    CHECK(r.all_passed());
    CHECK(run_command(Command::VerifyGauge, s).all_passed());
}
