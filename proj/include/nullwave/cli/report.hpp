#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nullwave::report {

inline constexpr int kSchemaVersion = 1;

struct Row {
    std::string key;
    std::string value;
    friend bool operator==(const Row&, const Row&) = default;
};

/// A checked claim with the source location and wording it reproduces.
struct Verdict {
    std::string id;
    bool passed = false;
    std::string citation;
    std::string quote;
    std::string detail;
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Trace {
    std::string text;
    friend bool operator==(const Trace&, const Trace&) = default;
};

using Entry = std::variant<Row, Verdict, Trace>;

struct Section {
    std::string name;
    std::vector<Entry> entries;

    void row(std::string key, std::string value);
    void verdict(std::string id, bool passed, std::string citation, std::string quote, std::string detail = {});
    void trace(std::string text);
    friend bool operator==(const Section&, const Section&) = default;
};

struct Report {
    int schema_version = kSchemaVersion;
    std::string command;
    std::vector<Section> sections;

    Section& section(std::string name);
    bool all_passed() const;
    std::vector<Verdict> failures() const;
    friend bool operator==(const Report&, const Report&) = default;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Human-readable rendering.
std::string to_text(const Report& r);

/// Line-delimited machine form:
///   nullwave-report <version>
///   command <TAB> <text>
///   section <TAB> <name>
///   row <TAB> <key> <TAB> <value>
///   verdict <TAB> PASS|FAIL <TAB> <id> <TAB> <citation> <TAB> <quote> <TAB> <detail>
///   trace <TAB> <text>
///   end
/// Fields escape backslash, tab and newline as \\, \t and \n.
std::string to_machine(const Report& r);

/// Inverse of to_machine. Throws FormatError on malformed input or an
/// unsupported schema version.
Report parse_machine(std::string_view text);

}  // namespace nullwave::report
