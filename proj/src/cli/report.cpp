#include "nullwave/cli/report.hpp"

#include <sstream>

namespace nullwave::report {

void Section::row(std::string key, std::string value) { entries.emplace_back(Row{std::move(key), std::move(value)}); }

void Section::verdict(std::string id, bool passed, std::string citation, std::string quote, std::string detail) {
    entries.emplace_back(Verdict{std::move(id), passed, std::move(citation), std::move(quote), std::move(detail)});
}

void Section::trace(std::string text) { entries.emplace_back(Trace{std::move(text)}); }

Section& Report::section(std::string name) {
    sections.push_back({std::move(name), {}});
    return sections.back();
}

bool Report::all_passed() const { return failures().empty(); }

std::vector<Verdict> Report::failures() const {
    std::vector<Verdict> out;
    for (const auto& s : sections)
        for (const auto& e : s.entries)
            if (const auto* v = std::get_if<Verdict>(&e); v && !v->passed) out.push_back(*v);
    return out;
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << "nullwave " << r.command << "\n";
    for (const auto& s : r.sections) {
        os << "\n== " << s.name << " ==\n";
        for (const auto& e : s.entries) {
            if (const auto* row = std::get_if<Row>(&e)) {
                os << "  " << row->key << ": ";
                if (row->value.find('\n') == std::string::npos) {
                    os << row->value << "\n";
                } else {
                    os << "\n";
                    std::istringstream lines(row->value);
                    for (std::string line; std::getline(lines, line);) os << "      " << line << "\n";
                }
            } else if (const auto* v = std::get_if<Verdict>(&e)) {
                os << "  [" << (v->passed ? "PASS" : "FAIL") << "] " << v->id;
                if (!v->detail.empty()) os << ": " << v->detail;
                os << "\n      " << v->citation << ": \"" << v->quote << "\"\n";
            } else {
                os << "    | " << std::get<Trace>(e).text << "\n";
            }
        }
    }
    const auto failed = r.failures();
    os << "\n" << (failed.empty() ? "all verdicts passed" : std::to_string(failed.size()) + " verdict(s) failed") << "\n";
    return os.str();
}

namespace {

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

std::string unescape(std::string_view s, std::size_t line) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (++i == s.size()) throw FormatError("line " + std::to_string(line) + ": dangling escape");
        switch (s[i]) {
            case '\\': out += '\\'; break;
            case 't': out += '\t'; break;
            case 'n': out += '\n'; break;
            default: throw FormatError("line " + std::to_string(line) + ": unknown escape \\" + std::string(1, s[i]));
        }
    }
    return out;
}

std::vector<std::string> split_fields(std::string_view line, std::size_t number) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        fields.push_back(unescape(line.substr(start, tab == std::string_view::npos ? tab : tab - start), number));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
    }
    return fields;
}

}  // namespace

std::string to_machine(const Report& r) {
    std::ostringstream os;
    os << "nullwave-report " << r.schema_version << "\n";
    os << "command\t" << escape(r.command) << "\n";
    for (const auto& s : r.sections) {
        os << "section\t" << escape(s.name) << "\n";
        for (const auto& e : s.entries) {
            if (const auto* row = std::get_if<Row>(&e)) {
                os << "row\t" << escape(row->key) << "\t" << escape(row->value) << "\n";
            } else if (const auto* v = std::get_if<Verdict>(&e)) {
                os << "verdict\t" << (v->passed ? "PASS" : "FAIL") << "\t" << escape(v->id) << "\t" << escape(v->citation)
                   << "\t" << escape(v->quote) << "\t" << escape(v->detail) << "\n";
            } else {
                os << "trace\t" << escape(std::get<Trace>(e).text) << "\n";
            }
        }
    }
    os << "end\n";
    return os.str();
}

Report parse_machine(std::string_view text) {
    Report r;
    std::size_t number = 0;
    std::size_t pos = 0;
    bool header = false;
    bool ended = false;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) throw FormatError("missing final newline");
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++number;
        auto fail = [&](const std::string& what) { return FormatError("line " + std::to_string(number) + ": " + what); };
        if (ended) throw fail("content after end");
        if (!header) {
            const std::string_view prefix = "nullwave-report ";
            if (line.substr(0, prefix.size()) != prefix) throw fail("missing header");
            try {
                r.schema_version = std::stoi(std::string(line.substr(prefix.size())));
            } catch (const std::exception&) {
                throw fail("bad schema version");
            }
            if (r.schema_version != kSchemaVersion)
                throw fail("unsupported schema version " + std::to_string(r.schema_version));
            header = true;
            continue;
        }
        if (line == "end") {
            ended = true;
            continue;
        }
        auto f = split_fields(line, number);
        const std::string& tag = f.front();
        if (tag == "command" && f.size() == 2) {
            r.command = f[1];
        } else if (tag == "section" && f.size() == 2) {
            r.sections.push_back({f[1], {}});
        } else if (r.sections.empty()) {
            throw fail("entry outside a section");
        } else if (tag == "row" && f.size() == 3) {
            r.sections.back().row(f[1], f[2]);
        } else if (tag == "verdict" && f.size() == 6 && (f[1] == "PASS" || f[1] == "FAIL")) {
            r.sections.back().verdict(f[2], f[1] == "PASS", f[3], f[4], f[5]);
        } else if (tag == "trace" && f.size() == 2) {
            r.sections.back().trace(f[1]);
        } else {
            throw fail("unrecognized record '" + tag + "' with " + std::to_string(f.size()) + " fields");
        }
    }
    if (!header) throw FormatError("empty report");
    if (!ended) throw FormatError("missing end record");
    return r;
}

}  // namespace nullwave::report
