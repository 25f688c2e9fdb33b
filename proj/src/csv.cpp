#include "pcf/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string_view>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_real(const std::string& s) {
    if (s == "nan" || s == "-nan") return std::numeric_limits<double>::quiet_NaN();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw DomainError("csv: bad number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string_view rest = line;
    while (true) {
        const auto comma = rest.find(',');
        fields.emplace_back(rest.substr(0, comma));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return fields;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const VerificationReport> reports) {
    out << kCsvHeader << '\n';
    for (const auto& report : reports) {
        const std::string_view id = to_string(report.theorem);
        for (const Record& r : report.records) {
            out << id << ',' << format_real(r.n) << ',' << format_real(r.x) << ',' << r.quantity << ','
                << format_real(r.lhs) << ',' << format_real(r.rhs) << ',' << format_real(r.margin) << ','
                << to_string(r.status) << '\n';
        }
    }
}

std::vector<CsvRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw DomainError("csv: missing header");
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() != 8) throw DomainError("csv: expected 8 fields in '" + line + "'");
        const auto status = status_from_string(f[7]);
        if (!status) throw DomainError("csv: bad status '" + f[7] + "'");
        rows.push_back({f[0], parse_real(f[1]), parse_real(f[2]), f[3], parse_real(f[4]), parse_real(f[5]),
                        parse_real(f[6]), *status});
    }
    return rows;
}

VerificationReport summarize_rows(std::span<const CsvRow> rows) {
    VerificationReport report;
    if (!rows.empty()) {
        if (auto id = theorem_from_string(rows.front().theorem_id)) report.theorem = *id;
    }
    for (const CsvRow& r : rows) report.records.push_back({r.n, r.x, r.quantity, r.lhs, r.rhs, r.margin, r.status});
    report.summarize();
    return report;
}

}  // namespace pcf
