#pragma once

// CSV hand-off of verification records:
//   theorem_id,n,x,quantity,lhs,rhs,margin,status
// comma separated, '.' decimal point, reals with 17 significant digits.

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pcf/harness.hpp"

namespace pcf {

struct CsvRow {
    std::string theorem_id;
    double n = 0.0;
    double x = 0.0;
    std::string quantity;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    Status status = Status::skip;
};

inline constexpr const char* kCsvHeader = "theorem_id,n,x,quantity,lhs,rhs,margin,status";

void write_csv(std::ostream& out, std::span<const VerificationReport> reports);

/// Throws DomainError on a missing or wrong header or a malformed row.
std::vector<CsvRow> read_csv(std::istream& in);

/// Rebuilds the summary statistics from rows alone.
VerificationReport summarize_rows(std::span<const CsvRow> rows);

}  // namespace pcf
