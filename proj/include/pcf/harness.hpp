#pragma once

// Grid sweeps that check each inequality on F_n and h_n against the oracle.
//
// Points are independent.  Sweeps run under OpenMP when the policy is
// ExecutionPolicy::parallel; the serial policy is the reference
// implementation and must produce identical reports.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pcf/enclosure.hpp"
#include "pcf/grid.hpp"
#include "pcf/oracle.hpp"

namespace pcf {

enum class TheoremId {
    eso,            ///< 1 < F < (n+1/2)/(n-1/2)
    thm1,           ///< five-term chain on F
    thm4,           ///< all-x bounds on h
    remark1,        ///< half-line bound sqrt((n+3/2)/(n-1/2)), x > 0
    equality_case,  ///< h_{-1/2}(x) = 1/x
    monotone_F,     ///< F decreasing in x
    conjecture,     ///< F < g[-1/2,1/2]
    limits,         ///< F -> 1 and F -> (n+1/2)/(n-1/2) as x -> +-inf
};

std::string_view to_string(TheoremId id);

/// Accepts the report ids above plus the CLI spellings "equality" and "monotone".
std::optional<TheoremId> theorem_from_string(std::string_view text);

enum class Status { pass, fail, skip, inconclusive };

std::string_view to_string(Status s);
std::optional<Status> status_from_string(std::string_view text);

struct Record {
    double n = 0.0;
    double x = 0.0;
    std::string quantity;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  ///< rhs - lhs; NaN for skipped records
    Status status = Status::skip;
};

struct VerificationReport {
    TheoremId theorem = TheoremId::eso;
    std::vector<Record> records;
    double min_margin = 0.0;  ///< over non-skipped records; +inf when there are none
    double argmin_n = 0.0;
    double argmin_x = 0.0;
    std::size_t violations = 0;
    std::size_t inconclusive = 0;
    std::size_t skipped = 0;
    std::size_t passed = 0;
    std::size_t escalated = 0;  ///< conjecture candidates re-evaluated

    /// Recomputes the summary fields from records.
    void summarize();
    void append(const VerificationReport& other);
};

enum class ExecutionPolicy { serial, parallel };

struct SweepOptions {
    OracleConfig oracle;
    RefinementConfig refinement;
    /// Absolute width added to the oracle error band; margins in
    /// (-band, 0] are inconclusive rather than violations.
    double tol = 0.0;
    /// remark1 only: keep x <= 0 points instead of skipping them.
    bool allow_negative_x = false;
    ExecutionPolicy policy = ExecutionPolicy::parallel;
};

/// Checks one inequality family over the grid.  Points outside the
/// family's order domain are recorded as skipped.  Oracle failures are
/// rethrown as OracleFailure carrying the point.
///
/// monotone_F compares consecutive x values of the grid (sorted); limits
/// treats x_values as the X values and compares X with 2X; equality_case
/// ignores n_values.
VerificationReport verify(TheoremId theorem, const Grid& grid, const SweepOptions& opts = {});

/// Margin g[-1/2,1/2](x) - F_n(x) at every grid point.  A nonpositive margin
/// is re-evaluated with a ten times tighter oracle and checked against
/// f_enclosure; only an enclosure lying entirely above g is reported as a
/// violation, anything else unresolved as inconclusive.
/// Throws DomainError when some n <= 1/2.
VerificationReport conjecture_scan(const Grid& grid, const SweepOptions& opts = {});

/// Ratios |F_n(X)-1| / |F_n(2X)-1| and |F_n(-X)-L| / |F_n(-2X)-L| with
/// L = (n+1/2)/(n-1/2); each must be at least 3.
VerificationReport limit_check(double n, double X, const SweepOptions& opts = {});

/// F_n strictly decreasing across consecutive entries of an ascending x grid.
VerificationReport monotone_check(double n, std::span<const double> x_grid, const SweepOptions& opts = {});

struct SharpnessSample {
    double n;
    double x;
    double f;
    double g;
    double ratio;  ///< f / g
};

/// F_n(x)/g[-1/2,1/2](x) for every (n, x); records how the conjecture bound
/// tightens as n grows.
std::vector<SharpnessSample> sharpness_trace(std::span<const double> n_values, std::span<const double> x_values,
                                             const SweepOptions& opts = {});

}  // namespace pcf
