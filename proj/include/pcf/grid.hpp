#pragma once

#include <string_view>
#include <vector>

namespace pcf {

/// Evaluation grid.  Each axis is parsed from a comma-separated list whose
/// items are single values or progressions start:stop:step.  A progression
/// includes stop when step divides the range (to 1e-9 relative).
struct Grid {
    std::vector<double> n_values;
    std::vector<double> x_values;

    void validate() const;
};

/// Throws DomainError on malformed text, step <= 0, stop < start or
/// non-finite values.
std::vector<double> parse_axis(std::string_view text);

/// Values start, start+step, ..., canonicalised to 12 significant digits so
/// that e.g. -30 + 301*0.1 is the double nearest to 0.1.
std::vector<double> progression(double start, double stop, double step);

/// n in {0.51, 0.6, 0.75, 1, 1.5, 2, 3, 5, 10, 50}.
std::vector<double> default_n_values();

/// x in -30:30:0.1.
std::vector<double> default_x_values();

Grid default_grid();

}  // namespace pcf
