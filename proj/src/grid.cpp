#include "pcf/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "pcf/errors.hpp"

namespace pcf {

namespace {

double parse_real(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) throw DomainError("grid: empty value");
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw DomainError("grid: cannot parse '" + std::string(s) + "'");
    if (!std::isfinite(v)) throw DomainError("grid: non-finite value");
    return v;
}

double canonical(double v, double step) {
    if (std::fabs(v) < 1e-9 * step) return 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

}  // namespace

std::vector<double> progression(double start, double stop, double step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
        throw DomainError("grid: non-finite progression");
    if (!(step > 0.0)) throw DomainError("grid: step must be > 0");
    if (stop < start) throw DomainError("grid: stop < start");
    const double span = (stop - start) / step;
    const auto count = static_cast<long long>(std::floor(span + 1e-9 * std::max(1.0, span)));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (long long i = 0; i <= count; ++i) out.push_back(canonical(start + static_cast<double>(i) * step, step));
    return out;
}

std::vector<double> parse_axis(std::string_view text) {
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        const auto c1 = item.find(':');
        if (c1 == std::string_view::npos) {
            out.push_back(parse_real(item));
        } else {
            const auto c2 = item.find(':', c1 + 1);
            if (c2 == std::string_view::npos || item.find(':', c2 + 1) != std::string_view::npos)
                throw DomainError("grid: expected start:stop:step, got '" + std::string(item) + "'");
            const auto values = progression(parse_real(item.substr(0, c1)), parse_real(item.substr(c1 + 1, c2 - c1 - 1)),
                                            parse_real(item.substr(c2 + 1)));
            out.insert(out.end(), values.begin(), values.end());
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

void Grid::validate() const {
    if (n_values.empty() || x_values.empty()) throw DomainError("grid: empty axis");
    for (double v : n_values)
        if (!std::isfinite(v)) throw DomainError("grid: non-finite n");
    for (double v : x_values)
        if (!std::isfinite(v)) throw DomainError("grid: non-finite x");
}

std::vector<double> default_n_values() { return {0.51, 0.6, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 50.0}; }

std::vector<double> default_x_values() { return progression(-30.0, 30.0, 0.1); }

Grid default_grid() { return {default_n_values(), default_x_values()}; }

}  // namespace pcf
