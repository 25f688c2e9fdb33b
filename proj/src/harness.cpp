#include "pcf/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "parallel.hpp"
#include "pcf/bounds.hpp"
#include "pcf/errors.hpp"

namespace pcf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEqualityTolerance = 1e-12;

// Relative error carried by an oracle ratio built from k values of U.
double oracle_band(const SweepOptions& opts, int k, double scale) {
    return k * opts.oracle.target_rel_err * std::fabs(scale) + opts.tol;
}

Status classify(double margin, double band) {
    if (margin > 0.0) return Status::pass;
    if (margin > -band) return Status::inconclusive;
    return Status::fail;
}

Record compare(double n, double x, std::string quantity, double lhs, double rhs, double band) {
    const double margin = rhs - lhs;
    return {n, x, std::move(quantity), lhs, rhs, margin, classify(margin, band)};
}

Record skip(double n, double x, std::string quantity) { return {n, x, std::move(quantity), kNaN, kNaN, kNaN, Status::skip}; }

template <class Fn>
auto at_point(double n, double x, Fn&& fn) {
    try {
        return fn();
    } catch (const OracleFailure&) {
        throw;
    } catch (const Error& e) {
        throw OracleFailure(n, x, e.what());
    }
}

struct PointResult {
    std::vector<Record> records;
    int escalated = 0;
};

PointResult eval_eso(double n, double x, const SweepOptions& opts) {
    if (!(n > 0.5)) return {{skip(n, x, "1<F"), skip(n, x, "F<(n+1/2)/(n-1/2)")}};
    const double f = static_cast<double>(oracle_f(n, x, opts.oracle));
    const FBounds b = universal_bounds(n);
    const double band = oracle_band(opts, 4, f);
    return {{compare(n, x, "1<F", b.lower, f, band), compare(n, x, "F<(n+1/2)/(n-1/2)", f, b.upper, band)}};
}

PointResult eval_chain(double n, double x, const SweepOptions& opts) {
    static const char* const names[] = {"c0<c1", "c1<1", "1<F", "F<g[-3/2;1/2]"};
    PointResult out;
    if (!(n > 0.5)) {
        for (const char* q : names) out.records.push_back(skip(n, x, q));
        return out;
    }
    const double f = static_cast<double>(oracle_f(n, x, opts.oracle));
    const FChain chain = f_chain({n, x}, f);
    const double band = oracle_band(opts, 4, f);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& a = chain.values[i];
        const auto& b = chain.values[i + 1];
        if (!a || !b) {
            out.records.push_back(skip(n, x, names[i]));
            continue;
        }
        out.records.push_back(compare(n, x, names[i], *a, *b, band));
    }
    return out;
}

PointResult eval_h_bounds(double n, double x, const SweepOptions& opts) {
    if (!(n > 0.5))
        return {{skip(n, x, "lower<h"), skip(n, x, "h<upper"), skip(n, x, "lower_shifted<h")}};
    const double h = static_cast<double>(oracle_h(n, x, opts.oracle));
    const HBounds b = h_bounds_all_x({n, x});
    const double band = oracle_band(opts, 2, h);
    PointResult out{{compare(n, x, "lower<h", b.lower, h, band), compare(n, x, "h<upper", h, b.upper, band)}};
    if (b.lower_shifted)
        out.records.push_back(compare(n, x, "lower_shifted<h", *b.lower_shifted, h, band));
    else
        out.records.push_back(skip(n, x, "lower_shifted<h"));
    return out;
}

PointResult eval_half_line(double n, double x, const SweepOptions& opts) {
    const char* q = "F<sqrt((n+3/2)/(n-1/2))";
    if (!(n > 0.5) || (!(x > 0.0) && !opts.allow_negative_x)) return {{skip(n, x, q)}};
    const double f = static_cast<double>(oracle_f(n, x, opts.oracle));
    return {{compare(n, x, q, f, half_line_bound(n), oracle_band(opts, 4, f))}};
}

PointResult eval_equality(double x, const SweepOptions& opts) {
    const double n = -0.5;
    const char* q = "|x*h-1|<=1e-12";
    if (x == 0.0) return {{skip(n, x, q)}};
    const long double xh = static_cast<long double>(x) * oracle_h(n, x, opts.oracle);
    const double deviation = static_cast<double>(std::fabs(xh - 1.0L));
    return {{compare(n, x, q, deviation, kEqualityTolerance, oracle_band(opts, 2, static_cast<double>(xh)))}};
}

PointResult eval_conjecture(double n, double x, const SweepOptions& opts) {
    const char* q = "F<g[-1/2;1/2]";
    const ParameterPoint p{n, x};
    const double gv = g(kConjectureG, p);
    const double f = static_cast<double>(oracle_f(n, x, opts.oracle));
    const double band = oracle_band(opts, 4, f);
    Record r = compare(n, x, q, f, gv, band);
    if (r.margin > 0.0) return {{r}};

    // Candidate counterexample: tighter oracle, then the enclosure.
    SweepOptions tight = opts;
    tight.oracle.target_rel_err = opts.oracle.target_rel_err / 10.0;
    const double f2 = static_cast<double>(oracle_f(n, x, tight.oracle));
    r = compare(n, x, q, f2, gv, oracle_band(tight, 4, f2));
    const Enclosure fe = f_enclosure(p, opts.refinement);
    if (fe.lo > gv)
        r.status = Status::fail;
    else if (r.status == Status::fail)
        r.status = Status::inconclusive;
    return {{r}, 1};
}

VerificationReport collect(TheoremId id, std::vector<PointResult>&& parts) {
    VerificationReport report;
    report.theorem = id;
    for (auto& part : parts) {
        for (auto& r : part.records) report.records.push_back(std::move(r));
        report.escalated += static_cast<std::size_t>(part.escalated);
    }
    report.summarize();
    return report;
}

VerificationReport sweep_points(TheoremId id, const Grid& grid, const SweepOptions& opts,
                                PointResult (*eval)(double, double, const SweepOptions&)) {
    const std::size_t nx = grid.x_values.size();
    auto parts = detail::map_indexed(grid.n_values.size() * nx, opts.policy, [&](std::size_t i) {
        const double n = grid.n_values[i / nx];
        const double x = grid.x_values[i % nx];
        return at_point(n, x, [&] { return eval(n, x, opts); });
    });
    return collect(id, std::move(parts));
}

VerificationReport monotone_sweep(const Grid& grid, const SweepOptions& opts) {
    std::vector<double> xs = grid.x_values;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    VerificationReport report;
    report.theorem = TheoremId::monotone_F;
    for (double n : grid.n_values) {
        if (!(n > 0.5)) {
            for (std::size_t i = 0; i + 1 < xs.size(); ++i) report.records.push_back(skip(n, xs[i], "F(x+dx)<F(x)"));
            continue;
        }
        report.append(monotone_check(n, xs, opts));
    }
    report.summarize();
    return report;
}

VerificationReport limits_sweep(const Grid& grid, const SweepOptions& opts) {
    const std::size_t nx = grid.x_values.size();
    auto parts = detail::map_indexed(grid.n_values.size() * nx, opts.policy, [&](std::size_t i) {
        const double n = grid.n_values[i / nx];
        const double big_x = grid.x_values[i % nx];
        if (!(n > 0.5) || !(big_x > 0.0))
            return PointResult{{skip(n, big_x, "|F(X)-1|/|F(2X)-1|>=3"), skip(n, -big_x, "|F(-X)-L|/|F(-2X)-L|>=3")}};
        SweepOptions serial = opts;
        serial.policy = ExecutionPolicy::serial;
        return PointResult{limit_check(n, big_x, serial).records};
    });
    return collect(TheoremId::limits, std::move(parts));
}

}  // namespace

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::eso: return "eso";
        case TheoremId::thm1: return "thm1";
        case TheoremId::thm4: return "thm4";
        case TheoremId::remark1: return "remark1";
        case TheoremId::equality_case: return "equality_case";
        case TheoremId::monotone_F: return "monotone_F";
        case TheoremId::conjecture: return "conjecture";
        case TheoremId::limits: return "limits";
    }
    return "unknown";
}

std::optional<TheoremId> theorem_from_string(std::string_view text) {
    for (auto id : {TheoremId::eso, TheoremId::thm1, TheoremId::thm4, TheoremId::remark1, TheoremId::equality_case,
                    TheoremId::monotone_F, TheoremId::conjecture, TheoremId::limits})
        if (to_string(id) == text) return id;
    if (text == "equality") return TheoremId::equality_case;
    if (text == "monotone") return TheoremId::monotone_F;
    return std::nullopt;
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
        case Status::inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::optional<Status> status_from_string(std::string_view text) {
    for (auto s : {Status::pass, Status::fail, Status::skip, Status::inconclusive})
        if (to_string(s) == text) return s;
    return std::nullopt;
}

void VerificationReport::summarize() {
    min_margin = std::numeric_limits<double>::infinity();
    argmin_n = argmin_x = kNaN;
    violations = inconclusive = skipped = passed = 0;
    for (const Record& r : records) {
        switch (r.status) {
            case Status::skip: ++skipped; continue;
            case Status::fail: ++violations; break;
            case Status::inconclusive: ++inconclusive; break;
            case Status::pass: ++passed; break;
        }
        if (r.margin < min_margin) {
            min_margin = r.margin;
            argmin_n = r.n;
            argmin_x = r.x;
        }
    }
}

void VerificationReport::append(const VerificationReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
    escalated += other.escalated;
    summarize();
}

VerificationReport verify(TheoremId theorem, const Grid& grid, const SweepOptions& opts) {
    opts.oracle.validate();
    switch (theorem) {
        case TheoremId::eso: grid.validate(); return sweep_points(theorem, grid, opts, eval_eso);
        case TheoremId::thm1: grid.validate(); return sweep_points(theorem, grid, opts, eval_chain);
        case TheoremId::thm4: grid.validate(); return sweep_points(theorem, grid, opts, eval_h_bounds);
        case TheoremId::remark1: grid.validate(); return sweep_points(theorem, grid, opts, eval_half_line);
        case TheoremId::equality_case: {
            if (grid.x_values.empty()) throw DomainError("grid: empty x axis");
            auto parts = detail::map_indexed(grid.x_values.size(), opts.policy, [&](std::size_t i) {
                const double x = grid.x_values[i];
                return at_point(-0.5, x, [&] { return eval_equality(x, opts); });
            });
            return collect(theorem, std::move(parts));
        }
        case TheoremId::monotone_F: grid.validate(); return monotone_sweep(grid, opts);
        case TheoremId::conjecture: return conjecture_scan(grid, opts);
        case TheoremId::limits: grid.validate(); return limits_sweep(grid, opts);
    }
    throw DomainError("verify: unknown theorem id");
}

VerificationReport conjecture_scan(const Grid& grid, const SweepOptions& opts) {
    grid.validate();
    opts.oracle.validate();
    for (double n : grid.n_values)
        if (!(n > 0.5)) throw DomainError("conjecture_scan: every n must exceed 1/2");
    return sweep_points(TheoremId::conjecture, grid, opts, eval_conjecture);
}

VerificationReport limit_check(double n, double X, const SweepOptions& opts) {
    if (!(n > 0.5)) throw DomainError("limit_check: requires n > 1/2");
    if (!(X > 0.0) || !std::isfinite(X)) throw DomainError("limit_check: requires finite X > 0");
    const double xs[4] = {X, 2.0 * X, -X, -2.0 * X};
    auto fs = detail::map_indexed(4, opts.policy, [&](std::size_t i) {
        return at_point(n, xs[i], [&] { return oracle_f(n, xs[i], opts.oracle); });
    });
    const long double limit_neg = (static_cast<long double>(n) + 0.5L) / (static_cast<long double>(n) - 0.5L);
    const long double dev[4] = {std::fabs(fs[0] - 1.0L), std::fabs(fs[1] - 1.0L), std::fabs(fs[2] - limit_neg),
                                std::fabs(fs[3] - limit_neg)};

    VerificationReport report;
    report.theorem = TheoremId::limits;
    auto add = [&](double x, const char* q, int a, int b) {
        const long double r = dev[a] / dev[b];
        const long double eps = 4.0L * opts.oracle.target_rel_err;
        const double band = static_cast<double>(r * (eps * fs[a] / dev[a] + eps * fs[b] / dev[b])) + opts.tol;
        report.records.push_back(compare(n, x, q, 3.0, static_cast<double>(r), band));
    };
    add(X, "|F(X)-1|/|F(2X)-1|>=3", 0, 1);
    add(-X, "|F(-X)-L|/|F(-2X)-L|>=3", 2, 3);
    report.summarize();
    return report;
}

VerificationReport monotone_check(double n, std::span<const double> x_grid, const SweepOptions& opts) {
    if (!(n > 0.5)) throw DomainError("monotone_check: requires n > 1/2");
    if (x_grid.size() < 2) throw DomainError("monotone_check: need at least two x values");
    for (std::size_t i = 0; i + 1 < x_grid.size(); ++i)
        if (!(x_grid[i] < x_grid[i + 1])) throw DomainError("monotone_check: x grid must be strictly ascending");

    auto fs = detail::map_indexed(x_grid.size(), opts.policy, [&](std::size_t i) {
        return at_point(n, x_grid[i], [&] { return static_cast<double>(oracle_f(n, x_grid[i], opts.oracle)); });
    });
    VerificationReport report;
    report.theorem = TheoremId::monotone_F;
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
        const double band = oracle_band(opts, 4, fs[i] + fs[i + 1]);
        report.records.push_back(compare(n, x_grid[i], "F(x+dx)<F(x)", fs[i + 1], fs[i], band));
    }
    report.summarize();
    return report;
}

std::vector<SharpnessSample> sharpness_trace(std::span<const double> n_values, std::span<const double> x_values,
                                             const SweepOptions& opts) {
    const std::size_t nx = x_values.size();
    return detail::map_indexed(n_values.size() * nx, opts.policy, [&](std::size_t i) {
        const double n = n_values[i / nx];
        const double x = x_values[i % nx];
        return at_point(n, x, [&] {
            const double f = static_cast<double>(oracle_f(n, x, opts.oracle));
            const double gv = g(kConjectureG, {n, x});
            return SharpnessSample{n, x, f, gv, f / gv};
        });
    });
}

}  // namespace pcf
