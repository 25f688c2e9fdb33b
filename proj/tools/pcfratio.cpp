// pcfratio: enclosures, bound values and inequality sweeps for ratios of
// parabolic cylinder functions.
//
// Exit codes: 0 success, 1 violations (or a confirmed conjecture
// counterexample), 2 bad arguments or domain error, 3 oracle failure,
// 4 conjecture points inconclusive within oracle error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcf/bounds.hpp"
#include "pcf/csv.hpp"
#include "pcf/enclosure.hpp"
#include "pcf/errors.hpp"
#include "pcf/grid.hpp"
#include "pcf/harness.hpp"
#include "pcf/oracle.hpp"

namespace {

enum Exit { kOk = 0, kViolations = 1, kBadArgs = 2, kOracleFailure = 3, kInconclusive = 4 };

constexpr const char* kDefaultNGrid = "0.51,0.6,0.75,1,1.5,2,3,5,10,50";
constexpr const char* kDefaultXGrid = "-30:30:0.1";

struct Globals {
    std::string csv_path;
    double tol = 0.0;
    int depth = 40;
    double prec = 1e-13;
    bool serial = false;

    pcf::SweepOptions sweep_options() const {
        pcf::SweepOptions o;
        o.oracle.target_rel_err = prec;
        o.refinement.depth = depth;
        o.tol = tol;
        o.policy = serial ? pcf::ExecutionPolicy::serial : pcf::ExecutionPolicy::parallel;
        return o;
    }
};

void print_enclosure(const char* name, const pcf::Enclosure& e, long double oracle) {
    std::printf("%-2s enclosure [%.17g, %.17g]  width %.3e  rel %.3e\n", name, e.lo, e.hi, e.width(),
                e.width() / e.midpoint());
    std::printf("%-2s oracle     %.17Lg  %s\n", name, oracle, e.contains(oracle) ? "(contained)" : "(NOT CONTAINED)");
}

int cmd_eval(const Globals& g, double n, double x) {
    const auto opts = g.sweep_options();
    if (!(n > 0.5)) {
        std::fprintf(stderr, "eval: enclosures require n > 1/2 (got n=%g)\n", n);
        return kBadArgs;
    }
    std::printf("point n=%.17g x=%.17g depth=%d\n", n, x, g.depth);
    if (pcf::near_order_boundary(n))
        std::printf("warning: n is within 1e-8 of 1/2; the upper seed degenerates near x = 0\n");
    const pcf::RatioEnclosures r = pcf::ratio_enclosures({n, x}, opts.refinement);
    const pcf::OracleRatios o = pcf::oracle_ratios(n, x, opts.oracle);
    print_enclosure("h", r.h, o.h);
    print_enclosure("F", r.f, o.f);
    if (g.depth == 0) {
        const pcf::Enclosure seed = pcf::seed_interval(n, x);
        std::printf("seed       [%.17g, %.17g]\n", seed.lo, seed.hi);
    }
    return kOk;
}

int cmd_bounds(const Globals& g, double n, double x) {
    const auto opts = g.sweep_options();
    if (!(n > 0.5)) {
        std::fprintf(stderr, "bounds: requires n > 1/2 (got n=%g)\n", n);
        return kBadArgs;
    }
    const pcf::ParameterPoint p{n, x};
    const pcf::OracleRatios o = pcf::oracle_ratios(n, x, opts.oracle);
    const pcf::FBounds ub = pcf::universal_bounds(n);
    const pcf::HBounds hb = pcf::h_bounds_all_x(p);
    const pcf::FChain chain = pcf::f_chain(p, static_cast<double>(o.f));

    std::printf("point n=%.17g x=%.17g\n", n, x);
    std::printf("oracle h             %.17Lg\n", o.h);
    std::printf("oracle F             %.17Lg\n", o.f);
    std::printf("F universal          (%.17g, %.17g)\n", ub.lower, ub.upper);
    std::printf("g[-1/2,1/2]          %.17g\n", pcf::g(pcf::kConjectureG, p));
    std::printf("g[-3/2,1/2]          %.17g\n", pcf::g(pcf::kChainUpperG, p));
    std::printf("F chain             ");
    for (const auto& v : chain.values) {
        if (v)
            std::printf(" %.12g", *v);
        else
            std::printf(" (absent)");
    }
    std::printf("  %s\n", chain.strictly_ascending() ? "ascending" : "NOT ASCENDING");
    std::printf("h lower              %.17g\n", hb.lower);
    std::printf("h upper              %.17g\n", hb.upper);
    if (hb.lower_shifted)
        std::printf("h lower (n>3/2)      %.17g\n", *hb.lower_shifted);
    else
        std::printf("h lower (n>3/2)      (absent)\n");
    std::printf("F half-line bound    %.17g%s\n", pcf::half_line_bound(n), x > 0.0 ? "" : "  (not a bound for x <= 0)");
    return kOk;
}

void print_report(const pcf::VerificationReport& r) {
    std::printf("%s: %zu records, %zu pass, %zu fail, %zu inconclusive, %zu skip\n",
                std::string(pcf::to_string(r.theorem)).c_str(), r.records.size(), r.passed, r.violations,
                r.inconclusive, r.skipped);
    if (r.passed + r.violations + r.inconclusive > 0)
        std::printf("min margin %.17g at n=%.17g x=%.17g\n", r.min_margin, r.argmin_n, r.argmin_x);
    std::size_t shown = 0;
    for (const auto& rec : r.records) {
        if (rec.status != pcf::Status::fail) continue;
        if (shown++ == 10) {
            std::printf("  ...\n");
            break;
        }
        std::printf("  violation n=%g x=%g %s lhs=%.17g rhs=%.17g\n", rec.n, rec.x, rec.quantity.c_str(), rec.lhs,
                    rec.rhs);
    }
}

bool write_csv_if_requested(const Globals& g, const std::vector<pcf::VerificationReport>& reports) {
    if (g.csv_path.empty()) return true;
    std::ofstream out(g.csv_path);
    if (!out) {
        std::fprintf(stderr, "cannot open %s for writing\n", g.csv_path.c_str());
        return false;
    }
    pcf::write_csv(out, reports);
    return static_cast<bool>(out);
}

int cmd_verify(const Globals& g, const std::string& theorem, const std::string& n_grid, const std::string& x_grid,
               bool allow_negative_x) {
    const auto id = pcf::theorem_from_string(theorem);
    const bool allowed = id && (*id == pcf::TheoremId::eso || *id == pcf::TheoremId::thm1 ||
                                *id == pcf::TheoremId::thm4 || *id == pcf::TheoremId::remark1 ||
                                *id == pcf::TheoremId::equality_case || *id == pcf::TheoremId::monotone_F);
    if (!allowed) {
        std::fprintf(stderr, "verify: unknown theorem '%s' (eso, thm1, thm4, remark1, equality, monotone)\n",
                     theorem.c_str());
        return kBadArgs;
    }
    pcf::SweepOptions opts = g.sweep_options();
    opts.allow_negative_x = allow_negative_x;
    const pcf::Grid grid{pcf::parse_axis(n_grid), pcf::parse_axis(x_grid)};
    const auto report = pcf::verify(*id, grid, opts);
    print_report(report);
    if (!write_csv_if_requested(g, {report})) return kBadArgs;
    return report.violations == 0 ? kOk : kViolations;
}

int cmd_conjecture(const Globals& g, const std::string& n_grid, const std::string& x_grid, bool sharpness) {
    const pcf::Grid grid{pcf::parse_axis(n_grid), pcf::parse_axis(x_grid)};
    for (double n : grid.n_values) {
        if (!(n > 0.5)) {
            std::fprintf(stderr, "conjecture: every n must exceed 1/2 (got %g)\n", n);
            return kBadArgs;
        }
    }
    const auto opts = g.sweep_options();
    const auto report = pcf::conjecture_scan(grid, opts);
    print_report(report);
    if (report.escalated > 0) std::printf("escalated candidates: %zu\n", report.escalated);
    if (sharpness) {
        const std::vector<double> ns{5, 10, 20, 50, 100};
        const std::vector<double> xs{-5, 0, 5};
        for (const auto& s : pcf::sharpness_trace(ns, xs, opts))
            std::printf("sharpness n=%g x=%g F/g=%.15f\n", s.n, s.x, s.ratio);
    }
    if (!write_csv_if_requested(g, {report})) return kBadArgs;
    if (report.violations > 0) {
        std::printf("COUNTEREXAMPLE: enclosure-verified violation of F < g[-1/2,1/2]\n");
        return kViolations;
    }
    if (report.inconclusive > 0) return kInconclusive;
    return report.min_margin > 0.0 ? kOk : kInconclusive;
}

int cmd_limits(const Globals& g, const std::string& n_grid, const std::string& x_values) {
    const pcf::Grid grid{pcf::parse_axis(n_grid), pcf::parse_axis(x_values)};
    const auto report = pcf::verify(pcf::TheoremId::limits, grid, g.sweep_options());
    for (const auto& rec : report.records) {
        if (rec.status == pcf::Status::skip) continue;
        std::printf("n=%g X=%g %s ratio=%.6f %s\n", rec.n, rec.x, rec.quantity.c_str(), rec.rhs,
                    std::string(pcf::to_string(rec.status)).c_str());
    }
    print_report(report);
    if (!write_csv_if_requested(g, {report})) return kBadArgs;
    return report.violations == 0 ? kOk : kViolations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enclosures, bounds and inequality sweeps for ratios of parabolic cylinder functions U(n,x)"};
    app.require_subcommand(1);

    Globals g;
    app.add_option("--csv", g.csv_path, "Write records as CSV to this path");
    app.add_option("--tol", g.tol, "Absolute width added to the oracle error band")->check(CLI::NonNegativeNumber);
    app.add_option("--depth", g.depth, "Backward recurrence steps for enclosures")->check(CLI::NonNegativeNumber);
    app.add_option("--prec", g.prec, "Oracle relative error goal, in (0, 1e-6]");
    app.add_flag("--serial", g.serial, "Run sweeps on one thread (reference path)");

    const std::string grid_help =
        "Comma-separated values or start:stop:step progressions (stop included when step divides the range)";

    double n = 0.0, x = 0.0;
    auto* eval = app.add_subcommand("eval", "Print h and F enclosures with oracle values");
    eval->add_option("--n", n, "Order n (> 1/2)")->required();
    eval->add_option("--x", x, "Argument x")->required();

    double bn = 0.0, bx = 0.0;
    auto* bounds = app.add_subcommand("bounds", "Print every bound value at a point");
    bounds->add_option("--n", bn, "Order n (> 1/2)")->required();
    bounds->add_option("--x", bx, "Argument x")->required();

    std::string theorem, vn = kDefaultNGrid, vx = kDefaultXGrid;
    bool allow_negative_x = false;
    auto* verify = app.add_subcommand("verify", "Check an inequality family over a grid");
    verify->add_option("--theorem", theorem, "eso | thm1 | thm4 | remark1 | equality | monotone")->required();
    verify->add_option("--n-grid", vn, grid_help)->capture_default_str();
    verify->add_option("--x-grid", vx, grid_help)->capture_default_str();
    verify->add_flag("--allow-negative-x", allow_negative_x, "remark1: also check x <= 0");

    std::string cn = kDefaultNGrid, cx = kDefaultXGrid;
    bool sharpness = false;
    auto* conjecture = app.add_subcommand("conjecture", "Scan the margin g[-1/2,1/2] - F over a grid");
    conjecture->add_option("--n-grid", cn, grid_help)->capture_default_str();
    conjecture->add_option("--x-grid", cx, grid_help)->capture_default_str();
    conjecture->add_flag("--sharpness", sharpness, "Also print F/g for large n");

    std::string ln = "1,2,5", lx = "30,60";
    auto* limits = app.add_subcommand("limits", "Check the decay of F towards its limits as |x| doubles");
    limits->add_option("--n-grid", ln, grid_help)->capture_default_str();
    limits->add_option("--X", lx, "Values X compared with 2X")->capture_default_str();

    for (auto* sub : {eval, bounds, verify, conjecture, limits}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadArgs;
    }

    try {
        if (*eval) return cmd_eval(g, n, x);
        if (*bounds) return cmd_bounds(g, bn, bx);
        if (*verify) return cmd_verify(g, theorem, vn, vx, allow_negative_x);
        if (*conjecture) return cmd_conjecture(g, cn, cx, sharpness);
        if (*limits) return cmd_limits(g, ln, lx);
    } catch (const pcf::DomainError& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kBadArgs;
    } catch (const pcf::PoleError& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kBadArgs;
    } catch (const pcf::Error& e) {
        std::fprintf(stderr, "oracle failure: %s\n", e.what());
        return kOracleFailure;
    }
    return kBadArgs;
}
