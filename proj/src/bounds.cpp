#include "pcf/bounds.hpp"

#include <cmath>
#include <limits>

#include "pcf/errors.hpp"
#include "pcf/outward.hpp"

namespace pcf {

namespace {

void require_finite(const ParameterPoint& p, const char* who) {
    if (!std::isfinite(p.n) || !std::isfinite(p.x)) throw DomainError(std::string(who) + ": non-finite argument");
}

void require_order_above_half(double n, const char* who) {
    if (!(n > 0.5)) throw DomainError(std::string(who) + ": requires n > 1/2");
}

// x + sqrt(x^2 + c), cancellation-free for x < 0.
double root_sum(double x, double c) {
    const double rad = x * x + c;
    if (rad < 0.0) throw DomainError("g: negative radicand");
    const double root = std::sqrt(rad);
    if (x >= 0.0) return x + root;
    return c / (root - x);
}

enum class Rounding { down, up };

// 2 / (x + sqrt(x^2 + c)) for c > 0, rounded in the given direction.  Every
// intermediate is widened one ulp so that the result brackets the exact value.
double reciprocal_root_sum(double x, double c_exact_lo, double c_exact_hi, Rounding dir) {
    using outward::down;
    using outward::up;
    const double xx = x * x;
    if (x >= 0.0) {
        if (dir == Rounding::down) {
            const double den = up(x + up(std::sqrt(up(up(xx) + c_exact_hi))));
            return down(2.0 / den);
        }
        const double den = down(x + down(std::sqrt(std::max(0.0, down(down(xx) + c_exact_lo)))));
        if (!(den > 0.0)) return std::numeric_limits<double>::infinity();
        return up(2.0 / den);
    }
    // 2 / (x + s) = 2 (s - x) / c with s = sqrt(x^2 + c)
    const double ax = -x;
    if (dir == Rounding::down) {
        const double num = down(down(std::sqrt(down(down(xx) + c_exact_lo))) + ax);
        return down(2.0 * num / c_exact_hi);
    }
    if (!(c_exact_lo > 0.0)) return std::numeric_limits<double>::infinity();
    const double num = up(up(std::sqrt(up(up(xx) + c_exact_hi))) + ax);
    return up(2.0 * num / c_exact_lo);
}

// 4n + k bracketed by one ulp on each side.
struct Bracket {
    double lo;
    double hi;
};

Bracket four_n_plus(double n, double k) {
    const double v = 4.0 * n + k;
    return {outward::down(v), outward::up(v)};
}

}  // namespace

CheckResult check(double lhs, double rhs) {
    const double margin = rhs - lhs;
    return {lhs, rhs, margin, margin > 0.0};
}

double g(const GSpec& spec, const ParameterPoint& p) {
    require_finite(p, "g");
    if (spec.alpha == spec.beta) return 1.0;
    const double ca = 4.0 * (p.n - spec.alpha);
    const double cb = 4.0 * (p.n - spec.beta);
    const double num = root_sum(p.x, ca);
    const double den = root_sum(p.x, cb);
    if (!(den > 0.0)) throw DomainError("g: nonpositive denominator");
    return num / den;
}

FBounds universal_bounds(double n) {
    require_order_above_half(n, "universal_bounds");
    return {1.0, (n + 0.5) / (n - 0.5)};
}

bool FChain::strictly_ascending() const {
    std::optional<double> prev;
    for (const auto& v : values) {
        if (!v) continue;
        if (prev && !(*prev < *v)) return false;
        prev = v;
    }
    return true;
}

FChain f_chain(const ParameterPoint& p, double f) {
    require_finite(p, "f_chain");
    require_order_above_half(p.n, "f_chain");
    FChain chain;
    if (p.n > 1.5) chain.values[0] = (p.n - 1.5) / (p.n + 0.5) * g(kChainLowerG, p);
    chain.values[1] = (p.n - 0.5) / (p.n + 0.5) * f;
    chain.values[2] = 1.0;
    chain.values[3] = f;
    chain.values[4] = g(kChainUpperG, p);
    return chain;
}

FChain f_chain(const ParameterPoint& p, const OracleConfig& cfg) {
    require_order_above_half(p.n, "f_chain");
    return f_chain(p, static_cast<double>(oracle_f(p.n, p.x, cfg)));
}

HBounds h_bounds_all_x(const ParameterPoint& p) {
    require_finite(p, "h_bounds_all_x");
    require_order_above_half(p.n, "h_bounds_all_x");
    HBounds b;
    const Bracket plus = four_n_plus(p.n, 2.0);
    const Bracket minus = four_n_plus(p.n, -2.0);
    b.lower = reciprocal_root_sum(p.x, plus.lo, plus.hi, Rounding::down);
    b.upper = reciprocal_root_sum(p.x, minus.lo, minus.hi, Rounding::up);
    if (p.n > 1.5) {
        const Bracket shifted = four_n_plus(p.n, -6.0);
        const double factor = outward::down(outward::down(p.n - 1.5) / outward::up(p.n - 0.5));
        const double base = reciprocal_root_sum(p.x, std::max(shifted.lo, 0.0), shifted.hi, Rounding::down);
        b.lower_shifted = std::max(0.0, outward::down(factor * base));
    }
    return b;
}

double half_line_bound(double n) {
    require_order_above_half(n, "half_line_bound");
    return std::sqrt((n + 1.5) / (n - 0.5));
}

}  // namespace pcf
