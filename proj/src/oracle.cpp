#include "pcf/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pcf/errors.hpp"

namespace pcf {

LogValue LogValue::from_value(long double v) {
    if (v == 0.0L) return zero();
    return {v > 0.0L ? 1 : -1, std::log(std::fabs(v))};
}

long double LogValue::value() const {
    if (sign == 0) return 0.0L;
    return static_cast<long double>(sign) * std::exp(logmag);
}

long double ratio(const LogValue& a, const LogValue& b) {
    if (b.is_zero()) throw DivisionByZero("ratio: zero denominator");
    if (a.is_zero()) return 0.0L;
    return static_cast<long double>(a.sign * b.sign) * std::exp(a.logmag - b.logmag);
}

void OracleConfig::validate() const {
    if (!(target_rel_err > 0.0 && target_rel_err <= 1e-6))
        throw DomainError("oracle target_rel_err must lie in (0, 1e-6]");
    if (max_subdivisions < 1) throw DomainError("oracle max_subdivisions must be >= 1");
    if (!(recurrence_floor >= -0.5) || !std::isfinite(recurrence_floor))
        throw DomainError("oracle recurrence_floor must be finite and >= -1/2");
}

LogValue gamma_log(long double z) {
    if (!std::isfinite(z)) throw DomainError("gamma_log: non-finite argument");
    if (z <= 0.0L && z == std::floor(z))
        throw PoleError("gamma_log: pole at nonpositive integer " + std::to_string(static_cast<double>(z)));
    int sign = 1;
    // lgammal_r: the plain lgamma writes the global signgam and is not
    // safe to call from concurrent sweeps.
    const long double lg = ::lgammal_r(z, &sign);
    return {sign, lg};
}

LogValue u_at_zero(double n) {
    if (!std::isfinite(n)) throw DomainError("u_at_zero: non-finite order");
    const long double nl = n;
    const LogValue g = gamma_log(0.75L + nl / 2.0L);
    const long double log_pi = std::log(std::numbers::pi_v<long double>);
    const long double log2 = std::numbers::ln2_v<long double>;
    return {g.sign, 0.5L * log_pi - (nl / 2.0L + 0.25L) * log2 - g.logmag};
}

namespace {

struct Integral {
    long double log_value;
    long double rel_err_estimate;
};

// log of int_0^inf t^(c-1) exp(-t^2/2 - x t) dt for c > 0.
//
// With t = s* e^w, where s* is the maximiser of the integrand in log t, the
// exponent becomes psi* + dpsi(w); w = sigma sinh(tau) then turns both tails
// into double-exponential decay and the trapezoid rule in tau converges
// geometrically in 1/h.
Integral log_moment_integral(long double c, long double x, const OracleConfig& cfg) {
    const long double r = std::sqrt(x * x + 4.0L * c);
    const long double s = x >= 0.0L ? 2.0L * c / (x + r) : (r - x) / 2.0L;
    const long double psi_star = c * std::log(s) - s * s / 2.0L - x * s;
    const long double sigma = 1.0L / std::sqrt(s * r);
    const long double half_s2 = s * s / 2.0L;
    const long double xs = x * s;

    auto dpsi = [&](long double w) {
        return c * w - half_s2 * std::expm1(2.0L * w) - xs * std::expm1(w);
    };
    auto log_integrand = [&](long double tau) {
        return dpsi(sigma * std::sinh(tau)) + std::log(sigma * std::cosh(tau));
    };
    auto integrand = [&](long double tau) {
        const long double v = log_integrand(tau);
        return std::isfinite(v) ? std::exp(v) : 0.0L;
    };

    // Truncate where the integrand has dropped below e^-80 of the peak scale.
    constexpr long double coarse = 0.5L;
    constexpr long double cutoff = -80.0L;
    constexpr long double tau_limit = 40.0L;
    const long double peak = std::log(sigma);
    long double tau_hi = coarse;
    while (!(log_integrand(tau_hi) - peak < cutoff)) {
        tau_hi += coarse;
        if (tau_hi > tau_limit) throw QuadratureNotConverged("u_log: right tail does not decay");
    }
    long double tau_lo = -coarse;
    while (!(log_integrand(tau_lo) - peak < cutoff)) {
        tau_lo -= coarse;
        if (tau_lo < -tau_limit) throw QuadratureNotConverged("u_log: left tail does not decay");
    }

    long double h = coarse;
    long double sum = 0.0L;
    for (long double tau = tau_lo; tau <= tau_hi + coarse / 4.0L; tau += coarse) sum += integrand(tau);
    long double estimate = h * sum;

    for (int level = 1; level <= cfg.max_subdivisions; ++level) {
        const long double half = h / 2.0L;
        const long long count = std::llround((tau_hi - tau_lo) / h);
        long double added = 0.0L;
        for (long long k = 0; k < count; ++k) added += integrand(tau_lo + half + static_cast<long double>(k) * h);
        sum += added;
        h = half;
        const long double refined = h * sum;
        const long double rel_change = std::fabs(refined - estimate) / refined;
        estimate = refined;
        if (level >= 2 && rel_change <= cfg.target_rel_err) {
            return {psi_star + std::log(estimate), rel_change};
        }
    }
    throw QuadratureNotConverged("u_log: subdivision budget exhausted");
}

LogValue u_log_integral(long double n, long double x, const OracleConfig& cfg) {
    const long double c = n + 0.5L;
    const Integral in = log_moment_integral(c, x, cfg);
    const LogValue g = gamma_log(c);
    return {1, -x * x / 4.0L - g.logmag + in.log_value};
}

}  // namespace

LogValue u_log(double n, double x, const OracleConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(n) || !std::isfinite(x)) throw DomainError("u_log: non-finite argument");
    if (n < -1.5) throw DomainError("u_log: order must be >= -3/2");

    const long double nl = n;
    const long double xl = x;
    if (n > cfg.recurrence_floor) return u_log_integral(nl, xl, cfg);

    // Step down from the two lowest orders reachable by quadrature.
    int steps = 1;
    while (!(n + steps > cfg.recurrence_floor)) ++steps;
    const long double top = nl + steps;
    const LogValue upper = u_log_integral(top, xl, cfg);
    const LogValue upper_next = u_log_integral(top + 1.0L, xl, cfg);

    long double cur = 1.0L;  // U(m) / exp(upper.logmag)
    long double nxt = std::exp(upper_next.logmag - upper.logmag);
    for (int k = 0; k < steps; ++k) {
        const long double m = top - k;
        const long double prev = xl * cur + (m + 0.5L) * nxt;
        nxt = cur;
        cur = prev;
    }
    if (cur == 0.0L) return LogValue::zero();
    return {cur > 0.0L ? 1 : -1, upper.logmag + std::log(std::fabs(cur))};
}

OracleRatios oracle_ratios(double n, double x, const OracleConfig& cfg) {
    const LogValue lower = u_log(n - 1.0, x, cfg);
    const LogValue mid = u_log(n, x, cfg);
    const LogValue upper = u_log(n + 1.0, x, cfg);
    if (lower.is_zero() || mid.is_zero() || upper.is_zero())
        throw DivisionByZero("oracle_ratios: U vanishes at this point");
    const long double f = static_cast<long double>(lower.sign * upper.sign) *
                          std::exp(2.0L * mid.logmag - lower.logmag - upper.logmag);
    return {ratio(mid, lower), ratio(upper, mid), f};
}

long double oracle_h(double n, double x, const OracleConfig& cfg) {
    return ratio(u_log(n, x, cfg), u_log(n - 1.0, x, cfg));
}

long double oracle_f(double n, double x, const OracleConfig& cfg) {
    return oracle_ratios(n, x, cfg).f;
}

long double recurrence_residual(double n, double x, const OracleConfig& cfg) {
    const LogValue lower = u_log(n - 1.0, x, cfg);
    const LogValue mid = u_log(n, x, cfg);
    const LogValue upper = u_log(n + 1.0, x, cfg);
    const long double xl = x;
    const long double r = 1.0L - xl * ratio(mid, lower) - (static_cast<long double>(n) + 0.5L) * ratio(upper, lower);
    return std::fabs(r);
}

}  // namespace pcf
