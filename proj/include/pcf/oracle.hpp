#pragma once

// Reference evaluation of the parabolic cylinder function U(n, x), the
// recessive solution of y'' - (x^2/4 + n) y = 0.
//
// Values are carried in log-scaled form.  All internal arithmetic is done in
// long double (x87 extended precision on x86-64) so that ratios formed from
// log differences of values as large as exp(+-3600) keep ~1e-16 relative
// accuracy.

namespace pcf {

/// Sign and natural-log magnitude of a real number.
struct LogValue {
    int sign = 0;              ///< -1, 0 or +1; 0 means exactly zero
    long double logmag = 0.0L; ///< log|value|; ignored when sign == 0

    static LogValue zero() { return {}; }
    static LogValue from_value(long double v);

    long double value() const;
    bool is_zero() const noexcept { return sign == 0; }
};

/// Quotient a/b as a plain number.  b must be nonzero.
long double ratio(const LogValue& a, const LogValue& b);

struct OracleConfig {
    double target_rel_err = 1e-13;
    int max_subdivisions = 24;
    /// Orders at or below this are obtained from higher orders by the
    /// three-term recurrence; must be >= -1/2 (the integral diverges below).
    double recurrence_floor = -0.5;

    /// Throws DomainError when a field is out of range.
    void validate() const;
};

/// U(n, x) for n >= -3/2.
///
/// For n above cfg.recurrence_floor the integral
///   U(n,x) = exp(-x^2/4) / Gamma(n+1/2) * int_0^inf t^(n-1/2) exp(-t^2/2 - x t) dt
/// is evaluated with a double-exponential trapezoid rule in log t.  Lower
/// orders come from U(m-1,x) = x U(m,x) + (m+1/2) U(m+1,x).
///
/// Throws DomainError for n < -3/2 or non-finite arguments and
/// QuadratureNotConverged when the refinement budget is exhausted.
LogValue u_log(double n, double x, const OracleConfig& cfg = {});

/// Closed form U(n,0) = sqrt(pi) 2^(-n/2-1/4) / Gamma(3/4+n/2).
/// Throws PoleError when 3/4+n/2 is a nonpositive integer.
LogValue u_at_zero(double n);

/// Gamma(z) in log-scaled form.  Throws PoleError at nonpositive integers.
LogValue gamma_log(long double z);

/// Whittaker order nu of D_nu to the order n of U: D_nu(x) = U(-nu-1/2, x).
constexpr double nu_to_n(double nu) noexcept { return -nu - 0.5; }
constexpr double n_to_nu(double n) noexcept { return -n - 0.5; }

/// The consecutive-order ratios at one point, all from one set of oracle
/// evaluations of U(n-1,x), U(n,x), U(n+1,x).
struct OracleRatios {
    long double h;      ///< U(n,x)/U(n-1,x)
    long double h_next; ///< U(n+1,x)/U(n,x)
    long double f;      ///< U(n,x)^2 / (U(n-1,x) U(n+1,x))
};

OracleRatios oracle_ratios(double n, double x, const OracleConfig& cfg = {});

/// U(n,x)/U(n-1,x).
long double oracle_h(double n, double x, const OracleConfig& cfg = {});

/// U(n,x)^2 / (U(n-1,x) U(n+1,x)).
long double oracle_f(double n, double x, const OracleConfig& cfg = {});

/// |U(n-1,x) - x U(n,x) - (n+1/2) U(n+1,x)| / |U(n-1,x)|.
long double recurrence_residual(double n, double x, const OracleConfig& cfg = {});

}  // namespace pcf
