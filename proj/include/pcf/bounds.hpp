#pragma once

#include <array>
#include <optional>

#include "pcf/oracle.hpp"
#include "pcf/point.hpp"

namespace pcf {

/// Parameters of the bound family
///   g(x) = (x + sqrt(4(n-alpha) + x^2)) / (x + sqrt(4(n-beta) + x^2)).
struct GSpec {
    double alpha = 0.0;
    double beta = 0.0;
};

inline constexpr GSpec kConjectureG{-0.5, 0.5};
inline constexpr GSpec kChainUpperG{-1.5, 0.5};
inline constexpr GSpec kChainLowerG{-0.5, 1.5};

/// Raw strict comparison lhs < rhs.  No tolerance is applied.
struct CheckResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  ///< rhs - lhs
    bool holds = false;   ///< margin > 0
};

CheckResult check(double lhs, double rhs);

/// Evaluates g at p.  Returns exactly 1 when alpha == beta.  The x < 0 branch
/// uses x + sqrt(x^2+c) = c / (sqrt(x^2+c) - x) to avoid cancellation.
/// Throws DomainError on a negative radicand or nonpositive denominator.
double g(const GSpec& spec, const ParameterPoint& p);

struct FBounds {
    double lower = 1.0;
    double upper = 0.0;
};

/// 1 < F_n(x) < (n+1/2)/(n-1/2) for n > 1/2 and all real x.
FBounds universal_bounds(double n);

/// The five-term chain
///   (n-3/2)/(n+1/2) g[-1/2,3/2] < (n-1/2)/(n+1/2) F < 1 < F < g[-3/2,1/2].
/// The first entry is present only for n > 3/2.
struct FChain {
    std::array<std::optional<double>, 5> values;

    /// True when consecutive populated entries increase strictly.
    bool strictly_ascending() const;
};

/// Chain with a caller-supplied F value.  Throws DomainError for n <= 1/2.
FChain f_chain(const ParameterPoint& p, double f);

/// Chain with F taken from the oracle.
FChain f_chain(const ParameterPoint& p, const OracleConfig& cfg);

/// Bounds on h_n(x) = U(n,x)/U(n-1,x) valid for every real x:
///   lower    = 2 / (x + sqrt(4n+2+x^2))                         (n > 1/2)
///   upper    = 2 / (x + sqrt(4n-2+x^2))                         (n > 1/2)
///   lower_shifted = (n-3/2)/(n-1/2) * 2 / (x + sqrt(4n-6+x^2))  (n > 3/2)
/// Lower bounds are rounded toward -inf and the upper bound toward +inf.
struct HBounds {
    double lower = 0.0;
    double upper = 0.0;
    std::optional<double> lower_shifted;
};

HBounds h_bounds_all_x(const ParameterPoint& p);

/// sqrt((n+3/2)/(n-1/2)), which bounds F_n(x) from above only for x > 0.
double half_line_bound(double n);

}  // namespace pcf
