#pragma once

// Interval enclosures of h_n(x) = U(n,x)/U(n-1,x) and
// F_n(x) = U(n,x)^2/(U(n-1,x) U(n+1,x)).
//
// An enclosure is seeded at a shifted order n+K with the all-x bounds on h and
// transported down with h_m = 1/(x + (m+1/2) h_{m+1}).  Every endpoint is
// widened by one ulp after each arithmetic step.

#include "pcf/point.hpp"

namespace pcf {

struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;

    double width() const noexcept { return hi - lo; }
    double midpoint() const noexcept { return lo + (hi - lo) / 2.0; }
    bool contains(long double v) const noexcept { return lo <= v && v <= hi; }
    bool subset_of(const Enclosure& other) const noexcept { return other.lo <= lo && hi <= other.hi; }
};

struct RefinementConfig {
    int depth = 40;          ///< number of backward steps K
    double min_width = 0.0;  ///< stop at the first depth whose width is at most this; 0 disables

    void validate() const;
};

/// [2/(x+sqrt(4n+2+x^2)), 2/(x+sqrt(4n-2+x^2))]; identical to the lower and
/// upper members of h_bounds_all_x.  Throws DomainError for n <= 1/2.
Enclosure seed_interval(double n, double x);

/// Image of an enclosure of h_{m+1} under h_m = 1/(x + (m+1/2) h_{m+1}).
/// Throws PositivityLost when next.lo <= 0 or x + (m+1/2) next.lo <= 0.
Enclosure backward_step(const Enclosure& next, double m, double x);

/// h_m = (1/prev - x)/(m - 1/2), the forward direction of the recurrence.
/// Throws DomainError for m <= 1/2 and DivisionByZero for prev == 0.
double forward_step(double prev, double m, double x);

/// Enclosure of h_n(x) from a sweep seeded at order n + depth.
///
/// Each visited order is intersected with its own seed interval, which keeps
/// the sweep well defined where the plain image would lose positivity
/// (x < 0) and makes depth d+1 a subset of depth d exactly.
Enclosure h_enclosure(const ParameterPoint& p, const RefinementConfig& cfg = {});

/// Enclosures of h_n, h_{n+1} and F_n from one shared sweep seeded at
/// order n + 1 + depth.
struct RatioEnclosures {
    Enclosure h;
    Enclosure h_next;
    Enclosure f;
};

RatioEnclosures ratio_enclosures(const ParameterPoint& p, const RefinementConfig& cfg = {});

/// Enclosure of F_n(x) = h_n(x)/h_{n+1}(x).
Enclosure f_enclosure(const ParameterPoint& p, const RefinementConfig& cfg = {});

/// Orders in (1/2, 1/2 + 1e-8), where the upper seed degenerates as x -> 0.
bool near_order_boundary(double n) noexcept;

}  // namespace pcf
