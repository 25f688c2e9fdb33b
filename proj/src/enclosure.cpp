#include "pcf/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pcf/bounds.hpp"
#include "pcf/errors.hpp"
#include "pcf/outward.hpp"

namespace pcf {

using outward::down;
using outward::up;

namespace {

void require_point(const ParameterPoint& p, const char* who) {
    if (!std::isfinite(p.n) || !std::isfinite(p.x)) throw DomainError(std::string(who) + ": non-finite argument");
    if (!(p.n > 0.5)) throw DomainError(std::string(who) + ": requires n > 1/2");
}

// Image of next under the backward map, with an unbounded upper endpoint
// when the denominator interval reaches zero, intersected with the seed at m.
Enclosure refine(const Enclosure& next, double m, double x) {
    const Enclosure seed = seed_interval(m, x);
    const double den_lo = down(x + down(down(m + 0.5) * next.lo));
    const double den_hi = up(x + up(up(m + 0.5) * next.hi));
    Enclosure image{down(1.0 / den_hi), std::numeric_limits<double>::infinity()};
    if (den_lo > 0.0) image.hi = up(1.0 / den_lo);
    if (!(den_hi > 0.0)) image.lo = 0.0;
    Enclosure out{std::max(image.lo, seed.lo), std::min(image.hi, seed.hi)};
    if (!(out.lo <= out.hi)) throw Error("backward sweep produced an empty enclosure");
    return out;
}

// Sweep from order top = base + steps down to base; returns the enclosures at
// base + 1 and base.
struct SweepResult {
    Enclosure at_base_plus_one;
    Enclosure at_base;
};

SweepResult sweep(double base, int steps, double x) {
    // Orders are formed as base + j, not by repeated decrement, so each
    // order matches the one a direct call would use.
    Enclosure current = seed_interval(base + steps, x);
    Enclosure previous = current;
    for (int j = steps - 1; j >= 0; --j) {
        previous = current;
        current = refine(current, base + j, x);
    }
    return {previous, current};
}

}  // namespace

void RefinementConfig::validate() const {
    if (depth < 0) throw DomainError("refinement depth must be >= 0");
    if (!(min_width >= 0.0)) throw DomainError("refinement min_width must be >= 0");
}

Enclosure seed_interval(double n, double x) {
    const HBounds b = h_bounds_all_x({n, x});
    return {b.lower, b.upper};
}

Enclosure backward_step(const Enclosure& next, double m, double x) {
    if (!(next.lo > 0.0)) throw PositivityLost("backward_step: enclosure of h_{m+1} is not positive");
    const double den_lo = down(x + down(down(m + 0.5) * next.lo));
    if (!(den_lo > 0.0)) throw PositivityLost("backward_step: denominator interval touches zero");
    const double den_hi = up(x + up(up(m + 0.5) * next.hi));
    return {down(1.0 / den_hi), up(1.0 / den_lo)};
}

double forward_step(double prev, double m, double x) {
    if (!(m > 0.5)) throw DomainError("forward_step: requires m > 1/2");
    if (prev == 0.0) throw DivisionByZero("forward_step: prev == 0");
    return (-x + 1.0 / prev) / (m - 0.5);
}

Enclosure h_enclosure(const ParameterPoint& p, const RefinementConfig& cfg) {
    require_point(p, "h_enclosure");
    cfg.validate();
    if (cfg.min_width > 0.0) {
        Enclosure e{};
        for (int d = 0; d <= cfg.depth; ++d) {
            e = d == 0 ? seed_interval(p.n, p.x) : sweep(p.n, d, p.x).at_base;
            if (e.width() <= cfg.min_width) break;
        }
        return e;
    }
    if (cfg.depth == 0) return seed_interval(p.n, p.x);
    return sweep(p.n, cfg.depth, p.x).at_base;
}

RatioEnclosures ratio_enclosures(const ParameterPoint& p, const RefinementConfig& cfg) {
    require_point(p, "f_enclosure");
    cfg.validate();
    auto from_sweep = [&](int depth) {
        const SweepResult s = sweep(p.n, depth + 1, p.x);
        const Enclosure& hn = s.at_base;
        const Enclosure& hn1 = s.at_base_plus_one;
        return RatioEnclosures{hn, hn1, {down(hn.lo / hn1.hi), up(hn.hi / hn1.lo)}};
    };
    if (cfg.min_width > 0.0) {
        RatioEnclosures r{};
        for (int d = 0; d <= cfg.depth; ++d) {
            r = from_sweep(d);
            if (r.f.width() <= cfg.min_width) break;
        }
        return r;
    }
    return from_sweep(cfg.depth);
}

Enclosure f_enclosure(const ParameterPoint& p, const RefinementConfig& cfg) {
    return ratio_enclosures(p, cfg).f;
}

bool near_order_boundary(double n) noexcept { return n > 0.5 && n < 0.5 + 1e-8; }

}  // namespace pcf
