#pragma once

// One-ulp widening after a round-to-nearest operation.  The nearest result is
// within half an ulp of the exact one, so stepping one ulp outward yields a
// valid bound without changing the FPU rounding mode.

#include <cmath>
#include <limits>

namespace pcf::outward {

inline double up(double v) noexcept { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
inline double down(double v) noexcept { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }

}  // namespace pcf::outward
