#pragma once

namespace pcf {

/// An order n and argument x at which ratios and bounds are evaluated.
struct ParameterPoint {
    double n = 0.0;
    double x = 0.0;
};

}  // namespace pcf
