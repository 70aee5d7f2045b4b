#pragma once

#include <vector>

#include "aaee/grid.hpp"

namespace aaee {

/// Closed material marker loop (ordered, periodic indexing, >= 16 markers).
/// Marker coordinates are kept unwrapped; field evaluation wraps them.
struct MaterialLoop {
    std::vector<double> xs;
    std::vector<double> ys;

    int size() const { return static_cast<int>(xs.size()); }
    double max_spacing() const;
    double perimeter() const;
};

/// Circle of `markers` points around (cx, cy). Throws config_error for
/// fewer than 16 markers or non-positive radius.
MaterialLoop make_circle_loop(double cx, double cy, double radius, int markers);

/// Redistributes markers to equal arc length along the periodic cubic-spline
/// fit of the current polygon, growing the marker count if needed to keep
/// adjacent spacing at or below target_spacing.
MaterialLoop resample_loop(const MaterialLoop& loop, double target_spacing);

}  // namespace aaee
