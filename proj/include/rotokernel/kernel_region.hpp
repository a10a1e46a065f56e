#pragma once

#include <optional>
#include <vector>

#include "geom_core.hpp"

namespace rotokernel {

/// One clipping line that bounds a kernel, with the side that is kept.
struct SupportingConstraint {
    enum class Origin {
        ReflexMaximum,  // strip south line (single orientation)
        ReflexMinimum,  // strip north line (single orientation)
        HullFallback,   // extreme vertex used when no reflex extremum exists
        Dent,           // axis-parallel dent line at rotation 0
        ReflexVertex,   // rotated line through a NW/NE/SW/SE reflex vertex
        Extremity,      // rotated line through an extremity endpoint
    };
    Line line;
    Side keep = Side::Right;
    Origin origin = Origin::ReflexVertex;
    int vertex = -1; // polygon vertex the line passes through, if any
};

/// A kernel at one rotation. An empty kernel has no polygon; `degenerate` marks the
/// case where the kernel collapses to a segment or point.
struct KernelRegion {
    std::optional<SimplePolygon> polygon;
    bool degenerate = false;
    double area = 0;
    double perimeter = 0;
    std::vector<SupportingConstraint> constraints;

    // Boundary chains of a single-orientation kernel, in the original frame:
    // the right chain runs up from the south line, the left chain down from the north line.
    std::vector<Point> left_chain;
    std::vector<Point> right_chain;
    // First and last polygon vertex indices on each chain (-1 when a chain holds none).
    int left_first = -1, left_last = -1, right_first = -1, right_last = -1;

    bool empty() const noexcept { return !polygon.has_value(); }
};

inline KernelRegion make_region(SimplePolygon p) {
    KernelRegion r;
    r.area = area(p);
    r.perimeter = perimeter(p);
    r.polygon = std::move(p);
    return r;
}

} // namespace rotokernel
