#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "errors.hpp"
#include "line.hpp"
#include "polygon.hpp"

namespace rotokernel {

enum class ChainOrientation { Ccw, Cw };

/// Convex polyline (or closed hull) whose consecutive triples all turn the same way.
struct ConvexChain {
    std::vector<Point> vertices;
    ChainOrientation orientation = ChainOrientation::Ccw;

    std::size_t size() const noexcept { return vertices.size(); }
    bool empty() const noexcept { return vertices.empty(); }
};

/// Counterclockwise convex hull by Andrew's monotone chain; collinear points dropped.
/// Inputs with one distinct point give a single-point chain, collinear inputs the two extremes.
inline ConvexChain convex_hull(std::span<const Point> points) {
    std::vector<Point> p(points.begin(), points.end());
    std::sort(p.begin(), p.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    p.erase(std::unique(p.begin(), p.end(), [](Point a, Point b) { return almost_equal(a, b); }), p.end());
    if (p.size() <= 2) return {p, ChainOrientation::Ccw};
    std::vector<Point> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && orientation(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && orientation(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return {h, ChainOrientation::Ccw};
}

namespace detail {

inline void project(std::span<const Point> pts, Point axis, double& lo, double& hi) noexcept {
    lo = hi = dot(pts[0], axis);
    for (const Point& p : pts) {
        const double d = dot(p, axis);
        lo = std::min(lo, d), hi = std::max(hi, d);
    }
}

} // namespace detail

/// Closed convex sets (given by hull vertices) share a point. Separating-axis test.
inline bool convex_sets_intersect(std::span<const Point> a, std::span<const Point> b, double eps = tol::length) {
    if (a.empty() || b.empty()) return false;
    std::vector<Point> axes;
    auto add_edges = [&](std::span<const Point> h) {
        for (std::size_t i = 0; i < h.size(); ++i) {
            const Point e = h[(i + 1) % h.size()] - h[i];
            if (norm(e) > 0) {
                axes.push_back(perp(e) / norm(e));
                if (h.size() == 2) axes.push_back(e / norm(e));
            }
        }
    };
    add_edges(a);
    add_edges(b);
    const Point d = b[0] - a[0];
    if (norm(d) > 0) axes.push_back(d / norm(d));
    for (const Point& axis : axes) {
        double alo, ahi, blo, bhi;
        detail::project(a, axis, alo, ahi);
        detail::project(b, axis, blo, bhi);
        if (ahi < blo - eps || bhi < alo - eps) return false;
    }
    return true;
}

struct Tangent {
    Line line;
    Point on_a; // tangency vertex on A
    Point on_b; // tangency vertex on B
};

/// The two common internal tangents of disjoint convex hulls A and B, each with
/// its tangency vertices. The first has A on its left (walking from A to B), the second on its right.
inline std::array<Tangent, 2> common_internal_tangents(std::span<const Point> a, std::span<const Point> b) {
    if (a.empty() || b.empty()) throw InvalidPolygon("empty hull");
    if (convex_sets_intersect(a, b)) throw HullsIntersect();
    std::array<Tangent, 2> out;
    for (int k = 0; k < 2; ++k) {
        const int sa = k == 0 ? 1 : -1; // A strictly on this side of a -> b (or on the line)
        std::size_t ia = 0, ib = 0;
        // Alternate tangent-from-point updates; each update only rotates the line one way.
        for (std::size_t guard = 0; guard < 4 * (a.size() + b.size()) + 8; ++guard) {
            bool changed = false;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (orientation(a[ia], b[ib], a[i]) * sa < 0) ia = i, changed = true;
            for (std::size_t i = 0; i < b.size(); ++i)
                if (orientation(a[ia], b[ib], b[i]) * sa > 0) ib = i, changed = true;
            if (!changed) break;
        }
        out[k] = {line_through(a[ia], b[ib]), a[ia], b[ib]};
    }
    return out;
}

} // namespace rotokernel
