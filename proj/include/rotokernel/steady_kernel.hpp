#pragma once

// Kernel for the single orientation {0 deg} rotated by theta: the polygon clipped to the
// strip between the lowest reflex minimum and the highest reflex maximum.

#include <cstddef>
#include <utility>
#include <vector>

#include "kernel_region.hpp"

namespace rotokernel::steady {

enum class ExtremumKind { ReflexMax, ReflexMin };

/// A reflex vertex, or a horizontal edge with two reflex endpoints, whose outer
/// neighbours are both below (maximum) or both above (minimum) it.
struct ReflexExtremum {
    ExtremumKind kind;
    std::vector<std::size_t> vertices; // one index, or two for a horizontal edge
    double level;
};

/// Polygon vertex set bounding the strip from one side.
struct StripSource {
    bool fallback = false; // extreme vertex of P used because no reflex extremum exists
    std::vector<std::size_t> vertices;

    friend bool operator==(const StripSource&, const StripSource&) = default;
};

struct Strip {
    double north = 0; // level of the lowest reflex minimum
    double south = 0; // level of the highest reflex maximum
    StripSource north_source;
    StripSource south_source;

    bool inverted(double eps = tol::length) const noexcept { return south > north + eps; }
};

/// Extrema with respect to the horizontal orientation of the polygon's own frame.
inline std::vector<ReflexExtremum> reflex_extrema(const SimplePolygon& p, double eps = tol::length) {
    std::vector<ReflexExtremum> out;
    const std::size_t n = p.size();
    auto horizontal = [&](std::size_t i) { return std::abs(p[p.next(i)].y - p[i].y) <= eps; };
    for (std::size_t i = 0; i < n; ++i) {
        if (horizontal(p.prev(i))) continue; // already part of the run starting at prev(i)
        std::vector<std::size_t> run{i};
        if (horizontal(i)) run.push_back(p.next(i));
        bool reflex = true;
        for (std::size_t v : run) reflex &= p.is_reflex(v);
        if (!reflex) continue;
        double level = 0;
        for (std::size_t v : run) level += p[v].y;
        level /= static_cast<double>(run.size());
        const double below = p[p.prev(run.front())].y, after = p[p.next(run.back())].y;
        if (below < level - eps && after < level - eps)
            out.push_back({ExtremumKind::ReflexMax, run, level});
        else if (below > level + eps && after > level + eps)
            out.push_back({ExtremumKind::ReflexMin, run, level});
    }
    return out;
}

inline Strip strip(const SimplePolygon& p, double eps = tol::length) {
    Strip s;
    bool have_min = false, have_max = false;
    for (const auto& e : reflex_extrema(p, eps)) {
        if (e.kind == ExtremumKind::ReflexMin && (!have_min || e.level < s.north)) {
            s.north = e.level;
            s.north_source = {false, e.vertices};
            have_min = true;
        }
        if (e.kind == ExtremumKind::ReflexMax && (!have_max || e.level > s.south)) {
            s.south = e.level;
            s.south_source = {false, e.vertices};
            have_max = true;
        }
    }
    if (!have_min || !have_max) {
        std::size_t top = 0, bottom = 0;
        for (std::size_t i = 1; i < p.size(); ++i) {
            if (p[i].y > p[top].y) top = i;
            if (p[i].y < p[bottom].y) bottom = i;
        }
        if (!have_min) s.north = p[top].y, s.north_source = {true, {top}};
        if (!have_max) s.south = p[bottom].y, s.south_source = {true, {bottom}};
    }
    return s;
}

namespace detail {

/// Line at direction `angle` (any real) through `anchor`, with the side that lies to the
/// right of that direction, expressed for the canonical [0, pi) direction.
inline std::pair<Line, Side> oriented(Point anchor, double angle, Side side_of_direction) {
    const Line l = line_at_angle(anchor, angle);
    const bool flipped = std::abs(normalize_direction(angle) - wrap_angle(angle, 0, 2 * pi)) > 1;
    return {l, flipped ? opposite(side_of_direction) : side_of_direction};
}

inline double trapezoid_area(std::span<const TaggedPoint> ring) noexcept {
    double s = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point a = ring[i].p, b = ring[(i + 1) % ring.size()].p;
        s += (b.y - a.y) * (a.x + b.x) / 2;
    }
    return s;
}

} // namespace detail

/// Rotated strip-and-clip kernel of `p` for the orientation at angle theta in [-pi/2, pi/2).
inline KernelRegion kernel_at(const SimplePolygon& p, double theta, double eps = tol::length) {
    theta = normalize_half_turn(theta);
    const SimplePolygon work = rotate(p, -theta);
    const Strip s = strip(work, eps);
    KernelRegion out;
    auto to_original = [&](Point q) { return rotate(q, theta); };
    {
        const Point north_anchor = to_original({work[s.north_source.vertices.front()].x, s.north});
        const Point south_anchor = to_original({work[s.south_source.vertices.front()].x, s.south});
        auto [ln, kn] = detail::oriented(north_anchor, theta, Side::Right);
        auto [ls, ks] = detail::oriented(south_anchor, theta, Side::Left);
        using O = SupportingConstraint::Origin;
        out.constraints.push_back({ln, kn, s.north_source.fallback ? O::HullFallback : O::ReflexMinimum,
                                   static_cast<int>(s.north_source.vertices.front())});
        out.constraints.push_back({ls, ks, s.south_source.fallback ? O::HullFallback : O::ReflexMaximum,
                                   static_cast<int>(s.south_source.vertices.front())});
    }
    if (s.inverted(eps)) return out;
    if (s.north - s.south <= eps) {
        out.degenerate = true;
        return out;
    }
    const HalfPlane below_north{{0, s.north}, {0, -1}};
    const HalfPlane above_south{{0, s.south}, {0, 1}};
    std::vector<std::vector<TaggedPoint>> pieces{tag_ring(work.vertices())};
    const HalfPlane cuts[] = {below_north, above_south};
    pieces = clip_ring_all(std::move(pieces), cuts);
    if (pieces.empty()) {
        out.degenerate = true;
        return out;
    }
    if (pieces.size() > 1) throw DisconnectedKernel(pieces.size());
    const auto& ring = pieces.front();
    const std::size_t m = ring.size();

    std::vector<char> on_s(m), on_n(m);
    for (std::size_t i = 0; i < m; ++i) {
        on_s[i] = std::abs(ring[i].p.y - s.south) <= eps;
        on_n[i] = std::abs(ring[i].p.y - s.north) <= eps;
    }
    // Walk counterclockwise: south line, right chain, north line, left chain.
    auto collect = [&](const std::vector<char>& from, const std::vector<char>& to, std::vector<Point>& chain,
                       int& first, int& last) {
        std::size_t k = m;
        for (std::size_t i = 0; i < m; ++i)
            if (from[i] && !from[(i + 1) % m]) k = i;
        if (k == m) return;
        for (std::size_t step = 0; step <= m; ++step) {
            const auto& t = ring[(k + step) % m];
            chain.push_back(to_original(t.p));
            if (t.vertex >= 0) {
                if (first < 0) first = t.vertex;
                last = t.vertex;
            }
            if (step > 0 && to[(k + step) % m]) break;
        }
    };
    collect(on_s, on_n, out.right_chain, out.right_first, out.right_last);
    collect(on_n, on_s, out.left_chain, out.left_first, out.left_last);

    out.area = detail::trapezoid_area(ring);
    out.perimeter = ring_perimeter(untag(ring));
    std::vector<Point> back;
    back.reserve(m);
    for (const auto& t : ring) back.push_back(to_original(t.p));
    out.polygon = SimplePolygon(std::move(back), SimplePolygon::Validation::Normalize);
    return out;
}

inline std::pair<double, double> kernel_area_perimeter(const SimplePolygon& p, double theta) {
    const auto k = kernel_at(p, theta);
    return {k.area, k.perimeter};
}

} // namespace rotokernel::steady
