#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "point.hpp"

namespace rotokernel {

inline double signed_area(std::span<const Point> ring) noexcept {
    double s = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) s += cross(ring[i], ring[(i + 1) % n]);
    return s / 2;
}

inline double ring_perimeter(std::span<const Point> ring) noexcept {
    double s = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) s += distance(ring[i], ring[(i + 1) % n]);
    return s;
}

/// True if p lies on the closed segment [a, b] within tolerance.
inline bool on_segment(Point a, Point b, Point p, double eps = tol::length) noexcept {
    const Point d = b - a;
    const double len = norm(d);
    if (len <= eps) return distance(a, p) <= eps;
    if (std::abs(cross(d, p - a)) / len > eps) return false;
    const double t = dot(p - a, d) / (len * len);
    return t >= -eps / len && t <= 1 + eps / len;
}

/// Closed-segment intersection test (touching counts).
inline bool segments_intersect(Point a, Point b, Point c, Point d) noexcept {
    const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

namespace detail {

/// Drops repeated points, then collinear middle vertices, until stable.
inline std::vector<Point> normalize_ring(std::vector<Point> pts) {
    bool changed = true;
    while (changed && pts.size() >= 3) {
        changed = false;
        std::vector<Point> out;
        out.reserve(pts.size());
        for (const Point& p : pts)
            if (out.empty() || !almost_equal(out.back(), p)) out.push_back(p);
        while (out.size() > 1 && almost_equal(out.front(), out.back())) out.pop_back();
        if (out.size() != pts.size()) changed = true;
        pts = std::move(out);
        const std::size_t n = pts.size();
        if (n < 3) break;
        std::vector<char> keep(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t prev = (i + n - 1) % n, next = (i + 1) % n;
            if (!keep[prev]) continue;
            if (orientation(pts[prev], pts[i], pts[next]) == 0) {
                keep[i] = 0;
                changed = true;
            }
        }
        if (changed) {
            std::vector<Point> kept;
            for (std::size_t i = 0; i < n; ++i)
                if (keep[i]) kept.push_back(pts[i]);
            pts = std::move(kept);
        }
    }
    return pts;
}

/// Index of an edge pair (i, j) that intersects improperly, or {n, n} when none.
inline std::pair<std::size_t, std::size_t> find_self_intersection(std::span<const Point> v) {
    const std::size_t n = v.size();
    auto adjacent = [n](std::size_t i, std::size_t j) { return j == i + 1 || (i == 0 && j == n - 1); };
    auto test = [&](std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        if (i == j || adjacent(i, j)) return false;
        return segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]);
    };
    if (n <= 64) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 2; j < n; ++j)
                if (test(i, j)) return {i, j};
        return {n, n};
    }
    // Uniform grid over the bounding box; each edge is registered in every cell its box touches.
    double x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
    for (const Point& p : v) {
        x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
    const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    const double cw = std::max((x1 - x0) / side, 1e-12), ch = std::max((y1 - y0) / side, 1e-12);
    auto cell_x = [&](double x) { return std::min(side - 1, static_cast<std::size_t>(std::max(0.0, (x - x0) / cw))); };
    auto cell_y = [&](double y) { return std::min(side - 1, static_cast<std::size_t>(std::max(0.0, (y - y0) / ch))); };
    std::vector<std::vector<std::size_t>> cells(side * side);
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i], b = v[(i + 1) % n];
        const double pad = tol::length;
        for (std::size_t cx = cell_x(std::min(a.x, b.x) - pad); cx <= cell_x(std::max(a.x, b.x) + pad); ++cx)
            for (std::size_t cy = cell_y(std::min(a.y, b.y) - pad); cy <= cell_y(std::max(a.y, b.y) + pad); ++cy)
                cells[cy * side + cx].push_back(i);
    }
    for (const auto& cell : cells)
        for (std::size_t a = 0; a < cell.size(); ++a)
            for (std::size_t b = a + 1; b < cell.size(); ++b)
                if (test(cell[a], cell[b])) return {std::min(cell[a], cell[b]), std::max(cell[a], cell[b])};
    return {n, n};
}

} // namespace detail

/// Simple polygon with counterclockwise vertices, no repeated or collinear
/// consecutive vertices and positive area.
class SimplePolygon {
public:
    enum class Validation {
        Full,      // normalize, check orientation and simplicity
        Normalize, // normalize and check orientation only
    };

    SimplePolygon() = default;

    explicit SimplePolygon(std::vector<Point> vertices, Validation validation = Validation::Full) {
        for (const Point& p : vertices)
            if (!is_finite(p)) throw InvalidPolygon("non-finite coordinate");
        vertices_ = detail::normalize_ring(std::move(vertices));
        if (vertices_.size() < 3) throw InvalidPolygon("fewer than three distinct non-collinear vertices");
        if (signed_area(vertices_) <= 0) throw InvalidPolygon("vertices are not in counterclockwise order");
        if (validation == Validation::Full) {
            auto [i, j] = detail::find_self_intersection(vertices_);
            if (i != vertices_.size())
                throw InvalidPolygon("edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
    }

    /// Accepts either orientation; `reversed` reports whether the input was clockwise.
    static SimplePolygon any_orientation(std::vector<Point> vertices, bool* reversed = nullptr,
                                         Validation validation = Validation::Full) {
        const bool cw = signed_area(vertices) < 0;
        if (cw) std::reverse(vertices.begin(), vertices.end());
        if (reversed) *reversed = cw;
        return SimplePolygon(std::move(vertices), validation);
    }

    /// Wraps vertices that are already known to satisfy every invariant.
    static SimplePolygon trusted(std::vector<Point> vertices) {
        SimplePolygon p;
        p.vertices_ = std::move(vertices);
        return p;
    }

    std::span<const Point> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const Point& operator[](std::size_t i) const noexcept { return vertices_[i]; }
    const Point& vertex(std::ptrdiff_t i) const noexcept {
        const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
        return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
    }
    std::size_t next(std::size_t i) const noexcept { return i + 1 == vertices_.size() ? 0 : i + 1; }
    std::size_t prev(std::size_t i) const noexcept { return i == 0 ? vertices_.size() - 1 : i - 1; }

    /// Interior angle at vertex i exceeds pi.
    bool is_reflex(std::size_t i) const noexcept {
        return orientation(vertices_[prev(i)], vertices_[i], vertices_[next(i)]) < 0;
    }

    friend bool operator==(const SimplePolygon&, const SimplePolygon&) = default;

private:
    std::vector<Point> vertices_;
};

inline double area(const SimplePolygon& p) noexcept { return signed_area(p.vertices()); }
inline double perimeter(const SimplePolygon& p) noexcept { return ring_perimeter(p.vertices()); }

inline SimplePolygon rotate(const SimplePolygon& p, double angle) {
    std::vector<Point> v;
    v.reserve(p.size());
    const double c = std::cos(angle), s = std::sin(angle);
    for (const Point& q : p.vertices()) v.push_back({q.x * c - q.y * s, q.x * s + q.y * c});
    return SimplePolygon::trusted(std::move(v));
}

enum class Location { Outside, Boundary, Inside };

inline Location locate(std::span<const Point> ring, Point q, double eps = tol::length) noexcept {
    const std::size_t n = ring.size();
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point a = ring[j], b = ring[i];
        if (on_segment(a, b, q, eps)) return Location::Boundary;
        if ((a.y > q.y) != (b.y > q.y)) {
            const double x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (q.x < x) inside = !inside;
        }
    }
    return inside ? Location::Inside : Location::Outside;
}

inline Location locate(const SimplePolygon& p, Point q, double eps = tol::length) noexcept {
    return locate(p.vertices(), q, eps);
}

struct Box {
    double xmin, ymin, xmax, ymax;
};

inline Box bounding_box(std::span<const Point> pts) noexcept {
    Box b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const Point& p : pts) {
        b.xmin = std::min(b.xmin, p.x), b.xmax = std::max(b.xmax, p.x);
        b.ymin = std::min(b.ymin, p.y), b.ymax = std::max(b.ymax, p.y);
    }
    return b;
}

} // namespace rotokernel
