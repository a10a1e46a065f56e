#pragma once

#include <array>
#include <cmath>

#include "errors.hpp"
#include "point.hpp"

namespace rotokernel {

/// Which side of a directed line to keep. Left is the side the counterclockwise
/// normal points to ("above" for a horizontal line), Right the other one.
enum class Side { Left, Right };

constexpr Side opposite(Side s) noexcept { return s == Side::Left ? Side::Right : Side::Left; }

/// Line through `anchor` with direction angle in [0, pi), in point-angle form
///   (x - anchor.x) sin(angle) - (y - anchor.y) cos(angle) = 0.
struct Line {
    Point anchor;
    double angle = 0;

    /// Value of the implicit form; positive on the Right side.
    double evaluate(Point p) const noexcept {
        return (p.x - anchor.x) * std::sin(angle) - (p.y - anchor.y) * std::cos(angle);
    }
    /// Signed offset x sin - y cos of every point on the line.
    double offset() const noexcept { return anchor.x * std::sin(angle) - anchor.y * std::cos(angle); }
    Point direction() const noexcept { return unit_direction(angle); }

    friend bool operator==(const Line& a, const Line& b) noexcept {
        return std::abs(a.angle - b.angle) <= tol::angle && std::abs(a.offset() - b.offset()) <= tol::length;
    }
};

inline Line line_at_angle(Point u, double angle) { return Line{u, normalize_direction(angle)}; }

inline Line line_through(Point a, Point b) { return line_at_angle(a, std::atan2(b.y - a.y, b.x - a.x)); }

/// Closed halfplane {p : (p - anchor) . normal >= 0}; `normal` has unit length.
struct HalfPlane {
    Point anchor;
    Point normal;

    double signed_distance(Point p) const noexcept { return dot(p - anchor, normal); }
    bool contains(Point p, double eps = tol::length) const noexcept { return signed_distance(p) >= -eps; }
};

inline HalfPlane halfplane(const Line& l, Side keep) noexcept {
    const Point left = perp(l.direction());
    return {l.anchor, keep == Side::Left ? left : -left};
}

/// Intersection of the line through `u` at `angle` with y = y0.
inline Point intersect_with_horizontal(Point u, double angle, double y0) {
    const double a = normalize_direction(angle);
    if (a <= tol::angle || pi - a <= tol::angle)
        throw DegenerateIntersection("line parallel to y = y0");
    return {u.x + (y0 - u.y) * (std::cos(a) / std::sin(a)), y0};
}

/// Intersection of the line through `u` at `angle` with x = x0.
inline Point intersect_with_vertical(Point u, double angle, double x0) {
    const double a = normalize_direction(angle);
    if (std::abs(a - half_pi) <= tol::angle) throw DegenerateIntersection("line parallel to x = x0");
    return {x0, u.y + (x0 - u.x) * std::tan(a)};
}

/// Coefficients (c0, c1, c2) of (c0 + c1 cos 2t + c2 sin 2t) / 2.
struct HarmonicForm {
    double c0 = 0, c1 = 0, c2 = 0;

    double operator()(double angle) const noexcept {
        return 0.5 * (c0 + c1 * std::cos(2 * angle) + c2 * std::sin(2 * angle));
    }
};

/// Double-angle form of the meeting point of the angle-t line through u and the
/// (t + 90 deg) line through w, valid for every t.
struct OrthogonalPairForm {
    HarmonicForm x;
    HarmonicForm y;

    Point operator()(double angle) const noexcept { return {x(angle), y(angle)}; }
};

inline OrthogonalPairForm orthogonal_pair_form(Point u, Point w) noexcept {
    return {{u.x + w.x, -(u.x - w.x), w.y - u.y}, {u.y + w.y, u.y - w.y, w.x - u.x}};
}

/// Intersection of the angle line through u with the perpendicular line through w,
///   x = u.x sin^2 + w.x cos^2 + (w.y - u.y) sin cos
///   y = u.y cos^2 + w.y sin^2 + (w.x - u.x) sin cos.
/// Axis-aligned angles go through the horizontal/vertical forms.
inline Point intersect_orthogonal_pair(Point u, Point w, double angle) {
    const double a = normalize_direction(angle);
    if (a <= tol::angle || pi - a <= tol::angle) return intersect_with_horizontal(w, half_pi, u.y);
    if (std::abs(a - half_pi) <= tol::angle) return intersect_with_vertical(w, 0.0, u.x);
    const double s = std::sin(a), c = std::cos(a);
    return {u.x * s * s + w.x * c * c + (w.y - u.y) * s * c, u.y * c * c + w.y * s * s + (w.x - u.x) * s * c};
}

} // namespace rotokernel
