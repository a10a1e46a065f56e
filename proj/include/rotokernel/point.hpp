#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rotokernel {

inline constexpr double pi = std::numbers::pi;
inline constexpr double half_pi = std::numbers::pi / 2;

/// Fixed tolerances, valid for coordinates with magnitude at most 1e6.
namespace tol {
inline constexpr double angle = 1e-12; // direction coincidence (rad)
inline constexpr double length = 1e-9; // point coincidence
inline constexpr double area = 1e-9;   // sine threshold for collinearity
inline constexpr double max_coordinate = 1e6;
} // namespace tol

struct Point {
    double x = 0;
    double y = 0;

    friend constexpr Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point a) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr Point operator*(Point a, double s) noexcept { return {s * a.x, s * a.y}; }
    friend constexpr Point operator/(Point a, double s) noexcept { return {a.x / s, a.y / s}; }
    friend constexpr Point operator-(Point a) noexcept { return {-a.x, -a.y}; }
    friend constexpr bool operator==(Point a, Point b) noexcept = default;
};

constexpr double dot(Point a, Point b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) noexcept { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) noexcept { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) noexcept { return norm(b - a); }
/// Counterclockwise quarter turn.
constexpr Point perp(Point a) noexcept { return {-a.y, a.x}; }
inline Point unit_direction(double angle) noexcept { return {std::cos(angle), std::sin(angle)}; }

inline bool almost_equal(Point a, Point b, double eps = tol::length) noexcept {
    return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps;
}

inline bool is_finite(Point p) noexcept { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Rotates `p` counterclockwise about the origin.
inline Point rotate(Point p, double angle) noexcept {
    const double c = std::cos(angle), s = std::sin(angle);
    return {p.x * c - p.y * s, p.x * s + p.y * c};
}

/// Sign of (q-p) x (r-p); zero when the sine of the angle at p is within the area tolerance.
inline int orientation(Point p, Point q, Point r) noexcept {
    const Point a = q - p, b = r - p;
    const double c = cross(a, b);
    if (std::abs(c) <= tol::area * norm(a) * norm(b)) return 0;
    return c > 0 ? 1 : -1;
}

/// Maps any angle into [lo, lo + period).
inline double wrap_angle(double a, double lo, double period) noexcept {
    double r = std::fmod(a - lo, period);
    if (r < 0) r += period;
    if (r >= period) r -= period;
    return lo + r;
}

/// Rotation domain of a single orientation: [-pi/2, pi/2).
inline double normalize_half_turn(double a) noexcept { return wrap_angle(a, -half_pi, pi); }
/// Rotation domain of the orthogonal pair {0, 90}: [0, pi/2).
inline double normalize_quarter_turn(double a) noexcept { return wrap_angle(a, 0.0, half_pi); }
/// Line direction domain: [0, pi).
inline double normalize_direction(double a) noexcept { return wrap_angle(a, 0.0, pi); }

} // namespace rotokernel
