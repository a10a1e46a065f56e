#pragma once

// Reproducible random test polygons.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "geom_core.hpp"

namespace rotokernel::gen {

namespace detail {

/// Reverses the chain between the first crossing pair of edges; false when none cross.
inline bool untangle_once(std::vector<Point>& v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_intersect(v[i], v[i + 1], v[j], v[(j + 1) % n])) {
                std::reverse(v.begin() + static_cast<std::ptrdiff_t>(i + 1), v.begin() + static_cast<std::ptrdiff_t>(j + 1));
                return true;
            }
        }
    return false;
}

inline SimplePolygon finish(std::vector<Point> v) {
    if (signed_area(v) < 0) std::reverse(v.begin(), v.end());
    return SimplePolygon(std::move(v), SimplePolygon::Validation::Normalize);
}

} // namespace detail

/// n random points in [0, 10]^2 sorted by angle around their centroid, then untangled
/// by 2-opt moves.
inline SimplePolygon random_simple(std::size_t n, std::uint64_t seed, std::size_t max_swaps = 10000) {
    if (n < 3) throw GenerationFailed("random_simple needs n >= 3");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 10);
    for (int attempt = 0; attempt < 16; ++attempt) {
        std::vector<Point> v(n);
        Point centre{0, 0};
        for (auto& p : v) p = {u(rng), u(rng)}, centre = centre + p;
        centre = (1.0 / static_cast<double>(n)) * centre;
        std::sort(v.begin(), v.end(), [&](Point a, Point b) {
            return std::atan2(a.y - centre.y, a.x - centre.x) < std::atan2(b.y - centre.y, b.x - centre.x);
        });
        std::size_t swaps = 0;
        while (swaps < max_swaps && detail::untangle_once(v)) ++swaps;
        if (swaps == max_swaps) continue;
        try {
            auto p = detail::finish(v);
            if (p.size() == n) return p;
        } catch (const InvalidPolygon&) {
        }
    }
    throw GenerationFailed("random_simple: untangling did not converge");
}

/// Orthogonal polygon with a single north-east staircase: (0,0), (x_k,0), (x_k,y_1),
/// (x_{k-1},y_1), ..., (x_1,y_k), (0,y_k). n must be even and at least 4.
inline SimplePolygon staircase(std::size_t n, std::uint64_t seed) {
    if (n < 4 || n % 2) throw GenerationFailed("staircase needs even n >= 4");
    const std::size_t k = n / 2 - 1;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> step(0.5, 1.5);
    std::vector<double> xs(k), ys(k);
    double x = 0, y = 0;
    for (std::size_t i = 0; i < k; ++i) xs[i] = x += step(rng); // x_1 < ... < x_k
    for (std::size_t i = 0; i < k; ++i) ys[i] = y += step(rng); // y_1 < ... < y_k
    std::vector<Point> v{{0, 0}, {xs[k - 1], 0}};
    for (std::size_t j = 0; j + 1 < k; ++j) {
        v.push_back({xs[k - 1 - j], ys[j]});
        v.push_back({xs[k - 2 - j], ys[j]});
    }
    v.push_back({xs[0], ys[k - 1]});
    v.push_back({0, ys[k - 1]});
    return SimplePolygon::trusted(std::move(v));
}

namespace detail {

/// Staircase cut from the corner (1, -1) of the square [-1, 1]^2, running
/// counterclockwise from the bottom side to the east side with `steps` reflex vertices.
inline std::vector<Point> corner_staircase(std::size_t steps, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.05, 0.95);
    std::vector<double> xs(steps), ys(steps);
    for (auto& x : xs) x = u(rng);
    for (auto& y : ys) y = -u(rng);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end() || std::adjacent_find(ys.begin(), ys.end()) != ys.end())
        throw GenerationFailed("repeated staircase coordinate");
    if (steps == 0) return {{1, -1}};
    std::vector<Point> v{{xs[0], -1}};
    for (std::size_t j = 0; j < steps; ++j) {
        v.push_back({xs[j], ys[j]});
        v.push_back({j + 1 < steps ? xs[j + 1] : 1.0, ys[j]});
    }
    return v;
}

inline Point quarter_turn(Point p, int turns) {
    for (int i = 0; i < turns; ++i) p = {-p.y, p.x};
    return p;
}

/// Corner staircases of an orthogonally convex polygon in [-1, 1]^2 with `reflex`
/// reflex vertices in total.
struct CornerLayout {
    std::array<std::vector<Point>, 4> corners; // SE, NE, NW, SW in the global frame
};

inline CornerLayout corner_layout(std::size_t reflex, std::mt19937_64& rng) {
    std::array<std::size_t, 4> k{};
    std::uniform_int_distribution<int> pick(0, 3);
    for (std::size_t i = 0; i < reflex; ++i) ++k[pick(rng)];
    CornerLayout out;
    for (int c = 0; c < 4; ++c)
        for (const Point& p : corner_staircase(k[c], rng)) out.corners[c].push_back(quarter_turn(p, c));
    return out;
}

} // namespace detail

/// Orthogonally convex polygon: four random corner staircases, n even and at least 4.
inline SimplePolygon family_q(std::size_t n, std::uint64_t seed) {
    if (n < 4 || n % 2) throw GenerationFailed("family_q needs even n >= 4");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        try {
            const auto layout = detail::corner_layout(n / 2 - 2, rng);
            std::vector<Point> v;
            for (const auto& c : layout.corners) v.insert(v.end(), c.begin(), c.end());
            return SimplePolygon(std::move(v), SimplePolygon::Validation::Normalize);
        } catch (const GenerationFailed&) {
        }
    }
    throw GenerationFailed("family_q: no valid polygon");
}

/// Orthogonal polygon whose east side carries a hook, so that the east boundary runs
/// downward somewhere; turned by a random multiple of 90 degrees. n even and at least 12.
inline SimplePolygon hooked(std::size_t n, std::uint64_t seed) {
    if (n < 12 || n % 2) throw GenerationFailed("hooked needs even n >= 12");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.02, 0.02);
    const int turns = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int attempt = 0; attempt < 16; ++attempt) {
        try {
            const auto layout = detail::corner_layout(n / 2 - 6, rng);
            const double lo = layout.corners[0].back().y, hi = layout.corners[1].front().y;
            const double d = hi - lo;
            const double y1 = lo + (0.1 + jitter(rng)) * d, y2 = lo + (0.7 + jitter(rng)) * d;
            const double y3 = lo + (0.4 + jitter(rng)) * d, y4 = lo + (0.9 + jitter(rng)) * d;
            const double x1 = 0.4 + jitter(rng), x2 = 0.7 + jitter(rng), x3 = 0.8 + jitter(rng);
            const std::vector<Point> hook{{1, y1}, {x1, y1}, {x1, y2}, {x2, y2}, {x2, y3}, {x3, y3}, {x3, y4}, {1, y4}};
            std::vector<Point> v = layout.corners[0];
            v.insert(v.end(), hook.begin(), hook.end());
            for (int c = 1; c < 4; ++c) v.insert(v.end(), layout.corners[c].begin(), layout.corners[c].end());
            for (auto& p : v) p = detail::quarter_turn(p, turns);
            return SimplePolygon(std::move(v), SimplePolygon::Validation::Normalize);
        } catch (const GenerationFailed&) {
        }
    }
    throw GenerationFailed("hooked: no valid polygon");
}

/// Two opposite notches whose reflex corners block every rotated {0, 90} kernel.
/// n even and at least 12; extra vertices become steps at the north-east corner.
inline SimplePolygon with_blocking_pair(std::size_t n, std::uint64_t seed) {
    if (n < 12 || n % 2) throw GenerationFailed("with_blocking_pair needs even n >= 12");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.8, 1.2);
    // Widths left to right: west block, top notch, middle, bottom notch, east block.
    const double x1 = u(rng), x2 = x1 + u(rng), x3 = x2 + u(rng), x4 = x3 + u(rng), x5 = x4 + u(rng) + 1;
    const double top_notch = u(rng), bottom_notch = top_notch + 0.5 + u(rng);
    const double h_left = bottom_notch + u(rng), h_right = h_left + 0.5 * u(rng);
    const double b_right = -0.5 * u(rng);
    const std::size_t steps = (n - 12) / 2;
    std::vector<Point> v{{0, 0}, {x3, 0}, {x3, bottom_notch}, {x4, bottom_notch}, {x4, b_right}, {x5, b_right}};
    // East side climbs to h_right through `steps` notches in the north-east corner.
    const double sx = (x5 - x4) / (steps + 2), sy = (h_right - bottom_notch) / (steps + 2);
    for (std::size_t j = 0; j < steps; ++j) {
        const double y = h_right - (steps - j) * sy, x = x5 - j * sx;
        v.push_back({x, y});
        v.push_back({x - sx, y});
    }
    v.push_back({x5 - steps * sx, h_right});
    v.insert(v.end(), {{x2, h_right}, {x2, top_notch}, {x1, top_notch}, {x1, h_left}, {0, h_left}});
    return SimplePolygon(std::move(v));
}

} // namespace rotokernel::gen
