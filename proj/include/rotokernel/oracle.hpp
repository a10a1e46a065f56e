#pragma once

// Slow reference implementations for checking the kernel modules: kernels by clipping
// with every candidate line, dense angle scans, grid staircase search and test polygons.
// Only the planar primitives are shared with the fast code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "generators.hpp"
#include "kernel_region.hpp"

namespace rotokernel::oracle {

enum class Mode { Single, Double };

namespace detail {

/// Height of the first neighbour off the horizontal run through vertex i, walking by `step`.
inline double off_run_height(std::span<const Point> v, std::size_t i, int step) {
    const std::size_t n = v.size();
    std::size_t j = i;
    for (std::size_t k = 0; k < n; ++k) {
        j = (j + n + step) % n;
        if (std::abs(v[j].y - v[i].y) > tol::length) return v[j].y;
    }
    return v[i].y;
}

/// Lower and upper strip levels of a polygon given by a ring, from every reflex vertex.
inline std::pair<double, double> strip_levels(std::span<const Point> v) {
    const std::size_t n = v.size();
    double south = -std::numeric_limits<double>::infinity(), north = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(v[(i + n - 1) % n], v[i], v[(i + 1) % n]) >= 0) continue;
        const double a = off_run_height(v, i, -1), b = off_run_height(v, i, 1);
        if (a < v[i].y && b < v[i].y) south = std::max(south, v[i].y);
        if (a > v[i].y && b > v[i].y) north = std::min(north, v[i].y);
    }
    return {south, north};
}

inline KernelRegion region_of(std::vector<std::vector<TaggedPoint>> pieces, double back_rotation) {
    KernelRegion out;
    double total = 0;
    std::optional<SimplePolygon> best;
    for (const auto& piece : pieces) {
        std::vector<Point> ring;
        for (const auto& t : piece) ring.push_back(rotate(t.p, back_rotation));
        try {
            SimplePolygon q(std::move(ring), SimplePolygon::Validation::Normalize);
            total += area(q);
            if (!best || area(q) > area(*best)) best = std::move(q);
        } catch (const InvalidPolygon&) {
        }
    }
    if (!best) return out;
    out = make_region(std::move(*best));
    out.area = total;
    return out;
}

inline std::vector<Point> rotated(std::span<const Point> v, double angle) {
    std::vector<Point> out;
    out.reserve(v.size());
    for (const Point& p : v) out.push_back(rotate(p, angle));
    return out;
}

/// Strip halfplanes in the frame rotated by -theta, for the given ring.
inline std::vector<HalfPlane> strip_halfplanes(std::span<const Point> v) {
    const auto [south, north] = strip_levels(v);
    std::vector<HalfPlane> hs;
    if (std::isfinite(north)) hs.push_back({{0, north}, {0, -1}});
    if (std::isfinite(south)) hs.push_back({{0, south}, {0, 1}});
    return hs;
}

inline bool inverted(std::span<const Point> v) {
    const auto [south, north] = strip_levels(v);
    return south > north + tol::length;
}

} // namespace detail

/// Kernel by brute force. Single: P rotated by -theta, cut to the band between the highest
/// reflex maximum and the lowest reflex minimum. Double (orthogonal P, theta in [0, pi/2)):
/// P cut by the clip line of every reflex vertex and every extremity corner, or at theta = 0
/// by the bands for 0 and 90 degrees.
inline KernelRegion kernel_full_clip(const SimplePolygon& p, double theta, Mode mode) {
    const auto verts = p.vertices();
    if (mode == Mode::Single) {
        const auto ring = detail::rotated(verts, -theta);
        if (detail::inverted(ring)) return {};
        const auto hs = detail::strip_halfplanes(ring);
        return detail::region_of(clip_ring_all({tag_ring(ring)}, hs), theta);
    }
    if (std::abs(theta) <= tol::angle) {
        const auto upright = detail::rotated(verts, -half_pi);
        if (detail::inverted(verts) || detail::inverted(upright)) return {};
        auto hs = detail::strip_halfplanes(verts);
        for (const HalfPlane& h : detail::strip_halfplanes(upright))
            hs.push_back({rotate(h.anchor, half_pi), rotate(h.normal, half_pi)});
        return detail::region_of(clip_ring_all({tag_ring(verts)}, hs), 0);
    }
    const std::size_t n = verts.size();
    const Point dir = unit_direction(theta), normal{-dir.y, dir.x};
    // A corner faces north when one of its edges runs west, east when one runs north.
    auto corner_halfplanes = [&](std::size_t i, std::vector<HalfPlane>& hs) {
        const Point in = verts[i] - verts[(i + n - 1) % n], out = verts[(i + 1) % n] - verts[i];
        const bool north = in.x < 0 || out.x < 0;
        const bool east = in.y > 0 || out.y > 0;
        const Point r = verts[i];
        if (north && !east) hs.push_back({r, -normal}); // below the theta line
        if (!north && east) hs.push_back({r, normal});  // above the theta line
        if (north && east) hs.push_back({r, -dir});     // behind the perpendicular line
        if (!north && !east) hs.push_back({r, dir});    // ahead of the perpendicular line
    };
    std::vector<HalfPlane> hs;
    for (std::size_t i = 0; i < n; ++i)
        if (orientation(verts[(i + n - 1) % n], verts[i], verts[(i + 1) % n]) < 0) corner_halfplanes(i, hs);
    // Both ends of every lowest N-, leftmost E-, highest S- and rightmost W-extremity are
    // treated like reflex corners with the same two edge directions.
    auto convex = [&](std::size_t i) { return orientation(verts[(i + n - 1) % n], verts[i], verts[(i + 1) % n]) > 0; };
    double low_n = std::numeric_limits<double>::infinity(), left_e = low_n;
    double high_s = -low_n, right_w = -low_n;
    std::vector<std::size_t> ext;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = verts[i], b = verts[(i + 1) % n];
        if (!convex(i) || !convex((i + 1) % n)) continue;
        ext.push_back(i);
        if (b.x < a.x) low_n = std::min(low_n, a.y);
        if (b.x > a.x) high_s = std::max(high_s, a.y);
        if (b.y > a.y) left_e = std::min(left_e, a.x);
        if (b.y < a.y) right_w = std::max(right_w, a.x);
    }
    for (std::size_t i : ext) {
        const Point a = verts[i], b = verts[(i + 1) % n];
        const bool extreme = (b.x < a.x && std::abs(a.y - low_n) <= tol::length) ||
                             (b.x > a.x && std::abs(a.y - high_s) <= tol::length) ||
                             (b.y > a.y && std::abs(a.x - left_e) <= tol::length) ||
                             (b.y < a.y && std::abs(a.x - right_w) <= tol::length);
        if (!extreme) continue;
        corner_halfplanes(i, hs);
        corner_halfplanes((i + 1) % n, hs);
    }
    return detail::region_of(clip_ring_all({tag_ring(verts)}, hs), 0);
}

struct ScanResult {
    std::vector<double> thetas;
    std::vector<char> empty;
    std::vector<double> area;
    std::vector<double> perimeter;
};

/// Kernel on the grid lo + i (hi - lo) / samples, i < samples.
inline ScanResult dense_scan(const SimplePolygon& p, double lo, double hi, std::size_t samples, Mode mode,
                             unsigned threads = std::max(1u, std::thread::hardware_concurrency())) {
    if (samples < 2) throw std::invalid_argument("dense_scan needs at least two samples");
    ScanResult r;
    r.thetas.resize(samples);
    r.empty.resize(samples);
    r.area.resize(samples);
    r.perimeter.resize(samples);
    auto work = [&](std::size_t first) {
        for (std::size_t i = first; i < samples; i += threads) {
            const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples);
            const auto k = kernel_full_clip(p, t, mode);
            r.thetas[i] = t;
            r.empty[i] = k.empty();
            r.area[i] = k.area;
            r.perimeter[i] = k.perimeter;
        }
    };
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, samples));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& t : pool) t.join();
    return r;
}

/// Cell centres of a monotone grid path.
struct GridPath {
    double h = 0;
    std::vector<Point> cells;
};

/// Free cells of the polygon rotated by -theta: all four corners inside, no polygon vertex in the cell.
struct VisibilityGrid {
    std::vector<Point> ring; // rotated polygon
    double x0 = 0, y0 = 0, h = 0;
    long nx = 0, ny = 0;
    double theta = 0;
    std::vector<char> free;

    Point centre(long i, long j) const { return {x0 + (i + 0.5) * h, y0 + (j + 0.5) * h}; }
    bool ok(long i, long j) const { return i >= 0 && j >= 0 && i < nx && j < ny && free[j * nx + i]; }

    /// Whether the cell holding q (original frame) is free.
    bool free_at(Point q) const {
        const Point r = rotate(q, -theta);
        return ok(static_cast<long>(std::floor((r.x - x0) / h)), static_cast<long>(std::floor((r.y - y0) / h)));
    }
};

inline VisibilityGrid visibility_grid(const SimplePolygon& p, double theta, double h) {
    VisibilityGrid g;
    g.theta = theta;
    g.ring = detail::rotated(p.vertices(), -theta);
    const Box b = bounding_box(g.ring);
    g.h = h;
    g.x0 = b.xmin, g.y0 = b.ymin;
    g.nx = static_cast<long>(std::ceil((b.xmax - b.xmin) / h)) + 1;
    g.ny = static_cast<long>(std::ceil((b.ymax - b.ymin) / h)) + 1;
    std::vector<char> corner(static_cast<std::size_t>((g.nx + 1) * (g.ny + 1)));
    for (long j = 0; j <= g.ny; ++j)
        for (long i = 0; i <= g.nx; ++i)
            corner[j * (g.nx + 1) + i] = locate(g.ring, {g.x0 + i * h, g.y0 + j * h}) == Location::Inside;
    g.free.assign(static_cast<std::size_t>(g.nx * g.ny), 0);
    for (long j = 0; j < g.ny; ++j)
        for (long i = 0; i < g.nx; ++i)
            g.free[j * g.nx + i] = corner[j * (g.nx + 1) + i] && corner[j * (g.nx + 1) + i + 1] &&
                                   corner[(j + 1) * (g.nx + 1) + i] && corner[(j + 1) * (g.nx + 1) + i + 1];
    for (const Point& v : g.ring) {
        const long i = static_cast<long>(std::floor((v.x - g.x0) / h)), j = static_cast<long>(std::floor((v.y - g.y0) / h));
        if (i >= 0 && j >= 0 && i < g.nx && j < g.ny) g.free[j * g.nx + i] = 0;
    }
    return g;
}

/// Grid search for a staircase from p to q: in the frame rotated by -theta, a path that is
/// monotone in y (Single) or in both x and y (Double). One-sided: a path found is a
/// staircase inside P; a miss may be a false negative near features of size h.
inline std::optional<GridPath> staircase_path(const VisibilityGrid& g, Point from, Point to, Mode mode = Mode::Double) {
    if (locate(g.ring, rotate(from, -g.theta)) != Location::Inside || locate(g.ring, rotate(to, -g.theta)) != Location::Inside)
        throw PointOutside("staircase endpoints must lie strictly inside the polygon");
    const double h = g.h, theta = g.theta;
    const Point a = rotate(from, -theta), b = rotate(to, -theta);
    const long ai = static_cast<long>(std::floor((a.x - g.x0) / h)), aj = static_cast<long>(std::floor((a.y - g.y0) / h));
    const long bi = static_cast<long>(std::floor((b.x - g.x0) / h)), bj = static_cast<long>(std::floor((b.y - g.y0) / h));
    if (!g.ok(ai, aj) || !g.ok(bi, bj)) return std::nullopt;
    const int sx = (bi > ai) - (bi < ai), sy = (bj > aj) - (bj < aj);
    std::vector<std::pair<int, int>> moves;
    for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
            if ((di == 0 && dj == 0) || (dj != 0 && dj != sy)) continue;
            if (mode == Mode::Double && di != 0 && di != sx) continue;
            moves.emplace_back(di, dj);
        }
    std::vector<long> parent(g.free.size(), -2);
    std::deque<long> queue{aj * g.nx + ai};
    parent[queue.front()] = -1;
    const long target = bj * g.nx + bi;
    while (!queue.empty() && parent[target] == -2) {
        const long c = queue.front();
        queue.pop_front();
        const long ci = c % g.nx, cj = c / g.nx;
        for (auto [di, dj] : moves) {
            const long ni = ci + di, nj = cj + dj;
            if (!g.ok(ni, nj) || parent[nj * g.nx + ni] != -2) continue;
            if (di && dj && (!g.ok(ci + di, cj) || !g.ok(ci, cj + dj))) continue;
            parent[nj * g.nx + ni] = c;
            queue.push_back(nj * g.nx + ni);
        }
    }
    if (parent[target] == -2) return std::nullopt;
    GridPath path{h, {}};
    for (long c = target; c != -1; c = parent[c]) path.cells.push_back(rotate(g.centre(c % g.nx, c / g.nx), theta));
    std::reverse(path.cells.begin(), path.cells.end());
    return path;
}

inline std::optional<GridPath> staircase_path(const SimplePolygon& p, Point from, Point to, double theta, double h,
                                              Mode mode = Mode::Double) {
    return staircase_path(visibility_grid(p, theta, h), from, to, mode);
}

inline bool staircase_visible(const SimplePolygon& p, Point from, Point to, double theta, double h,
                              Mode mode = Mode::Double) {
    return staircase_path(p, from, to, theta, h, mode).has_value();
}

enum class GeneratorKind { RandomSimple, FamilyQ, Staircase, WithBlockingPair, NotInFamily };

inline const char* to_string(GeneratorKind k) {
    constexpr const char* names[] = {"random_simple", "family_q", "staircase", "with_blocking_pair", "not_in_family"};
    return names[static_cast<int>(k)];
}

/// Seed from ROTOKERNEL_SEED when set, else `fallback`.
inline std::uint64_t seed_or_env(std::uint64_t fallback) {
    if (const char* s = std::getenv("ROTOKERNEL_SEED"); s && *s) return std::strtoull(s, nullptr, 10);
    return fallback;
}

inline SimplePolygon generate(GeneratorKind kind, std::size_t n, std::uint64_t seed) {
    switch (kind) {
    case GeneratorKind::RandomSimple: return gen::random_simple(n, seed);
    case GeneratorKind::FamilyQ: return gen::family_q(n, seed);
    case GeneratorKind::Staircase: return gen::staircase(n, seed);
    case GeneratorKind::WithBlockingPair: return gen::with_blocking_pair(n, seed);
    case GeneratorKind::NotInFamily: return gen::hooked(n, seed);
    }
    throw GenerationFailed("unknown generator");
}

} // namespace rotokernel::oracle
