#pragma once

// Angle in [0, pi/2) maximizing or minimizing the area or perimeter of the rotated
// {0, 90} kernel. The sweep walks the support-change events; inside each event interval
// the kernel vertices are closed-form functions of the angle.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ortho_sweep.hpp"

namespace rotokernel::ortho {

/// A line that may carry a kernel edge: rotating with the angle, or fixed.
struct KernelLine {
    enum class Kind { Parallel, Perpendicular, Horizontal, Vertical };
    Kind kind = Kind::Horizontal;
    Point anchor; // rotating lines pass through it; fixed lines contain it
    Side keep = Side::Left;

    Line at(double theta) const {
        switch (kind) {
        case Kind::Parallel: return line_at_angle(anchor, theta);
        case Kind::Perpendicular: return line_at_angle(anchor, theta + half_pi);
        case Kind::Horizontal: return line_at_angle(anchor, 0);
        case Kind::Vertical: return line_at_angle(anchor, half_pi);
        }
        return {};
    }
};

/// Kernel vertex as the meeting point of two kernel lines, as a function of the angle.
struct ParamVertex {
    KernelLine first, second;

    Point at(double theta) const {
        using K = KernelLine::Kind;
        KernelLine a = first, b = second;
        if (a.kind > b.kind) std::swap(a, b);
        if (a.kind == K::Parallel && b.kind == K::Perpendicular) return orthogonal_pair_form(a.anchor, b.anchor)(theta);
        if (a.kind == K::Parallel && b.kind == K::Horizontal) return intersect_with_horizontal(a.anchor, theta, b.anchor.y);
        if (a.kind == K::Parallel && b.kind == K::Vertical) return intersect_with_vertical(a.anchor, theta, b.anchor.x);
        if (a.kind == K::Perpendicular && b.kind == K::Horizontal)
            return intersect_with_horizontal(a.anchor, theta + half_pi, b.anchor.y);
        if (a.kind == K::Perpendicular && b.kind == K::Vertical)
            return intersect_with_vertical(a.anchor, theta + half_pi, b.anchor.x);
        if (a.kind == K::Horizontal && b.kind == K::Vertical) return {b.anchor.x, a.anchor.y};
        throw DegenerateIntersection("parallel kernel lines");
    }
};

/// The sixteen lines bounding the rotated kernel of a staircase-family polygon for fixed
/// supports: four support lines, eight extremity-corner lines and the four extreme extremities.
inline std::vector<KernelLine> kernel_lines(const OrthoClassification& c, const ExtremeExtremities& x,
                                            const std::array<std::optional<std::size_t>, 4>& supports) {
    const SimplePolygon& p = c.polygon;
    using K = KernelLine::Kind;
    std::vector<KernelLine> out;
    auto rotating = [&](ReflexKind k, Point a) {
        const auto con = reflex_constraint(k, a, 0.5, SupportingConstraint::Origin::ReflexVertex, -1);
        out.push_back({clips_parallel(k) ? K::Parallel : K::Perpendicular, a, con.keep});
    };
    for (ReflexKind k : all_kinds)
        if (auto v = supports[static_cast<int>(k)]) rotating(k, p[*v]);
    rotating(ReflexKind::NW, p[p.next(x.n)]);
    rotating(ReflexKind::NE, p[x.n]);
    rotating(ReflexKind::SE, p[x.e]);
    rotating(ReflexKind::NE, p[p.next(x.e)]);
    rotating(ReflexKind::SW, p[x.s]);
    rotating(ReflexKind::SE, p[p.next(x.s)]);
    rotating(ReflexKind::NW, p[x.w]);
    rotating(ReflexKind::SW, p[p.next(x.w)]);
    out.push_back({K::Horizontal, p[x.n], Side::Right});
    out.push_back({K::Horizontal, p[x.s], Side::Left});
    out.push_back({K::Vertical, p[x.w], Side::Right});
    out.push_back({K::Vertical, p[x.e], Side::Left});
    return out;
}

/// Convex kernel outline: vertex i starts the edge carried by line `lines[i]`.
struct KernelOutline {
    std::vector<Point> vertices;
    std::vector<int> lines;

    bool empty() const { return vertices.size() < 3; }
};

/// Intersection of the kept sides of `lines` at theta, starting from `box`.
inline KernelOutline kernel_outline(std::span<const KernelLine> lines, double theta, const Box& box) {
    KernelOutline cur{{{box.xmin, box.ymin}, {box.xmax, box.ymin}, {box.xmax, box.ymax}, {box.xmin, box.ymax}},
                      {-1, -1, -1, -1}};
    const double eps = tol::length * std::max({1.0, box.xmax - box.xmin, box.ymax - box.ymin});
    for (std::size_t id = 0; id < lines.size() && !cur.empty(); ++id) {
        const HalfPlane h = halfplane(lines[id].at(theta), lines[id].keep);
        KernelOutline next;
        const std::size_t m = cur.vertices.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point a = cur.vertices[i], b = cur.vertices[(i + 1) % m];
            const double sa = h.signed_distance(a), sb = h.signed_distance(b);
            if (sa >= 0) next.vertices.push_back(a), next.lines.push_back(cur.lines[i]);
            if ((sa >= 0) != (sb >= 0)) {
                next.vertices.push_back(a + (sa / (sa - sb)) * (b - a));
                next.lines.push_back(sa >= 0 ? static_cast<int>(id) : cur.lines[i]);
            }
        }
        // Drop edges shorter than the length tolerance.
        KernelOutline clean;
        for (std::size_t i = 0; i < next.vertices.size(); ++i) {
            const Point b = next.vertices[(i + 1) % next.vertices.size()];
            if (distance(next.vertices[i], b) > eps) clean.vertices.push_back(next.vertices[i]), clean.lines.push_back(next.lines[i]);
        }
        cur = std::move(clean);
    }
    if (cur.empty() || signed_area(cur.vertices) <= eps * eps) return {};
    return cur;
}

/// Closed-form kernel vertices for an outline: vertex i joins the lines of edges i - 1 and i.
inline std::vector<ParamVertex> param_vertices(std::span<const KernelLine> lines, std::span<const int> shape) {
    std::vector<ParamVertex> out;
    const std::size_t m = shape.size();
    for (std::size_t i = 0; i < m; ++i) out.push_back({lines[shape[(i + m - 1) % m]], lines[shape[i]]});
    return out;
}

namespace detail {

/// Cyclic equality of two edge-line sequences.
inline bool same_shape(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t r = 0; r < a.size(); ++r) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < a.size(); ++i) ok = a[i] == b[(i + r) % b.size()];
        if (ok) return true;
    }
    return false;
}

/// Every edge lies on a constraint line and consecutive lines meet in a point.
inline bool well_formed(std::span<const KernelLine> lines, std::span<const int> shape) {
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const int a = shape[i], b = shape[(i + 1) % shape.size()];
        if (a < 0 || b < 0 || lines[a].kind == lines[b].kind) return false;
    }
    return true;
}

} // namespace detail

enum class Objective { Area, Perimeter };
enum class Sense { Max, Min };

inline double objective_of(Objective o, std::span<const Point> ring) {
    return o == Objective::Area ? signed_area(ring) : ring_perimeter(ring);
}

inline double objective_of(Objective o, const KernelRegion& k) {
    if (k.empty()) return 0;
    return o == Objective::Area ? k.area : k.perimeter;
}

struct IntervalRecord {
    double lo = 0, hi = 0;
    double best_theta = 0;
    double best_value = 0;
    bool empty = false; // kernel empty on the whole interval
};

struct OptimizationResult {
    Objective objective = Objective::Area;
    Sense sense = Sense::Max;
    double theta_star = 0;
    double value = 0;
    std::vector<IntervalRecord> records; // the first record is the single angle 0
    bool empty_for_all_theta = false;
    bool empty_minimum = false; // min sense reached on an empty kernel
    double value_at_zero = 0;
    bool in_family = false;
};

namespace detail {

/// Best of f on [a, b]: 64-point scan, golden-section refinement of the best bracket,
/// endpoints included. `better(x, y)` is true when x beats y.
inline std::pair<double, double> optimize_scalar(const std::function<double(double)>& f, double a, double b,
                                                 const std::function<bool(double, double)>& better) {
    constexpr int samples = 64;
    double bt = a, bv = f(a);
    int bj = 0;
    for (int j = 1; j < samples; ++j) {
        const double t = a + (b - a) * j / (samples - 1);
        const double v = f(t);
        if (better(v, bv)) bt = t, bv = v, bj = j;
    }
    double lo = a + (b - a) * std::max(0, bj - 1) / (samples - 1);
    double hi = a + (b - a) * std::min(samples - 1, bj + 1) / (samples - 1);
    const double g = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    while (hi - lo > 1e-10) {
        if (better(f1, f2)) {
            hi = x2, x2 = x1, f2 = f1;
            x1 = hi - g * (hi - lo), f1 = f(x1);
        } else {
            lo = x1, x1 = x2, f1 = f2;
            x2 = lo + g * (hi - lo), f2 = f(x2);
        }
    }
    for (double t : {x1, x2})
        if (const double v = f(t); better(v, bv)) bt = t, bv = v;
    return {bt, bv};
}

struct SweepContext {
    Box box;
    Objective objective;
    Sense sense;

    bool better(double x, double y) const { return sense == Sense::Max ? x > y : x < y; }
};

/// Optimizes one piece with fixed lines; subdivides where the kernel shape changes.
inline void optimize_piece(const SweepContext& ctx, std::span<const KernelLine> lines, double lo, double hi, int depth,
                           std::vector<IntervalRecord>& out) {
    const double mid = (lo + hi) / 2;
    const KernelOutline shape = kernel_outline(lines, mid, ctx.box);
    const double inset = std::min((hi - lo) / 1000, 1e-7);
    auto stable_at = [&](double t) { return detail::same_shape(shape.lines, kernel_outline(lines, t, ctx.box).lines); };
    const bool ends_stable =
        (shape.empty() || detail::well_formed(lines, shape.lines)) && stable_at(lo + inset) && stable_at(hi - inset);
    auto split = [&] {
        optimize_piece(ctx, lines, lo, mid, depth + 1, out);
        optimize_piece(ctx, lines, mid, hi, depth + 1, out);
    };
    if (!ends_stable && depth < 20) return split();
    IntervalRecord rec{lo, hi, lo, 0, false};
    if (ends_stable && shape.empty()) {
        rec.empty = true;
        out.push_back(rec);
        return;
    }
    std::function<double(double)> f;
    if (ends_stable) {
        f = [&, verts = param_vertices(lines, shape.lines)](double t) {
            std::vector<Point> ring;
            ring.reserve(verts.size());
            for (const auto& v : verts) ring.push_back(v.at(t));
            return objective_of(ctx.objective, ring);
        };
    } else {
        f = [&](double t) {
            const auto k = kernel_outline(lines, t, ctx.box);
            return k.empty() ? 0.0 : objective_of(ctx.objective, k.vertices);
        };
    }
    const auto [bt, bv] = optimize_scalar(f, lo, hi, [&](double x, double y) { return ctx.better(x, y); });
    if (ends_stable && !stable_at(bt) && depth < 20) return split();
    rec.best_theta = bt, rec.best_value = bv;
    out.push_back(rec);
}

} // namespace detail

/// Sweep over [0, pi/2): the angle 0 is evaluated with the dent rule, positive angles
/// with the rotated clip lines. Ties go to the smaller angle.
inline OptimizationResult optimize(const SimplePolygon& p, Objective objective, Sense sense) {
    const auto cls = classify(p);
    OptimizationResult res;
    res.objective = objective, res.sense = sense;

    const auto k0 = kernel_axis_aligned(cls);
    res.value_at_zero = objective_of(objective, k0);
    res.records.push_back({0, 0, 0, res.value_at_zero, k0.empty()});

    constexpr double lo_limit = 1e-9, hi_limit = half_pi - 1e-9;
    res.in_family = is_in_family_Q(cls).member;
    std::optional<ExtremeExtremities> ext;
    std::optional<FeasibleRange> range;
    HullArcs arcs;
    if (res.in_family) {
        try {
            ext = extreme_extremities(cls);
        } catch (const TiedExtremities&) {
        }
    }
    if (ext) {
        arcs = reflex_hulls(cls);
        range = feasible_range(cls, arcs);
    }
    const double sweep_lo = range ? std::max(range->lo, lo_limit) : hi_limit;
    const double sweep_hi = range ? std::min(range->hi, hi_limit) : hi_limit;
    if (sweep_lo > lo_limit) res.records.push_back({lo_limit, sweep_lo, lo_limit, 0, true});

    if (range && sweep_hi > sweep_lo) {
        Box box = bounding_box(p.vertices());
        const double pad = 1 + std::max(box.xmax - box.xmin, box.ymax - box.ymin);
        box = {box.xmin - pad, box.ymin - pad, box.xmax + pad, box.ymax + pad};
        const detail::SweepContext ctx{box, objective, sense};
        const SweepState st = event_angles(cls, arcs, *range);
        auto supports = st.initial;
        double prev = sweep_lo;
        std::size_t ei = 0;
        while (prev < sweep_hi) {
            double next = sweep_hi;
            while (ei < st.events.size() && st.events[ei].angle <= prev) {
                supports[static_cast<int>(st.events[ei].kind)] = st.events[ei].vertex;
                ++ei;
            }
            if (ei < st.events.size()) next = std::min(next, st.events[ei].angle);
            if (next > prev) detail::optimize_piece(ctx, kernel_lines(cls, *ext, supports), prev, next, 0, res.records);
            prev = next;
        }
        if (sweep_hi < hi_limit) res.records.push_back({sweep_hi, hi_limit, sweep_hi, 0, true});
    }

    // Reduction in angle order: the first strictly better record wins.
    bool found = false;
    for (const auto& r : res.records) {
        if (sense == Sense::Max && r.empty) continue;
        if (sense == Sense::Min && r.empty) {
            res.theta_star = r.lo, res.value = 0, res.empty_minimum = true;
            found = true;
            break;
        }
        if (!found || (sense == Sense::Max ? r.best_value > res.value : r.best_value < res.value)) {
            res.theta_star = r.best_theta, res.value = r.best_value;
            found = true;
        }
    }
    if (!found) res.theta_star = 0, res.value = 0;
    res.empty_for_all_theta = std::all_of(res.records.begin(), res.records.end(), [](const auto& r) { return r.empty; });
    return res;
}

/// Kernel at any angle in [0, pi/2): the dent rule at 0, the rotated clip otherwise.
inline KernelRegion kernel_at(const SimplePolygon& p, double theta) {
    const auto cls = classify(p);
    if (theta <= 0) return kernel_axis_aligned(cls);
    try {
        return kernel_at_theta(cls, theta);
    } catch (const TiedExtremities&) {
        return {};
    }
}

} // namespace rotokernel::ortho
