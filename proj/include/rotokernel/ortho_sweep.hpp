#pragma once

// The {0, 90} kernel rotated by theta in (0, pi/2) for polygons of the four-staircase
// family: support vertices of the four reflex classes, extremity constraints, the
// feasible angle range and the sorted support-change events.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ortho_classify.hpp"

namespace rotokernel::ortho {

constexpr std::array<ReflexKind, 4> all_kinds{ReflexKind::NE, ReflexKind::NW, ReflexKind::SE, ReflexKind::SW};

/// Direction whose maximizer over a reflex class gives its most restrictive clip line,
/// for cos/sin of the rotation angle.
inline Point support_direction(ReflexKind k, double c, double s) {
    switch (k) {
    case ReflexKind::NW: return {s, -c};
    case ReflexKind::SE: return {-s, c};
    case ReflexKind::NE: return {-c, -s};
    case ReflexKind::SW: return {c, s};
    }
    return {};
}

/// Derivative of support_direction with respect to the angle.
inline Point support_direction_rate(ReflexKind k, double c, double s) { return support_direction(k, -s, c); }

/// Whether a reflex class clips with the theta-parallel line (else the perpendicular one).
inline bool clips_parallel(ReflexKind k) { return k == ReflexKind::NW || k == ReflexKind::SE; }

/// Clip constraint of a reflex-type anchor at angle theta.
inline SupportingConstraint reflex_constraint(ReflexKind k, Point anchor, double theta, SupportingConstraint::Origin origin,
                                              int vertex) {
    if (clips_parallel(k))
        return {line_at_angle(anchor, theta), k == ReflexKind::NW ? Side::Right : Side::Left, origin, vertex};
    return {line_at_angle(anchor, theta + half_pi), k == ReflexKind::NE ? Side::Left : Side::Right, origin, vertex};
}

/// The extremities that bound the kernel: the lowest N-, leftmost E-, highest S- and
/// rightmost W-extremity (edge indices).
struct ExtremeExtremities {
    std::size_t n, e, s, w;
};

inline ExtremeExtremities extreme_extremities(const OrthoClassification& c) {
    const SimplePolygon& p = c.polygon;
    auto pick = [&](Compass side, auto key) {
        const auto& edges = c.extremities_of(side);
        std::size_t best = edges.front();
        int ties = 0;
        for (std::size_t e : edges) {
            const double d = key(e) - key(best);
            if (d < -tol::length) best = e, ties = 0;
            else if (e != best && std::abs(d) <= tol::length) ++ties;
        }
        if (ties > 0) throw TiedExtremities(std::string("two extreme ") + to_string(side) + "-extremities");
        return best;
    };
    return {pick(Compass::N, [&](std::size_t e) { return p[e].y; }),
            pick(Compass::E, [&](std::size_t e) { return p[e].x; }),
            pick(Compass::S, [&](std::size_t e) { return -p[e].y; }),
            pick(Compass::W, [&](std::size_t e) { return -p[e].x; })};
}

/// The eight extremity constraints: a corner of each extreme extremity acts like the
/// reflex kind named after the two sides it faces.
inline std::vector<SupportingConstraint> extremity_constraints(const OrthoClassification& c,
                                                               const ExtremeExtremities& x, double theta) {
    const SimplePolygon& p = c.polygon;
    using O = SupportingConstraint::Origin;
    std::vector<SupportingConstraint> out;
    auto add = [&](ReflexKind k, std::size_t v) {
        out.push_back(reflex_constraint(k, p[v], theta, O::Extremity, static_cast<int>(v)));
    };
    // N-extremities run right to left, E bottom to top, S left to right, W top to bottom.
    add(ReflexKind::NW, p.next(x.n));
    add(ReflexKind::NE, x.n);
    add(ReflexKind::SE, x.e);
    add(ReflexKind::NE, p.next(x.e));
    add(ReflexKind::SW, x.s);
    add(ReflexKind::SE, p.next(x.s));
    add(ReflexKind::NW, x.w);
    add(ReflexKind::SW, p.next(x.w));
    return out;
}

/// Vertex of `vertices` maximizing r . d, ties broken by r . rate.
inline std::optional<std::size_t> support_vertex(const SimplePolygon& p, const std::vector<std::size_t>& vertices, Point d,
                                                 Point rate) {
    std::optional<std::size_t> best;
    double bv = 0, br = 0;
    for (std::size_t v : vertices) {
        const double val = dot(p[v], d), r = dot(p[v], rate);
        if (!best || val > bv + tol::length || (val >= bv - tol::length && r > br)) best = v, bv = val, br = r;
    }
    return best;
}

/// Convex hull of one reflex class with the part that can support the kernel for
/// angles in [0, pi/2], both as counterclockwise vertex-index sequences.
struct HullArc {
    std::vector<std::size_t> hull;
    std::vector<std::size_t> arc;
};

struct HullArcs {
    std::array<HullArc, 4> by_kind; // indexed by ReflexKind

    const HullArc& operator[](ReflexKind k) const { return by_kind[static_cast<int>(k)]; }
    HullArc& operator[](ReflexKind k) { return by_kind[static_cast<int>(k)]; }
};

inline HullArcs reflex_hulls(const OrthoClassification& c) {
    const SimplePolygon& p = c.polygon;
    HullArcs out;
    for (ReflexKind k : all_kinds) {
        const auto members = c.reflex_of(k);
        if (members.empty()) continue;
        std::vector<Point> pts;
        for (std::size_t v : members) pts.push_back(p[v]);
        HullArc& a = out[k];
        for (const Point& h : convex_hull(pts).vertices)
            for (std::size_t v : members)
                if (p[v].x == h.x && p[v].y == h.y) {
                    a.hull.push_back(v);
                    break;
                }
        const auto first = support_vertex(p, a.hull, support_direction(k, 1, 0), support_direction_rate(k, 1, 0));
        const Point end_rate = support_direction_rate(k, 0, 1);
        const auto last = support_vertex(p, a.hull, support_direction(k, 0, 1), -end_rate);
        const std::size_t m = a.hull.size();
        std::size_t i = std::find(a.hull.begin(), a.hull.end(), *first) - a.hull.begin();
        for (std::size_t step = 0; step < m; ++step) {
            a.arc.push_back(a.hull[(i + step) % m]);
            if (a.hull[(i + step) % m] == *last) break;
        }
    }
    return out;
}

struct FeasibleRange {
    double lo = 0, hi = half_pi;
};

namespace detail {

/// max over `a` of r . d plus max over `b` of r . (-d): nonpositive when a line of the
/// given normal separates the two classes as the constraints require.
inline double separation_gap(const SimplePolygon& p, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                             Point d) {
    double ma = -std::numeric_limits<double>::infinity(), mb = ma;
    for (std::size_t v : a) ma = std::max(ma, dot(p[v], d));
    for (std::size_t v : b) mb = std::max(mb, -dot(p[v], d));
    return ma + mb;
}

/// Angles in [0, pi/2] at which the clip lines of classes `a` (kind ka) and `b` are compatible.
inline std::optional<FeasibleRange> pair_range(const SimplePolygon& p, const HullArc& a, const HullArc& b, ReflexKind ka) {
    if (a.hull.empty() || b.hull.empty()) return FeasibleRange{0, half_pi};
    std::vector<Point> pa, pb;
    for (std::size_t v : a.hull) pa.push_back(p[v]);
    for (std::size_t v : b.hull) pb.push_back(p[v]);
    if (convex_sets_intersect(pa, pb)) return std::nullopt;
    // The feasible set is bounded by internal tangents; test the pieces between them.
    std::vector<double> cuts{0, half_pi};
    for (const auto& t : common_internal_tangents(pa, pb)) {
        double angle = t.line.angle;
        if (!clips_parallel(ka)) angle -= half_pi;
        angle = normalize_direction(angle);
        if (angle > 0 && angle < half_pi) cuts.push_back(angle);
    }
    std::sort(cuts.begin(), cuts.end());
    std::optional<FeasibleRange> r;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = (cuts[i] + cuts[i + 1]) / 2;
        if (separation_gap(p, a.hull, b.hull, support_direction(ka, std::cos(mid), std::sin(mid))) > 0) continue;
        if (!r) r = FeasibleRange{cuts[i], cuts[i + 1]};
        else r->hi = cuts[i + 1];
    }
    return r;
}

} // namespace detail

/// Angles for which the NW/SE and the NE/SW clip lines leave room for a kernel.
inline std::optional<FeasibleRange> feasible_range(const OrthoClassification& c, const HullArcs& arcs) {
    const auto r1 = detail::pair_range(c.polygon, arcs[ReflexKind::NW], arcs[ReflexKind::SE], ReflexKind::NW);
    const auto r2 = detail::pair_range(c.polygon, arcs[ReflexKind::SW], arcs[ReflexKind::NE], ReflexKind::SW);
    if (!r1 || !r2) return std::nullopt;
    FeasibleRange r{std::max(r1->lo, r2->lo), std::min(r1->hi, r2->hi)};
    if (r.lo >= r.hi - tol::angle) return std::nullopt;
    return r;
}

/// Angle at which the support of class k moves across the arc edge a -> b.
inline double event_angle(ReflexKind k, Point a, Point b) {
    const double e = std::atan2(b.y - a.y, b.x - a.x);
    switch (k) {
    case ReflexKind::NW: return wrap_angle(e, 0, 2 * pi);
    case ReflexKind::SE: return wrap_angle(e - pi, 0, 2 * pi);
    case ReflexKind::NE: return wrap_angle(e + half_pi, 0, 2 * pi);
    case ReflexKind::SW: return wrap_angle(e - half_pi, 0, 2 * pi);
    }
    return 0;
}

struct SweepEvent {
    double angle;
    ReflexKind kind;
    std::size_t vertex; // support of `kind` after the event
};

struct SweepState {
    FeasibleRange range;
    std::array<std::optional<std::size_t>, 4> initial; // supports just after range.lo
    std::vector<SweepEvent> events;                     // strictly inside the range, sorted

    /// Event angles with the range ends in front and back.
    std::vector<double> angles() const {
        std::vector<double> a{range.lo};
        for (const auto& e : events) a.push_back(e.angle);
        a.push_back(range.hi);
        return a;
    }
};

inline SweepState event_angles(const OrthoClassification& c, const HullArcs& arcs, FeasibleRange range) {
    const SimplePolygon& p = c.polygon;
    SweepState st{range, {}, {}};
    for (ReflexKind k : all_kinds) {
        const auto& arc = arcs[k].arc;
        if (arc.empty()) continue;
        std::size_t cur = arc.front();
        for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
            const double a = event_angle(k, p[arc[i]], p[arc[i + 1]]);
            if (a <= range.lo) cur = arc[i + 1];
            else if (a < range.hi) st.events.push_back({a, k, arc[i + 1]});
        }
        st.initial[static_cast<int>(k)] = cur;
    }
    std::stable_sort(st.events.begin(), st.events.end(),
                     [](const SweepEvent& a, const SweepEvent& b) { return a.angle < b.angle; });
    return st;
}

/// Supports of the four classes at theta, by direct maximization.
inline std::array<std::optional<std::size_t>, 4> supports_at(const OrthoClassification& c, double theta) {
    std::array<std::optional<std::size_t>, 4> out;
    const double co = std::cos(theta), si = std::sin(theta);
    for (ReflexKind k : all_kinds)
        out[static_cast<int>(k)] =
            support_vertex(c.polygon, c.reflex_of(k), support_direction(k, co, si), support_direction_rate(k, co, si));
    return out;
}

/// All clip constraints at theta for the given class supports.
inline std::vector<SupportingConstraint> kernel_constraints(const OrthoClassification& c, const ExtremeExtremities& x,
                                                            const std::array<std::optional<std::size_t>, 4>& supports,
                                                            double theta) {
    std::vector<SupportingConstraint> cons;
    for (ReflexKind k : all_kinds)
        if (auto v = supports[static_cast<int>(k)])
            cons.push_back(reflex_constraint(k, c.polygon[*v], theta, SupportingConstraint::Origin::ReflexVertex,
                                             static_cast<int>(*v)));
    auto ext = extremity_constraints(c, x, theta);
    cons.insert(cons.end(), ext.begin(), ext.end());
    return cons;
}

/// Kernel for the orientations {theta, theta + 90} with theta in (0, pi/2). Polygons outside
/// the staircase family have an empty kernel at every such angle.
inline KernelRegion kernel_at_theta(const OrthoClassification& c, double theta) {
    if (!(theta > 0 && theta < half_pi)) throw InvalidPolygon("kernel_at_theta needs 0 < theta < pi/2");
    if (!is_in_family_Q(c).member) return {};
    const auto x = extreme_extremities(c);
    return detail::clip_by(c.polygon, kernel_constraints(c, x, supports_at(c, theta), theta));
}

inline KernelRegion kernel_at_theta(const SimplePolygon& p, double theta) { return kernel_at_theta(classify(p), theta); }

} // namespace rotokernel::ortho
