#pragma once

// All orientations theta in [-pi/2, pi/2) for which the rotated single-orientation kernel
// is nonempty. Reflex vertices become dual segments, their envelopes give the strip
// supports per event interval, and each interval is classified in closed form.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "envelope.hpp"
#include "steady_kernel.hpp"

namespace rotokernel::intervals {

enum class CandidateRole { CandidateMax, CandidateMin };

struct OpenInterval {
    double lo = 0, hi = 0;
};

/// Orientations for which both neighbours of a reflex vertex lie strictly below
/// (CandidateMax) or strictly above (CandidateMin) the line through it.
struct ReflexAngularInterval {
    std::size_t vertex = 0;
    CandidateRole role = CandidateRole::CandidateMax;
    double theta_lo = 0, theta_hi = 0;
    std::vector<OpenInterval> slope_intervals; // tan of the theta range; unbounded at +-pi/2
};

namespace detail {

/// Arc (start, start + pi) of directions theta with sin(alpha - theta) < 0.
inline double below_arc_start(Point d) { return std::atan2(d.y, d.x); }

/// Intersection of the open half-circle arcs starting at s1 and s2, as (start, length).
inline std::pair<double, double> half_arc_meet(double s1, double s2) {
    const double delta = wrap_angle(s2 - s1, 0, 2 * pi);
    if (delta < pi) return {s2, pi - delta};
    return {s1, delta - pi};
}

} // namespace detail

inline std::vector<ReflexAngularInterval> reflex_intervals(const SimplePolygon& p) {
    std::vector<ReflexAngularInterval> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p.is_reflex(i)) continue;
        const double s1 = detail::below_arc_start(p[p.prev(i)] - p[i]);
        const double s2 = detail::below_arc_start(p[p.next(i)] - p[i]);
        for (CandidateRole role : {CandidateRole::CandidateMax, CandidateRole::CandidateMin}) {
            const double shift = role == CandidateRole::CandidateMax ? 0 : pi;
            auto [start, length] = detail::half_arc_meet(s1 + shift, s2 + shift);
            start = wrap_angle(start, -half_pi, 2 * pi);
            double lo = start, hi = start + length;
            if (start >= half_pi) { // only the part wrapping past 3pi/2 is in the domain
                lo = -half_pi;
                hi = start + length - 2 * pi;
            } else {
                hi = std::min(hi, half_pi);
            }
            if (hi - lo <= tol::angle) continue;
            const double inf = std::numeric_limits<double>::infinity();
            const double mlo = lo <= -half_pi ? -inf : std::tan(lo);
            const double mhi = hi >= half_pi ? inf : std::tan(hi);
            out.push_back({i, role, lo, hi, {{mlo, mhi}}});
        }
    }
    return out;
}

enum class DualRole { CandidateMax, CandidateMin, HullFallback };
enum class Chart { A, B };

/// Part of the dual line y = p.x * m - p.y over a slope range, in one chart.
/// Chart A is the polygon frame for |theta| <= split; chart B is the frame of the
/// polygon turned by -pi/2, covering the remaining orientations.
struct DualSegment {
    std::size_t vertex = 0;
    DualRole role = DualRole::HullFallback;
    Chart chart = Chart::A;
    LineSegment segment;
};

inline Point dual_line(Point p) { return {p.x, -p.y}; } // (slope, intercept)

/// Coordinates of p in chart B.
inline Point chart_b_point(Point p) { return {p.y, -p.x}; }

namespace detail {

inline DualSegment make_dual(std::size_t v, DualRole role, Chart chart, Point p, double m0, double m1) {
    const Point q = chart == Chart::A ? p : chart_b_point(p);
    const Point d = dual_line(q);
    return {v, role, chart, {m0, m1, d.x, d.y}};
}

inline DualRole to_dual(CandidateRole r, bool swap) {
    const bool is_max = (r == CandidateRole::CandidateMax) != swap;
    return is_max ? DualRole::CandidateMax : DualRole::CandidateMin;
}

/// Vertex indices of P on its convex hull.
inline std::vector<std::size_t> hull_vertices(const SimplePolygon& p) {
    const auto hull = convex_hull(p.vertices());
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const Point& h : hull.vertices)
            if (h.x == p[i].x && h.y == p[i].y) {
                idx.push_back(i);
                break;
            }
    return idx;
}

} // namespace detail

/// Dual segments of both charts: one per reflex angular interval piece, and a
/// full-chart segment per convex hull vertex.
inline std::vector<DualSegment> dualize(std::span<const ReflexAngularInterval> intervals, const SimplePolygon& p,
                                        double split = pi / 4) {
    std::vector<DualSegment> out;
    const double sa = split, sb = half_pi - split;
    for (const auto& r : intervals) {
        const Point q = p[r.vertex];
        // Chart A: theta in [-sa, sa].
        if (double lo = std::max(r.theta_lo, -sa), hi = std::min(r.theta_hi, sa); hi > lo)
            out.push_back(detail::make_dual(r.vertex, detail::to_dual(r.role, false), Chart::A, q, std::tan(lo),
                                            std::tan(hi)));
        // Chart B, theta in [split, pi/2): chart angle theta - pi/2, same role.
        if (double lo = std::max(r.theta_lo, split), hi = r.theta_hi; hi > lo)
            out.push_back(detail::make_dual(r.vertex, detail::to_dual(r.role, false), Chart::B, q,
                                            std::tan(lo - half_pi), hi >= half_pi ? 0.0 : std::tan(hi - half_pi)));
        // Chart B, theta in [-pi/2, -split]: chart angle theta + pi/2, roles exchanged.
        if (double lo = r.theta_lo, hi = std::min(r.theta_hi, -split); hi > lo)
            out.push_back(detail::make_dual(r.vertex, detail::to_dual(r.role, true), Chart::B, q,
                                            lo <= -half_pi ? 0.0 : std::tan(lo + half_pi), std::tan(hi + half_pi)));
    }
    // Pieces of one vertex meeting at chart B's slope 0 are one segment.
    std::sort(out.begin(), out.end(), [](const DualSegment& a, const DualSegment& b) {
        if (a.vertex != b.vertex) return a.vertex < b.vertex;
        if (a.chart != b.chart) return a.chart < b.chart;
        if (a.role != b.role) return a.role < b.role;
        return a.segment.x0 < b.segment.x0;
    });
    std::vector<DualSegment> merged;
    for (const auto& d : out) {
        if (!merged.empty()) {
            auto& last = merged.back();
            if (last.vertex == d.vertex && last.chart == d.chart && last.role == d.role &&
                last.segment.x1 == d.segment.x0) {
                last.segment.x1 = d.segment.x1;
                continue;
            }
        }
        merged.push_back(d);
    }
    for (std::size_t v : detail::hull_vertices(p)) {
        const double ma = std::tan(sa), mb = std::tan(sb);
        merged.push_back(detail::make_dual(v, DualRole::HullFallback, Chart::A, p[v], -ma, ma));
        merged.push_back(detail::make_dual(v, DualRole::HullFallback, Chart::B, p[v], -mb, mb));
    }
    return merged;
}

struct Support {
    std::size_t vertex = 0;
    bool fallback = false;

    friend bool operator==(const Support&, const Support&) = default;
};

/// Orientation range on which the strip is supported by the same two vertices.
struct EventInterval {
    double theta_lo = 0, theta_hi = 0;
    Support support_min; // lowest reflex minimum, or the top vertex
    Support support_max; // highest reflex maximum, or the bottom vertex
    // First and last polygon vertices of the kernel chains, sampled inside the range
    // where the kernel is nonempty; -1 when it is empty throughout.
    int left_first = -1, left_last = -1, right_first = -1, right_last = -1;
};

struct AngularInterval {
    double lo = 0, hi = 0;
    bool lo_degenerate = false; // kernel collapses to a segment or point at lo
    bool hi_degenerate = false;
};

namespace detail {

/// Kernel emptiness sign in the original frame: (north - south) . (-sin, cos).
inline double strip_gap(const SimplePolygon& p, const EventInterval& e, double theta) {
    const Point d = p[e.support_min.vertex] - p[e.support_max.vertex];
    return -d.x * std::sin(theta) + d.y * std::cos(theta);
}

/// The unique root of strip_gap in (-pi/2, pi/2), if any.
inline std::optional<double> strip_gap_root(const SimplePolygon& p, const EventInterval& e) {
    const Point d = p[e.support_min.vertex] - p[e.support_max.vertex];
    if (d.x == 0) return std::nullopt;
    return std::atan(d.y / d.x);
}

/// Nonempty sub-ranges of one event interval, in order.
inline std::vector<AngularInterval> classify(const SimplePolygon& p, const EventInterval& e) {
    std::vector<double> cuts{e.theta_lo};
    const auto root = strip_gap_root(p, e);
    if (root && *root > e.theta_lo && *root < e.theta_hi) cuts.push_back(*root);
    cuts.push_back(e.theta_hi);
    std::vector<AngularInterval> out;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double lo = cuts[k], hi = cuts[k + 1];
        if (!(hi > lo)) continue;
        if (strip_gap(p, e, (lo + hi) / 2) < 0) continue;
        out.push_back({lo, hi, root && lo == *root, root && hi == *root});
    }
    return out;
}

struct ChartEvent {
    double m0, m1;
    Support north, south;
};

inline Support support_of(const DualSegment& d) { return {d.vertex, d.role == DualRole::HullFallback}; }

/// Event sweep of one chart in slope coordinates.
inline std::vector<ChartEvent> chart_events(std::span<const DualSegment> all, Chart chart, double half_width) {
    std::vector<const DualSegment*> hull, mins, maxs;
    for (const auto& d : all) {
        if (d.chart != chart) continue;
        (d.role == DualRole::HullFallback ? hull : d.role == DualRole::CandidateMin ? mins : maxs).push_back(&d);
    }
    std::vector<LineSegment> hull_lines;
    for (auto* d : hull) hull_lines.push_back(d->segment);
    const Envelope hull_low = envelope(hull_lines, EnvelopeSide::Lower);
    const Envelope hull_up = envelope(hull_lines, EnvelopeSide::Upper);

    // North (lowest in the frame) has the largest dual value, south the smallest.
    auto role_envelope = [&](const std::vector<const DualSegment*>& cands, const Envelope& fallback,
                             EnvelopeSide side, std::vector<const DualSegment*>& owners) {
        std::vector<LineSegment> segs;
        for (auto* d : cands) segs.push_back(d->segment), owners.push_back(d);
        for (const auto& piece : fallback.pieces) {
            segs.push_back({piece.x0, piece.x1, piece.slope, piece.intercept});
            owners.push_back(hull[piece.segment]);
        }
        return envelope(segs, side);
    };
    std::vector<const DualSegment*> north_owner, south_owner;
    const Envelope north = role_envelope(mins, hull_low, EnvelopeSide::Upper, north_owner);
    const Envelope south = role_envelope(maxs, hull_up, EnvelopeSide::Lower, south_owner);

    std::vector<double> xs = north.breakpoints();
    const auto sb = south.breakpoints();
    xs.insert(xs.end(), sb.begin(), sb.end());
    xs.push_back(-half_width);
    xs.push_back(half_width);
    if (chart == Chart::B) xs.push_back(0.0);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<ChartEvent> out;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const double u = xs[k], v = xs[k + 1];
        if (u < -half_width || v > half_width) continue;
        const auto n = north.at((u + v) / 2), s = south.at((u + v) / 2);
        if (!n || !s) continue;
        out.push_back({u, v, support_of(*north_owner[n->segment]), support_of(*south_owner[s->segment])});
    }
    return out;
}

} // namespace detail

/// Event intervals over [-pi/2, pi/2), sorted and with adjacent equal supports merged.
/// `split` is the orientation where the two dual charts meet.
inline std::vector<EventInterval> event_intervals(const SimplePolygon& p, double split = pi / 4) {
    const auto refl = reflex_intervals(p);
    const auto duals = dualize(refl, p, split);
    std::vector<EventInterval> events;

    const double sa = split, sb = half_pi - split;
    const double ma = std::tan(sa), mb = std::tan(sb);
    auto chart_a_angle = [&](double m) { return m == ma ? sa : m == -ma ? -sa : std::atan(m); };
    for (const auto& e : detail::chart_events(duals, Chart::A, ma))
        events.push_back({chart_a_angle(e.m0), chart_a_angle(e.m1), e.north, e.south});
    // Chart B: negative chart angles map to theta + pi/2, positive ones to theta - pi/2 with
    // the frame turned upside down, so north and south trade places.
    auto chart_b_angle = [&](double m) {
        if (m == 0) return half_pi;
        if (m == -mb) return split;
        if (m == mb) return -split;
        return m < 0 ? std::atan(m) + half_pi : std::atan(m) - half_pi;
    };
    for (const auto& e : detail::chart_events(duals, Chart::B, mb)) {
        if (e.m1 <= 0)
            events.push_back({chart_b_angle(e.m0), chart_b_angle(e.m1), e.north, e.south});
        else
            events.push_back({e.m0 == 0 ? -half_pi : chart_b_angle(e.m0), chart_b_angle(e.m1), e.south, e.north});
    }
    std::sort(events.begin(), events.end(),
              [](const EventInterval& a, const EventInterval& b) { return a.theta_lo < b.theta_lo; });

    // Slivers come from rounding where two dual segments meet at one slope.
    std::vector<EventInterval> merged;
    for (const auto& e : events) {
        if (e.theta_hi - e.theta_lo <= tol::angle) continue;
        if (!merged.empty() && merged.back().support_min == e.support_min &&
            merged.back().support_max == e.support_max && std::abs(merged.back().theta_hi - e.theta_lo) <= tol::angle) {
            merged.back().theta_hi = e.theta_hi;
            continue;
        }
        merged.push_back(e);
    }
    for (std::size_t i = 1; i < merged.size(); ++i) merged[i].theta_lo = merged[i - 1].theta_hi;
    if (!merged.empty()) merged.front().theta_lo = -half_pi;

    for (auto& e : merged) {
        const auto live = detail::classify(p, e);
        if (live.empty()) continue;
        const auto widest = std::max_element(live.begin(), live.end(), [](const auto& a, const auto& b) {
            return a.hi - a.lo < b.hi - b.lo;
        });
        try {
            const auto k = steady::kernel_at(p, (widest->lo + widest->hi) / 2);
            e.left_first = k.left_first, e.left_last = k.left_last;
            e.right_first = k.right_first, e.right_last = k.right_last;
        } catch (const DisconnectedKernel&) {
        }
    }
    return merged;
}

/// Maximal orientation ranges with a nonempty kernel, from precomputed event intervals.
inline std::vector<AngularInterval> nonempty_intervals(const SimplePolygon& p, std::span<const EventInterval> events) {
    std::vector<AngularInterval> out;
    for (const auto& e : events) {
        for (const auto& piece : detail::classify(p, e)) {
            if (!out.empty() && std::abs(out.back().hi - piece.lo) <= tol::angle && !out.back().hi_degenerate) {
                out.back().hi = piece.hi;
                out.back().hi_degenerate = piece.hi_degenerate;
                continue;
            }
            out.push_back(piece);
        }
    }
    return out;
}

inline std::vector<AngularInterval> nonempty_intervals(const SimplePolygon& p, double split = pi / 4) {
    const auto events = event_intervals(p, split);
    return nonempty_intervals(p, events);
}

} // namespace rotokernel::intervals
