#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "line.hpp"
#include "polygon.hpp"

namespace rotokernel {

/// Ring vertex that remembers where it came from: an input vertex, or a crossing
/// on an input edge (edge i runs from vertex i to vertex i + 1).
struct TaggedPoint {
    Point p;
    int vertex = -1;
    int edge = -1;
};

inline std::vector<TaggedPoint> tag_ring(std::span<const Point> ring) {
    std::vector<TaggedPoint> out;
    out.reserve(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) out.push_back({ring[i], static_cast<int>(i), -1});
    return out;
}

inline std::vector<Point> untag(std::span<const TaggedPoint> ring) {
    std::vector<Point> out;
    out.reserve(ring.size());
    for (const auto& t : ring) out.push_back(t.p);
    return out;
}

namespace detail {

inline double tagged_area(std::span<const TaggedPoint> r) noexcept {
    double s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) s += cross(r[i].p, r[(i + 1) % r.size()].p);
    return s / 2;
}

} // namespace detail

/// Splits a counterclockwise ring against a closed halfplane. Each returned ring is
/// one connected piece of ring ∩ halfplane; pieces with no area are dropped.
/// Boundary stretches lying on the clip line are kept when the interior is on the kept side.
inline std::vector<std::vector<TaggedPoint>> clip_ring(std::span<const TaggedPoint> ring, const HalfPlane& h,
                                                      double eps = tol::length) {
    const std::size_t n = ring.size();
    std::vector<TaggedPoint> pts;
    std::vector<int> cls;
    pts.reserve(n + 8);
    cls.reserve(n + 8);
    auto classify = [&](double s) { return s > eps ? 1 : (s < -eps ? -1 : 0); };
    bool any_pos = false, any_neg = false;
    for (std::size_t i = 0; i < n; ++i) {
        const TaggedPoint& a = ring[i];
        const TaggedPoint& b = ring[(i + 1) % n];
        const double sa = h.signed_distance(a.p), sb = h.signed_distance(b.p);
        const int ca = classify(sa), cb = classify(sb);
        any_pos |= ca > 0;
        any_neg |= ca < 0;
        pts.push_back(a);
        cls.push_back(ca);
        if (ca * cb < 0) {
            const double t = sa / (sa - sb);
            const int edge = a.edge >= 0 && a.edge == b.edge ? a.edge : (a.vertex >= 0 ? a.vertex : a.edge);
            pts.push_back({a.p + t * (b.p - a.p), -1, edge});
            cls.push_back(0);
        }
    }
    if (!any_pos) return {};
    if (!any_neg) return {std::vector<TaggedPoint>(ring.begin(), ring.end())};

    const std::size_t m = pts.size();
    std::size_t start = 0;
    while (cls[start] >= 0) ++start;
    const Point along = -perp(h.normal); // kept side is on the left when walking along +along
    auto coord = [&](const Point& p) { return dot(p - h.anchor, along); };

    struct Arc {
        std::vector<TaggedPoint> points;
        double t_entry = 0, t_exit = 0;
    };
    std::vector<Arc> arcs;
    std::size_t i = 0;
    while (i < m) {
        const std::size_t k = (start + i) % m;
        if (cls[k] < 0) {
            ++i;
            continue;
        }
        std::vector<std::size_t> run;
        bool has_pos = false;
        while (i < m && cls[(start + i) % m] >= 0) {
            run.push_back((start + i) % m);
            has_pos |= cls[(start + i) % m] > 0;
            ++i;
        }
        if (!has_pos) continue;
        // On-line edges running against +along have the interior on the discarded side.
        std::size_t b = 0, e = run.size() - 1;
        while (b + 1 < run.size() && cls[run[b]] == 0 && cls[run[b + 1]] == 0 &&
               coord(pts[run[b + 1]].p) < coord(pts[run[b]].p))
            ++b;
        while (e > b && cls[run[e]] == 0 && cls[run[e - 1]] == 0 && coord(pts[run[e]].p) < coord(pts[run[e - 1]].p))
            --e;
        Arc arc;
        for (std::size_t j = b; j <= e; ++j) arc.points.push_back(pts[run[j]]);
        arc.t_entry = coord(arc.points.front().p);
        arc.t_exit = coord(arc.points.back().p);
        arcs.push_back(std::move(arc));
    }

    // From an exit the boundary continues along +along to the next entry.
    struct Endpoint {
        double t;
        int kind; // 0 exit, 1 entry
        std::size_t arc;
    };
    std::vector<Endpoint> ends;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        ends.push_back({arcs[a].t_exit, 0, a});
        ends.push_back({arcs[a].t_entry, 1, a});
    }
    std::sort(ends.begin(), ends.end(), [](const Endpoint& x, const Endpoint& y) {
        if (x.t != y.t) return x.t < y.t;
        return x.kind < y.kind;
    });
    std::vector<std::size_t> successor(arcs.size(), arcs.size());
    bool alternating = ends.size() % 2 == 0;
    for (std::size_t e = 0; alternating && e < ends.size(); e += 2)
        alternating = ends[e].kind == 0 && ends[e + 1].kind == 1;
    if (alternating) {
        for (std::size_t e = 0; e < ends.size(); e += 2) successor[ends[e].arc] = ends[e + 1].arc;
    } else {
        std::vector<char> used(arcs.size(), 0);
        for (const Endpoint& x : ends) {
            if (x.kind != 0) continue;
            std::size_t best = arcs.size();
            double best_t = 0;
            for (const Endpoint& y : ends) {
                if (y.kind != 1 || used[y.arc] || y.t < x.t - eps) continue;
                if (best == arcs.size() || y.t < best_t) best = y.arc, best_t = y.t;
            }
            if (best == arcs.size())
                for (const Endpoint& y : ends)
                    if (y.kind == 1 && !used[y.arc]) {
                        best = y.arc;
                        break;
                    }
            used[best] = 1;
            successor[x.arc] = best;
        }
    }

    std::vector<std::vector<TaggedPoint>> out;
    std::vector<char> visited(arcs.size(), 0);
    for (std::size_t s = 0; s < arcs.size(); ++s) {
        if (visited[s]) continue;
        std::vector<TaggedPoint> comp;
        std::size_t a = s;
        while (a < arcs.size() && !visited[a]) {
            visited[a] = 1;
            for (const auto& p : arcs[a].points)
                if (comp.empty() || !almost_equal(comp.back().p, p.p, eps)) comp.push_back(p);
            a = successor[a];
        }
        while (comp.size() > 1 && almost_equal(comp.front().p, comp.back().p, eps)) comp.pop_back();
        if (comp.size() >= 3 && detail::tagged_area(comp) > eps * eps) out.push_back(std::move(comp));
    }
    return out;
}

/// P ∩ {closed side `keep` of L}, as zero or more simple polygons.
inline std::vector<SimplePolygon> clip_halfplane(const SimplePolygon& polygon, const Line& line, Side keep) {
    std::vector<SimplePolygon> out;
    const auto ring = tag_ring(polygon.vertices());
    for (auto& piece : clip_ring(ring, halfplane(line, keep))) {
        try {
            out.emplace_back(untag(piece), SimplePolygon::Validation::Normalize);
        } catch (const InvalidPolygon&) {
            // sliver that normalizes away
        }
    }
    return out;
}

/// Clips every piece by every halfplane in turn.
inline std::vector<std::vector<TaggedPoint>> clip_ring_all(std::vector<std::vector<TaggedPoint>> pieces,
                                                          std::span<const HalfPlane> halfplanes) {
    for (const HalfPlane& h : halfplanes) {
        std::vector<std::vector<TaggedPoint>> next;
        for (const auto& piece : pieces)
            for (auto& q : clip_ring(piece, h)) next.push_back(std::move(q));
        pieces = std::move(next);
        if (pieces.empty()) break;
    }
    return pieces;
}

} // namespace rotokernel
