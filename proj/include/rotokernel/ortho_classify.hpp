#pragma once

// Compass labelling of orthogonal polygons: edge labels, dents, extremities, reflex kinds,
// the axis-aligned {0, 90} kernel, and membership in the four-staircase family.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "kernel_region.hpp"

namespace rotokernel::ortho {

/// Side from which an edge bounds the polygon.
enum class Compass { N = 0, S = 1, E = 2, W = 3 };
enum class ReflexKind { NE = 0, NW = 1, SE = 2, SW = 3 };

inline const char* to_string(Compass c) {
    constexpr const char* names[] = {"N", "S", "E", "W"};
    return names[static_cast<int>(c)];
}

inline const char* to_string(ReflexKind k) {
    constexpr const char* names[] = {"NE", "NW", "SE", "SW"};
    return names[static_cast<int>(k)];
}

struct OrthoClassification {
    SimplePolygon polygon;
    std::vector<Compass> edge_labels;                   // edge i runs from vertex i to i + 1
    std::array<std::vector<std::size_t>, 4> dents;       // edge indices per Compass
    std::array<std::vector<std::size_t>, 4> extremities; // edge indices per Compass
    std::vector<std::optional<ReflexKind>> reflex_kind;  // per vertex

    std::vector<std::size_t> reflex_of(ReflexKind k) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < reflex_kind.size(); ++i)
            if (reflex_kind[i] == k) out.push_back(i);
        return out;
    }
    const std::vector<std::size_t>& dents_of(Compass c) const { return dents[static_cast<int>(c)]; }
    const std::vector<std::size_t>& extremities_of(Compass c) const { return extremities[static_cast<int>(c)]; }
};

inline Compass edge_label(Point a, Point b, std::size_t index, double eps = tol::length) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    if (std::abs(dy) <= eps && std::abs(dx) > eps) return dx > 0 ? Compass::S : Compass::N;
    if (std::abs(dx) <= eps && std::abs(dy) > eps) return dy > 0 ? Compass::E : Compass::W;
    throw NotOrthogonal(index);
}

inline ReflexKind reflex_kind_of(Compass a, Compass b) {
    const bool north = a == Compass::N || b == Compass::N;
    const bool east = a == Compass::E || b == Compass::E;
    if (north) return east ? ReflexKind::NE : ReflexKind::NW;
    return east ? ReflexKind::SE : ReflexKind::SW;
}

/// Labels every edge of a counterclockwise orthogonal polygon.
inline OrthoClassification classify(const SimplePolygon& p) {
    OrthoClassification c{p, {}, {}, {}, {}};
    const std::size_t n = p.size();
    c.edge_labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.edge_labels.push_back(edge_label(p[i], p[p.next(i)], i));
    c.reflex_kind.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        if (p.is_reflex(i)) c.reflex_kind[i] = reflex_kind_of(c.edge_labels[p.prev(i)], c.edge_labels[i]);
    for (std::size_t i = 0; i < n; ++i) {
        const bool r0 = p.is_reflex(i), r1 = p.is_reflex(p.next(i));
        const int label = static_cast<int>(c.edge_labels[i]);
        if (r0 && r1) c.dents[label].push_back(i);
        if (!r0 && !r1) c.extremities[label].push_back(i);
    }
    return c;
}

namespace detail {

inline KernelRegion clip_by(const SimplePolygon& p, std::vector<SupportingConstraint> constraints) {
    std::vector<HalfPlane> hs;
    hs.reserve(constraints.size());
    for (const auto& c : constraints) hs.push_back(halfplane(c.line, c.keep));
    auto pieces = clip_ring_all({tag_ring(p.vertices())}, hs);
    KernelRegion out;
    if (pieces.empty()) {
        out.constraints = std::move(constraints);
        return out;
    }
    if (pieces.size() > 1) throw DisconnectedKernel(pieces.size());
    out = make_region(SimplePolygon(untag(pieces.front()), SimplePolygon::Validation::Normalize));
    out.constraints = std::move(constraints);
    return out;
}

} // namespace detail

/// Kernel for the unrotated orientations {0, 90}: below the lowest N-dent, above the highest
/// S-dent, right of the rightmost W-dent and left of the leftmost E-dent.
inline KernelRegion kernel_axis_aligned(const OrthoClassification& c) {
    const SimplePolygon& p = c.polygon;
    std::vector<SupportingConstraint> cons;
    using O = SupportingConstraint::Origin;
    auto pick = [&](Compass side, auto better) -> std::optional<std::size_t> {
        std::optional<std::size_t> best;
        for (std::size_t e : c.dents_of(side))
            if (!best || better(p[e], p[*best])) best = e;
        return best;
    };
    if (auto e = pick(Compass::N, [](Point a, Point b) { return a.y < b.y; }))
        cons.push_back({line_at_angle(p[*e], 0), Side::Right, O::Dent, static_cast<int>(*e)});
    if (auto e = pick(Compass::S, [](Point a, Point b) { return a.y > b.y; }))
        cons.push_back({line_at_angle(p[*e], 0), Side::Left, O::Dent, static_cast<int>(*e)});
    // A vertical line has direction +y; its left side is west.
    if (auto e = pick(Compass::W, [](Point a, Point b) { return a.x > b.x; }))
        cons.push_back({line_at_angle(p[*e], half_pi), Side::Right, O::Dent, static_cast<int>(*e)});
    if (auto e = pick(Compass::E, [](Point a, Point b) { return a.x < b.x; }))
        cons.push_back({line_at_angle(p[*e], half_pi), Side::Left, O::Dent, static_cast<int>(*e)});
    auto k = detail::clip_by(p, std::move(cons));
    if (k.empty()) {
        const auto n = pick(Compass::N, [](Point a, Point b) { return a.y < b.y; });
        const auto s = pick(Compass::S, [](Point a, Point b) { return a.y > b.y; });
        const auto w = pick(Compass::W, [](Point a, Point b) { return a.x > b.x; });
        const auto e = pick(Compass::E, [](Point a, Point b) { return a.x < b.x; });
        k.degenerate = (n && s && std::abs(p[*n].y - p[*s].y) <= tol::length) ||
                       (w && e && std::abs(p[*w].x - p[*e].x) <= tol::length);
    }
    return k;
}

inline KernelRegion kernel_axis_aligned(const SimplePolygon& p) { return kernel_axis_aligned(classify(p)); }

/// The eight anchoring extremities in counterclockwise boundary order.
struct Anchors {
    std::size_t lowest_e, highest_e, rightmost_n, leftmost_n, highest_w, lowest_w, leftmost_s, rightmost_s;

    std::array<std::size_t, 8> in_order() const {
        return {lowest_e, highest_e, rightmost_n, leftmost_n, highest_w, lowest_w, leftmost_s, rightmost_s};
    }
};

inline Anchors anchors(const OrthoClassification& c) {
    const SimplePolygon& p = c.polygon;
    auto lo_y = [&](std::size_t e) { return std::min(p[e].y, p[p.next(e)].y); };
    auto hi_y = [&](std::size_t e) { return std::max(p[e].y, p[p.next(e)].y); };
    auto lo_x = [&](std::size_t e) { return std::min(p[e].x, p[p.next(e)].x); };
    auto hi_x = [&](std::size_t e) { return std::max(p[e].x, p[p.next(e)].x); };
    auto best = [](const std::vector<std::size_t>& edges, auto key) {
        std::size_t b = edges.front();
        for (std::size_t e : edges)
            if (key(e) < key(b)) b = e;
        return b;
    };
    const auto& es = c.extremities_of(Compass::E);
    const auto& ns = c.extremities_of(Compass::N);
    const auto& ws = c.extremities_of(Compass::W);
    const auto& ss = c.extremities_of(Compass::S);
    return {best(es, lo_y),
            best(es, [&](std::size_t e) { return -hi_y(e); }),
            best(ns, [&](std::size_t e) { return -hi_x(e); }),
            best(ns, lo_x),
            best(ws, [&](std::size_t e) { return -hi_y(e); }),
            best(ws, lo_y),
            best(ss, lo_x),
            best(ss, [&](std::size_t e) { return -hi_x(e); })};
}

struct FamilyMembership {
    bool member = false;
    std::optional<std::size_t> witness_edge; // first edge breaking the pattern
};

/// Whether the boundary splits, counterclockwise from the lowest E-extremity, into an
/// east chain without W-edges, an N/E staircase, a north chain without S-edges, an N/W
/// staircase, a west chain without E-edges, a W/S staircase, a south chain without
/// N-edges, and an S/E staircase.
inline FamilyMembership is_in_family_Q(const OrthoClassification& c) {
    const std::size_t n = c.polygon.size();
    const auto a = anchors(c).in_order();
    std::array<std::size_t, 9> off{};
    for (int k = 0; k < 8; ++k) off[k] = (a[k] + n - a[0]) % n;
    off[8] = n;
    for (int k = 1; k < 8; ++k)
        if (off[k] < off[k - 1]) return {false, a[k]};

    using C = Compass;
    for (int k = 0; k < 8; ++k) {
        // Chains include their two anchors; staircases lie strictly between them.
        const bool chain = k % 2 == 0;
        const std::size_t first = chain ? off[k] : off[k] + 1;
        const std::size_t last = chain ? off[k + 1] + 1 : off[k + 1];
        for (std::size_t o = first; o < last; ++o) {
            const std::size_t e = (a[0] + o) % n;
            const C l = c.edge_labels[e];
            bool ok = true;
            switch (k) {
            case 0: ok = l != C::W; break;
            case 1: ok = l == C::N || l == C::E; break;
            case 2: ok = l != C::S; break;
            case 3: ok = l == C::N || l == C::W; break;
            case 4: ok = l != C::E; break;
            case 5: ok = l == C::W || l == C::S; break;
            case 6: ok = l != C::N; break;
            case 7: ok = l == C::S || l == C::E; break;
            }
            if (!ok) return {false, e};
        }
    }
    return {true, std::nullopt};
}

inline FamilyMembership is_in_family_Q(const SimplePolygon& p) { return is_in_family_Q(classify(p)); }

/// A pair of reflex vertices whose clip lines exclude each other for every angle in (0, pi/2).
struct BlockingPair {
    enum class Kind { NeSw, NwSe } kind;
    std::size_t u; // NE (resp. NW) vertex
    std::size_t v; // SW (resp. SE) vertex
};

/// Finds an SW vertex weakly north-east of an NE vertex, or an SE vertex weakly
/// north-west of an NW vertex.
inline std::optional<BlockingPair> find_blocking_pair(const OrthoClassification& c) {
    const SimplePolygon& p = c.polygon;
    // For each u, the dominating candidate is the one with the largest y among those
    // with x on the required side; a sort by x and a running maximum suffice.
    auto search = [&](ReflexKind uk, ReflexKind vk, bool v_right, BlockingPair::Kind kind) -> std::optional<BlockingPair> {
        auto us = c.reflex_of(uk), vs = c.reflex_of(vk);
        if (us.empty() || vs.empty()) return std::nullopt;
        auto key = [&](std::size_t i) { return v_right ? -p[i].x : p[i].x; }; // process far side first
        std::sort(us.begin(), us.end(), [&](auto x, auto y) { return key(x) < key(y); });
        std::sort(vs.begin(), vs.end(), [&](auto x, auto y) { return key(x) < key(y); });
        std::size_t j = 0;
        std::optional<std::size_t> top;
        for (std::size_t u : us) {
            while (j < vs.size() && key(vs[j]) <= key(u) + tol::length) {
                if (!top || p[vs[j]].y > p[*top].y) top = vs[j];
                ++j;
            }
            if (top && p[*top].y >= p[u].y - tol::length) return BlockingPair{kind, u, *top};
        }
        return std::nullopt;
    };
    if (auto w = search(ReflexKind::NE, ReflexKind::SW, true, BlockingPair::Kind::NeSw)) return w;
    return search(ReflexKind::NW, ReflexKind::SE, false, BlockingPair::Kind::NwSe);
}

} // namespace rotokernel::ortho
