#pragma once

// Lower and upper envelopes of non-vertical line segments, by divide and conquer.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rotokernel {

/// Segment of the line y = slope * x + intercept over [x0, x1].
struct LineSegment {
    double x0 = 0, x1 = 0;
    double slope = 0, intercept = 0;

    double at(double x) const noexcept { return slope * x + intercept; }
};

struct EnvelopePiece {
    double x0 = 0, x1 = 0;
    std::size_t segment = 0; // index into the input sequence
    double slope = 0, intercept = 0;

    double at(double x) const noexcept { return slope * x + intercept; }
};

enum class EnvelopeSide { Lower, Upper };

/// Piecewise-linear envelope over the union of the input x-ranges; gaps are left uncovered.
struct Envelope {
    std::vector<EnvelopePiece> pieces; // sorted by x, pairwise interior-disjoint

    std::vector<double> breakpoints() const {
        std::vector<double> xs;
        for (const auto& p : pieces) {
            if (xs.empty() || xs.back() != p.x0) xs.push_back(p.x0);
            xs.push_back(p.x1);
        }
        return xs;
    }

    /// Piece covering x (the left one at a shared breakpoint).
    std::optional<EnvelopePiece> at(double x) const {
        auto it = std::lower_bound(pieces.begin(), pieces.end(), x,
                                   [](const EnvelopePiece& p, double v) { return p.x1 < v; });
        if (it == pieces.end() || it->x0 > x) return std::nullopt;
        return *it;
    }
};

namespace detail {

using Pieces = std::vector<EnvelopePiece>;

inline void push_piece(Pieces& out, EnvelopePiece p) {
    if (!(p.x1 > p.x0)) return;
    if (!out.empty()) {
        EnvelopePiece& last = out.back();
        if (last.segment == p.segment && last.x1 == p.x0) {
            last.x1 = p.x1;
            return;
        }
    }
    out.push_back(p);
}

inline EnvelopePiece restricted(EnvelopePiece p, double x0, double x1) {
    p.x0 = x0, p.x1 = x1;
    return p;
}

/// Pointwise minimum of two lower envelopes.
inline Pieces merge_lower(const Pieces& a, const Pieces& b) {
    std::vector<double> xs;
    xs.reserve(2 * (a.size() + b.size()));
    for (const auto& p : a) xs.push_back(p.x0), xs.push_back(p.x1);
    for (const auto& p : b) xs.push_back(p.x0), xs.push_back(p.x1);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    Pieces out;
    std::size_t ia = 0, ib = 0;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const double u = xs[k], v = xs[k + 1], mid = (u + v) / 2;
        while (ia < a.size() && a[ia].x1 <= mid) ++ia;
        while (ib < b.size() && b[ib].x1 <= mid) ++ib;
        const EnvelopePiece* pa = ia < a.size() && a[ia].x0 <= mid ? &a[ia] : nullptr;
        const EnvelopePiece* pb = ib < b.size() && b[ib].x0 <= mid ? &b[ib] : nullptr;
        if (!pa && !pb) continue;
        if (!pa || !pb) {
            push_piece(out, restricted(pa ? *pa : *pb, u, v));
            continue;
        }
        const double du = pa->at(u) - pb->at(u), dv = pa->at(v) - pb->at(v);
        // Identical lines: keep the lower segment index for determinism.
        const EnvelopePiece& tie = pa->segment < pb->segment ? *pa : *pb;
        if (du == 0 && dv == 0) {
            push_piece(out, restricted(tie, u, v));
        } else if (du <= 0 && dv <= 0) {
            push_piece(out, restricted(*pa, u, v));
        } else if (du >= 0 && dv >= 0) {
            push_piece(out, restricted(*pb, u, v));
        } else {
            const double x = std::clamp(u + (v - u) * du / (du - dv), u, v);
            const EnvelopePiece& first = du < 0 ? *pa : *pb;
            const EnvelopePiece& second = du < 0 ? *pb : *pa;
            push_piece(out, restricted(first, u, x));
            push_piece(out, restricted(second, x, v));
        }
    }
    return out;
}

inline Pieces lower_envelope(std::span<const EnvelopePiece> segs) {
    if (segs.empty()) return {};
    if (segs.size() == 1) {
        Pieces out;
        push_piece(out, segs[0]);
        return out;
    }
    const std::size_t h = segs.size() / 2;
    return merge_lower(lower_envelope(segs.first(h)), lower_envelope(segs.subspan(h)));
}

} // namespace detail

/// Envelope of `segments`; each piece records the index of the segment it lies on.
inline Envelope envelope(std::span<const LineSegment> segments, EnvelopeSide side) {
    const double sign = side == EnvelopeSide::Lower ? 1.0 : -1.0;
    std::vector<EnvelopePiece> input;
    input.reserve(segments.size());
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const auto& s = segments[i];
        input.push_back({std::min(s.x0, s.x1), std::max(s.x0, s.x1), i, sign * s.slope, sign * s.intercept});
    }
    Envelope env{detail::lower_envelope(input)};
    for (auto& p : env.pieces) {
        p.slope = segments[p.segment].slope;
        p.intercept = segments[p.segment].intercept;
    }
    return env;
}

} // namespace rotokernel
