#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "rotokernel/line.hpp"
#include "rotokernel/polygon.hpp"

namespace rotokernel::cli {

inline std::string svg_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v == 0 ? 0.0 : v);
    return buf;
}

inline Box with_margin(Box b, double fraction = 0.05) {
    const double mx = (b.xmax - b.xmin) * fraction, my = (b.ymax - b.ymin) * fraction;
    return {b.xmin - mx, b.ymin - my, b.xmax + mx, b.ymax + my};
}

/// Part of an infinite line inside a box.
inline std::optional<std::pair<Point, Point>> clip_to_box(const Line& l, const Box& b) {
    const Point a = l.anchor, d = l.direction();
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    auto slab = [&](double origin, double dir, double mn, double mx) {
        if (std::abs(dir) < 1e-15) return origin >= mn && origin <= mx;
        double t1 = (mn - origin) / dir, t2 = (mx - origin) / dir;
        if (t1 > t2) std::swap(t1, t2);
        lo = std::max(lo, t1);
        hi = std::min(hi, t2);
        return lo <= hi;
    };
    if (!slab(a.x, d.x, b.xmin, b.xmax) || !slab(a.y, d.y, b.ymin, b.ymax)) return std::nullopt;
    return std::pair{a + lo * d, a + hi * d};
}

/// SVG drawing in world coordinates, y pointing up.
class SvgDocument {
public:
    explicit SvgDocument(Box view, double width_px = 480) : view_(view) {
        const double w = view.xmax - view.xmin, h = view.ymax - view.ymin;
        stroke_ = 0.004 * std::max(w, h);
        body_ = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + svg_number(view.xmin) + " " +
                svg_number(-view.ymax) + " " + svg_number(w) + " " + svg_number(h) + "\" width=\"" +
                svg_number(width_px) + "\" height=\"" + svg_number(width_px * h / w) + "\">\n";
    }

    const Box& view() const noexcept { return view_; }
    double stroke() const noexcept { return stroke_; }

    void polygon(std::span<const Point> ring, std::string_view fill, std::string_view stroke, double width = 1) {
        body_ += "<polygon points=\"";
        for (std::size_t i = 0; i < ring.size(); ++i) {
            if (i) body_ += ' ';
            body_ += svg_number(ring[i].x) + "," + svg_number(-ring[i].y);
        }
        body_ += "\" fill=\"" + std::string(fill) + "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" +
                 svg_number(width * stroke_) + "\"/>\n";
    }

    void segment(Point a, Point b, std::string_view stroke, double width = 1, bool dashed = false) {
        body_ += "<line x1=\"" + svg_number(a.x) + "\" y1=\"" + svg_number(-a.y) + "\" x2=\"" + svg_number(b.x) +
                 "\" y2=\"" + svg_number(-b.y) + "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" +
                 svg_number(width * stroke_) + "\"";
        if (dashed) body_ += " stroke-dasharray=\"" + svg_number(4 * stroke_) + " " + svg_number(3 * stroke_) + "\"";
        body_ += "/>\n";
    }

    void line(const Line& l, std::string_view stroke, double width = 1, bool dashed = true) {
        if (auto s = clip_to_box(l, view_)) segment(s->first, s->second, stroke, width, dashed);
    }

    std::string str() const { return body_ + "</svg>\n"; }

private:
    Box view_;
    double stroke_ = 1;
    std::string body_;
};

} // namespace rotokernel::cli
