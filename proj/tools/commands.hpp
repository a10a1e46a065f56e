#pragma once

// Analysis commands as pure functions from a polygon to a JSON payload and an exit code.

#include <cstdio>
#include <string>
#include <vector>

#include "polygon_io.hpp"
#include "rotokernel/oracle.hpp"
#include "rotokernel/ortho_rotating_kernel.hpp"
#include "rotokernel/rotation_intervals.hpp"
#include "rotokernel/steady_kernel.hpp"
#include "svg.hpp"

namespace rotokernel::cli {

enum ExitCode { Nonempty = 0, Failure = 1, BadInput = 2, Empty = 3 };

enum class KernelSet { Single, Double };
enum class Show { Kernel, Intervals };

struct Outcome {
    json payload;
    int exit_code = Nonempty;
    std::string text; // CSV or SVG body, when the command produces one
};

/// Rounds to 12 significant digits, the canonical precision of every emitted angle.
inline double angle12(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", a);
    const double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;
}

inline const char* to_string(KernelSet s) { return s == KernelSet::Single ? "single" : "double"; }

inline const char* to_string(SupportingConstraint::Origin o) {
    using O = SupportingConstraint::Origin;
    switch (o) {
    case O::ReflexMaximum: return "reflexMaximum";
    case O::ReflexMinimum: return "reflexMinimum";
    case O::HullFallback: return "hullFallback";
    case O::Dent: return "dent";
    case O::ReflexVertex: return "reflexVertex";
    case O::Extremity: return "extremity";
    }
    return "unknown";
}

inline json point_json(Point p) { return json::array({p.x, p.y}); }

inline json region_json(const KernelRegion& k) {
    json verts = json::array();
    if (k.polygon)
        for (const Point& q : k.polygon->vertices()) verts.push_back(point_json(q));
    json cons = json::array();
    for (const auto& c : k.constraints)
        cons.push_back({{"origin", to_string(c.origin)},
                        {"vertex", c.vertex},
                        {"anchor", point_json(c.line.anchor)},
                        {"angle", angle12(c.line.angle)},
                        {"keep", c.keep == Side::Left ? "left" : "right"}});
    return {{"empty", k.empty()},
            {"degenerate", k.degenerate},
            {"vertices", std::move(verts)},
            {"area", k.area},
            {"perimeter", k.perimeter},
            {"constraints", std::move(cons)}};
}

inline void check_domain(double theta, KernelSet set) {
    const bool ok = set == KernelSet::Single ? theta >= -half_pi && theta < half_pi : theta >= 0 && theta < half_pi;
    if (!ok)
        throw InputError(std::string("theta must lie in ") +
                         (set == KernelSet::Single ? "[-pi/2, pi/2)" : "[0, pi/2)") + " for the " + to_string(set) +
                         " set");
}

inline KernelRegion kernel_for(const SimplePolygon& p, double theta, KernelSet set) {
    check_domain(theta, set);
    return set == KernelSet::Single ? steady::kernel_at(p, theta) : ortho::kernel_at(p, theta);
}

inline Outcome kernel_outcome(KernelRegion k, double theta, KernelSet set) {
    Outcome o;
    o.payload = {{"set", to_string(set)}, {"theta", angle12(theta)}};
    o.payload.update(region_json(k));
    o.exit_code = k.empty() ? Empty : Nonempty;
    return o;
}

inline Outcome cmd_kernel(const SimplePolygon& p, double theta, KernelSet set) {
    return kernel_outcome(kernel_for(p, theta, set), theta, set);
}

inline json support_json(const intervals::Support& s) { return {{"vertex", s.vertex}, {"fallback", s.fallback}}; }

inline Outcome cmd_intervals(const SimplePolygon& p) {
    const auto events = intervals::event_intervals(p);
    const auto ranges = intervals::nonempty_intervals(p, events);
    json list = json::array();
    for (const auto& r : ranges) {
        json supports = json::array();
        for (const auto& e : events)
            if (e.theta_lo < r.hi && e.theta_hi > r.lo)
                supports.push_back({{"from", angle12(std::max(e.theta_lo, r.lo))},
                                    {"to", angle12(std::min(e.theta_hi, r.hi))},
                                    {"north", support_json(e.support_min)},
                                    {"south", support_json(e.support_max)}});
        list.push_back({{"interval", json::array({angle12(r.lo), angle12(r.hi)})},
                        {"degenerateAtStart", r.lo_degenerate},
                        {"degenerateAtEnd", r.hi_degenerate},
                        {"supports", std::move(supports)}});
    }
    Outcome o;
    o.payload = {{"eventCount", events.size()}, {"intervals", std::move(list)}};
    o.exit_code = ranges.empty() ? Empty : Nonempty;
    return o;
}

inline Outcome cmd_optimize(const SimplePolygon& p, ortho::Objective objective, ortho::Sense sense) {
    const auto r = ortho::optimize(p, objective, sense);
    json table = json::array();
    for (const auto& rec : r.records)
        table.push_back({{"interval", json::array({angle12(rec.lo), angle12(rec.hi)})},
                         {"empty", rec.empty},
                         {"bestTheta", angle12(rec.best_theta)},
                         {"bestValue", rec.best_value}});
    Outcome o;
    o.payload = {{"objective", objective == ortho::Objective::Area ? "area" : "perimeter"},
                 {"sense", sense == ortho::Sense::Max ? "max" : "min"},
                 {"inFamily", r.in_family},
                 {"thetaStar", angle12(r.theta_star)},
                 {"value", r.value},
                 {"emptyForAllTheta", r.empty_for_all_theta},
                 {"emptyMinimum", r.empty_minimum},
                 {"thetaZero", {{"empty", r.records.front().empty}, {"value", r.value_at_zero}}},
                 {"intervals", std::move(table)}};
    o.exit_code = r.empty_for_all_theta ? Empty : Nonempty;
    return o;
}

namespace detail {

inline constexpr const char* outline = "#1f2933";
inline constexpr const char* fill = "#7fb3d5";
inline constexpr const char* clip = "#c0392b";

inline std::string kernel_svg(const SimplePolygon& p, const KernelRegion& k) {
    SvgDocument svg(with_margin(bounding_box(p.vertices())));
    svg.polygon(p.vertices(), "none", outline, 1.5);
    if (k.polygon) svg.polygon(k.polygon->vertices(), fill, fill, 0.5);
    for (const auto& c : k.constraints) svg.line(c.line, clip, 1, true);
    return svg.str();
}

/// Angular axis with the nonempty ranges as bars and a tick at theta.
inline std::string intervals_svg(const std::vector<std::pair<double, double>>& ranges, double lo, double hi,
                                 double theta) {
    const double height = (hi - lo) / 8;
    SvgDocument svg(with_margin({lo, -height / 4, hi, height}), 640);
    for (const auto& [a, b] : ranges) {
        const Point bar[] = {{a, 0}, {b, 0}, {b, height / 2}, {a, height / 2}};
        svg.polygon(bar, fill, fill, 0.5);
    }
    svg.segment({lo, 0}, {hi, 0}, outline, 1);
    svg.segment({theta, -height / 4}, {theta, height}, clip, 1.5);
    return svg.str();
}

} // namespace detail

inline Outcome cmd_render(const SimplePolygon& p, double theta, KernelSet set, Show show) {
    const auto k = kernel_for(p, theta, set);
    Outcome o = kernel_outcome(k, theta, set);
    o.payload["show"] = show == Show::Kernel ? "kernel" : "intervals";
    if (show == Show::Kernel) {
        o.text = detail::kernel_svg(p, k);
        return o;
    }
    std::vector<std::pair<double, double>> ranges;
    double lo = -half_pi, hi = half_pi;
    if (set == KernelSet::Single) {
        for (const auto& r : intervals::nonempty_intervals(p)) ranges.emplace_back(r.lo, r.hi);
    } else {
        lo = 0;
        for (const auto& r : ortho::optimize(p, ortho::Objective::Area, ortho::Sense::Max).records)
            if (!r.empty) ranges.emplace_back(r.lo, std::max(r.hi, r.lo + 1e-3));
    }
    json list = json::array();
    for (const auto& [a, b] : ranges) list.push_back(json::array({angle12(a), angle12(b)}));
    o.payload["intervals"] = std::move(list);
    o.text = detail::intervals_svg(ranges, lo, hi, theta);
    return o;
}

inline oracle::Mode to_mode(KernelSet s) { return s == KernelSet::Single ? oracle::Mode::Single : oracle::Mode::Double; }

/// CSV rows theta,empty,area,perimeter on the grid lo + i (hi - lo) / samples.
inline Outcome cmd_oracle_scan(const SimplePolygon& p, std::size_t samples, KernelSet set, double lo, double hi) {
    if (samples < 2) throw InputError("--samples must be at least 2");
    if (!(lo < hi)) throw InputError("scan range is empty");
    const auto s = oracle::dense_scan(p, lo, hi, samples, to_mode(set));
    std::string csv = "theta,empty,area,perimeter\n";
    std::size_t nonempty = 0;
    char row[128];
    for (std::size_t i = 0; i < samples; ++i) {
        std::snprintf(row, sizeof row, "%.12g,%d,%.12g,%.12g\n", angle12(s.thetas[i]), s.empty[i] ? 1 : 0,
                      s.area[i], s.perimeter[i]);
        csv += row;
        nonempty += s.empty[i] ? 0 : 1;
    }
    Outcome o;
    o.payload = {{"set", to_string(set)},
                 {"range", json::array({angle12(lo), angle12(hi)})},
                 {"samples", samples},
                 {"nonempty", nonempty},
                 {"csvHash", fnv1a_hex(csv)}};
    o.text = std::move(csv);
    o.exit_code = nonempty ? Nonempty : Empty;
    return o;
}

inline Outcome cmd_oracle_clip(const SimplePolygon& p, double theta, KernelSet set) {
    check_domain(theta, set);
    return kernel_outcome(oracle::kernel_full_clip(p, theta, to_mode(set)), theta, set);
}

} // namespace rotokernel::cli
