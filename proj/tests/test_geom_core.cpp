#include <gtest/gtest.h>

#include <random>

#include "rotokernel/geom_core.hpp"
#include "test_support.hpp"

using namespace rotokernel;
namespace rt = rotokernel::testing;

namespace {

SimplePolygon unit_square() { return SimplePolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

double total_area(const std::vector<SimplePolygon>& ps) {
    double a = 0;
    for (const auto& p : ps) a += area(p);
    return a;
}

} // namespace

TEST(Orientation, Examples) {
    EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1);
    EXPECT_EQ(orientation({0, 0}, {1, 0}, {2, 0}), 0);
    EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 1}), -1);
}

TEST(LineAtAngle, ImplicitForm) {
    const Line h = line_at_angle({1, 2}, 0);
    EXPECT_NEAR(h.evaluate({7, 2}), 0, 1e-15);
    EXPECT_GT(std::abs(h.evaluate({1, 3})), 0.5);
    const Line v = line_at_angle({1, 2}, half_pi);
    EXPECT_NEAR(v.evaluate({1, -40}), 0, 1e-12);
    const Line d = line_at_angle({0, 0}, pi / 4);
    for (double t : {-3.0, 0.5, 10.0}) EXPECT_NEAR(d.evaluate({t, t}), 0, 1e-12);
    EXPECT_NEAR(d.evaluate({0, 0}), 0, 0);
    EXPECT_EQ(line_at_angle({2, 2}, pi / 4), d);
    EXPECT_FALSE(line_at_angle({2, 3}, pi / 4) == d);
}

TEST(ClosedFormIntersections, Examples) {
    const auto h1 = intersect_with_horizontal({0, 0}, pi / 4, 1);
    const auto ref = *rt::meet({0, 0}, pi / 4, {0, 1}, 0);
    EXPECT_NEAR(h1.x, ref.x, 1e-12);
    EXPECT_NEAR(h1.y, 1, 1e-12);
    EXPECT_NEAR(h1.x, 1, 1e-12);
    EXPECT_NEAR(intersect_with_horizontal({2, 3}, half_pi, 0).x, 2, 1e-12);
    EXPECT_TRUE(almost_equal(intersect_with_horizontal({0, 0}, pi / 4, 0), {0, 0}));
    EXPECT_THROW(intersect_with_horizontal({0, 0}, 0, 1), DegenerateIntersection);

    EXPECT_TRUE(almost_equal(intersect_with_vertical({0, 0}, pi / 4, 2), {2, 2}));
    EXPECT_TRUE(almost_equal(intersect_with_vertical({1, 5}, 0, 3), {3, 5}));
    EXPECT_TRUE(almost_equal(intersect_with_vertical({0, 0}, pi / 4, 0), {0, 0}));
    EXPECT_THROW(intersect_with_vertical({0, 0}, half_pi, 1), DegenerateIntersection);

    for (double t : {0.0, 0.3, pi / 4, 1.2, half_pi})
        EXPECT_TRUE(almost_equal(intersect_orthogonal_pair({3, 4}, {3, 4}, t), {3, 4}));
    const auto q = intersect_orthogonal_pair({0, 0}, {1, 0}, pi / 4);
    const auto qref = *rt::meet({0, 0}, pi / 4, {1, 0}, 3 * pi / 4);
    EXPECT_NEAR(q.x, 0.5, 1e-12);
    EXPECT_NEAR(q.y, 0.5, 1e-12);
    EXPECT_NEAR(q.x, qref.x, 1e-12);
    EXPECT_TRUE(almost_equal(intersect_orthogonal_pair({0, 0}, {1, 0}, 1e-13), {1, 0}));
    EXPECT_TRUE(almost_equal(intersect_orthogonal_pair({0, 0}, {1, 0}, 1e-7), {1, 0}, 1e-6));
}

TEST(ClosedFormIntersections, AgreeWithGenericSolverAndLieOnBothLines) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> c(-100, 100), a(1e-3, half_pi - 1e-3);
    double worst = 0;
    for (int i = 0; i < 20000; ++i) {
        const Point u{c(rng), c(rng)}, w{c(rng), c(rng)};
        const double t = a(rng);
        const Point p = intersect_orthogonal_pair(u, w, t);
        const Point r = *rt::meet(u, t, w, t + half_pi);
        worst = std::max({worst, std::abs(p.x - r.x), std::abs(p.y - r.y)});
        EXPECT_LE(std::abs(line_at_angle(u, t).evaluate(p)), 1e-9);
        EXPECT_LE(std::abs(line_at_angle(w, t + half_pi).evaluate(p)), 1e-9);
        const Point f = orthogonal_pair_form(u, w)(t);
        ASSERT_NEAR(f.x, p.x, 1e-12);
        ASSERT_NEAR(f.y, p.y, 1e-12);
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(ConvexHull, Examples) {
    const auto h = convex_hull(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}});
    EXPECT_TRUE(rt::same_point_set(h.vertices, {{0, 0}, {1, 0}, {0, 1}}));
    EXPECT_EQ(convex_hull(std::vector<Point>{{0, 0}}).size(), 1u);
    EXPECT_EQ(convex_hull(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}}).size(), 2u);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ang(0, 2 * pi);
    std::vector<Point> circle;
    for (int i = 0; i < 100; ++i) {
        const double t = ang(rng);
        circle.push_back({10 * std::cos(t), 10 * std::sin(t)});
    }
    const auto hc = convex_hull(circle);
    EXPECT_EQ(hc.size(), 100u);
    EXPECT_TRUE(rt::same_point_set(hc.vertices, rt::gift_wrap(circle)));
}

TEST(ConvexHull, MatchesGiftWrapping) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> nd(1, 64);
    std::uniform_real_distribution<double> c(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Point> pts;
        const int n = nd(rng);
        for (int i = 0; i < n; ++i) pts.push_back({c(rng), c(rng)});
        const auto h = convex_hull(pts);
        ASSERT_TRUE(rt::same_point_set(h.vertices, rt::gift_wrap(pts))) << "trial " << trial;
        for (std::size_t i = 0; h.size() >= 3 && i < h.size(); ++i)
            ASSERT_EQ(orientation(h.vertices[i], h.vertices[(i + 1) % h.size()], h.vertices[(i + 2) % h.size()]), 1);
    }
}

TEST(ClipHalfplane, Examples) {
    const auto sq = unit_square();
    const auto below = clip_halfplane(sq, line_at_angle({0, 0.5}, 0), Side::Right);
    ASSERT_EQ(below.size(), 1u);
    EXPECT_NEAR(area(below[0]), 0.5, 1e-12);
    EXPECT_TRUE(rt::same_point_set(std::vector<Point>(below[0].vertices().begin(), below[0].vertices().end()),
                                   {{0, 0}, {1, 0}, {1, 0.5}, {0, 0.5}}));
    const auto noop = clip_halfplane(sq, line_at_angle({0, 2}, 0), Side::Right);
    ASSERT_EQ(noop.size(), 1u);
    EXPECT_EQ(noop[0], sq);
    EXPECT_TRUE(clip_halfplane(sq, line_at_angle({0, 2}, 0), Side::Left).empty());

    // U = [0,3]x[0,2] minus the notch [1,2]x(1,2]
    const SimplePolygon u({{0, 0}, {3, 0}, {3, 2}, {2, 2}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
    const Line mid = line_at_angle({0, 1.5}, 0);
    const auto lower = clip_halfplane(u, mid, Side::Right);
    ASSERT_EQ(lower.size(), 1u);
    EXPECT_NEAR(area(lower[0]), 4.0, 1e-12);
    const auto upper = clip_halfplane(u, mid, Side::Left);
    ASSERT_EQ(upper.size(), 2u);
    EXPECT_NEAR(total_area(upper), 1.0, 1e-12);
}

TEST(ClipHalfplane, VerticesOnLineAreKept) {
    const SimplePolygon tri({{0, 0}, {4, 0}, {2, 2}});
    const auto half = clip_halfplane(tri, line_at_angle({2, 0}, half_pi), Side::Right);
    ASSERT_EQ(half.size(), 1u);
    EXPECT_NEAR(area(half[0]), 2.0, 1e-12);
    // Edge along the clip line, interior on the kept side.
    const auto keep_all = clip_halfplane(unit_square(), line_at_angle({0, 0}, 0), Side::Left);
    ASSERT_EQ(keep_all.size(), 1u);
    EXPECT_NEAR(area(keep_all[0]), 1.0, 1e-12);
}

TEST(ClipHalfplane, ComplementaryPiecesPartitionThePolygon) {
    // Comb polygon: five teeth above a base strip.
    std::vector<Point> comb{{0, 0}, {9, 0}};
    for (int k = 4; k >= 0; --k) {
        comb.push_back({2.0 * k + 1, k == 4 ? 0.0 : 1.0});
        comb.push_back({2.0 * k + 1, 3});
        comb.push_back({2.0 * k, 3});
        if (k > 0) comb.push_back({2.0 * k, 1});
    }
    const SimplePolygon p(comb);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(0, pi), off(-1, 10);
    for (int i = 0; i < 500; ++i) {
        const Line l = line_at_angle({off(rng), off(rng) / 3}, ang(rng));
        const double a = total_area(clip_halfplane(p, l, Side::Left));
        const double b = total_area(clip_halfplane(p, l, Side::Right));
        ASSERT_NEAR(a + b, area(p), 1e-9 * area(p));
    }
    EXPECT_EQ(clip_halfplane(p, line_at_angle({0, 2}, 0), Side::Left).size(), 5u);
}

TEST(AreaPerimeter, Examples) {
    EXPECT_DOUBLE_EQ(area(unit_square()), 1);
    EXPECT_DOUBLE_EQ(perimeter(unit_square()), 4);
    EXPECT_DOUBLE_EQ(area(SimplePolygon({{0, 0}, {4, 0}, {2, 3}})), 6);
    const SimplePolygon lp({{0, 0}, {2, 0}, {2, 2}, {1, 2}, {1, 1}, {0, 1}});
    EXPECT_DOUBLE_EQ(area(lp), 3);
    EXPECT_DOUBLE_EQ(perimeter(lp), 8);
}

TEST(SimplePolygon, ConstructionRules) {
    EXPECT_THROW(SimplePolygon({{0, 0}, {1, 0}}), InvalidPolygon);
    EXPECT_THROW(SimplePolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), InvalidPolygon); // clockwise
    EXPECT_THROW(SimplePolygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), InvalidPolygon); // bow tie
    const SimplePolygon merged({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {2, 2}, {0, 2}});
    EXPECT_EQ(merged.size(), 4u);
    bool reversed = false;
    const auto p = SimplePolygon::any_orientation({{0, 0}, {0, 1}, {1, 1}, {1, 0}}, &reversed);
    EXPECT_TRUE(reversed);
    EXPECT_GT(area(p), 0);
}

TEST(SimplePolygon, LargeSelfIntersectionCheckUsesGrid) {
    std::vector<Point> v;
    const int n = 2000;
    for (int i = 0; i < n; ++i) {
        const double t = 2 * pi * i / n, r = i % 2 ? 10 : 9;
        v.push_back({r * std::cos(t), r * std::sin(t)});
    }
    EXPECT_NO_THROW(SimplePolygon{v});
    std::swap(v[10], v[500]);
    EXPECT_THROW(SimplePolygon{v}, InvalidPolygon);
}

TEST(InternalTangents, Examples) {
    const std::vector<Point> a1{{0, 0}}, b1{{2, 2}};
    const auto t1 = common_internal_tangents(a1, b1);
    for (const auto& t : t1) EXPECT_NEAR(t.line.angle, pi / 4, 1e-12);

    const std::vector<Point> sa{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    std::vector<Point> sb;
    for (Point p : sa) sb.push_back(p + Point{3, 0});
    // Brute force: vertex pairs whose line weakly separates the squares.
    std::vector<std::pair<Point, Point>> separating;
    for (Point p : sa)
        for (Point q : sb) {
            int side_a = 0, side_b = 0;
            bool ok = true;
            for (Point r : sa) {
                const int o = orientation(p, q, r);
                if (o) ok &= side_a == 0 || o == side_a, side_a = o;
            }
            for (Point r : sb) {
                const int o = orientation(p, q, r);
                if (o) ok &= side_b == 0 || o == side_b, side_b = o;
            }
            if (ok && side_a == -side_b && side_a != 0) separating.push_back({p, q});
        }
    ASSERT_EQ(separating.size(), 2u);
    const auto t2 = common_internal_tangents(sa, sb);
    for (const auto& t : t2) {
        bool found = false;
        for (auto [p, q] : separating) found |= almost_equal(p, t.on_a) && almost_equal(q, t.on_b);
        EXPECT_TRUE(found);
    }
    EXPECT_FALSE(almost_equal(t2[0].on_a, t2[1].on_a));

    const std::vector<Point> overlap{{0.5, 0.5}, {2, 0.5}, {2, 2}};
    EXPECT_THROW(common_internal_tangents(sa, overlap), HullsIntersect);
}
