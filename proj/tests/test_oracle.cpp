#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rotokernel/oracle.hpp"
#include "rotokernel/ortho_rotating_kernel.hpp"
#include "rotokernel/rotation_intervals.hpp"
#include "rotokernel/steady_kernel.hpp"

using namespace rotokernel;
using oracle::Mode;

namespace {

SimplePolygon square() { return SimplePolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
SimplePolygon nt() { return SimplePolygon({{0, 0}, {2, 1}, {4, 0}, {2, 3}}); }
SimplePolygon lp() { return SimplePolygon({{0, 0}, {2, 0}, {2, 2}, {1, 2}, {1, 1}, {0, 1}}); }
SimplePolygon plus() {
    return SimplePolygon({{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {2, 2}, {2, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 1}, {1, 1}});
}
SimplePolygon dn() {
    return SimplePolygon({{0, 0}, {3, 0}, {3, 2}, {4, 2}, {4, 0}, {5, 0}, {5, 3}, {2, 3}, {2, 1}, {1, 1}, {1, 3}, {0, 3}});
}
SimplePolygon u_shape() { return SimplePolygon({{0, 0}, {3, 0}, {3, 2}, {2, 2}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}); }

Point random_inside(const std::vector<Point>& ring, std::mt19937_64& rng) {
    const Box b = bounding_box(ring);
    std::uniform_real_distribution<double> ux(b.xmin, b.xmax), uy(b.ymin, b.ymax);
    for (;;) {
        const Point q{ux(rng), uy(rng)};
        if (locate(ring, q) == Location::Inside) return q;
    }
}

} // namespace

TEST(FullClip, ConvexIsItself) {
    std::vector<Point> hex;
    for (int i = 0; i < 6; ++i) hex.push_back(unit_direction(i * pi / 3));
    const SimplePolygon h(hex);
    for (double t : {0.0, 0.4, 1.2}) {
        EXPECT_NEAR(oracle::kernel_full_clip(h, t, Mode::Single).area, area(h), 1e-12);
        EXPECT_NEAR(oracle::kernel_full_clip(square(), t, Mode::Double).area, 1, 1e-12);
    }
}

TEST(FullClip, NotchedTriangle) {
    EXPECT_NEAR(oracle::kernel_full_clip(nt(), 0, Mode::Single).area, 8.0 / 3, 1e-12);
}

TEST(FullClip, PlusAgreesWithSweepKernel) {
    const auto a = oracle::kernel_full_clip(plus(), pi / 4, Mode::Double);
    const auto b = ortho::kernel_at_theta(plus(), pi / 4);
    ASSERT_FALSE(a.empty());
    ASSERT_FALSE(b.empty());
    EXPECT_NEAR(a.area, b.area, 1e-12);
}

TEST(FullClip, SingleAgreesWithStripKernel) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(-half_pi, half_pi);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto p = gen::random_simple(3 + seed % 38, seed);
        for (double t : {0.0, ang(rng)}) {
            const auto a = oracle::kernel_full_clip(p, t, Mode::Single);
            const auto b = steady::kernel_at(p, t);
            ASSERT_EQ(a.empty(), b.empty()) << seed << " " << t;
            EXPECT_NEAR(a.area, b.area, 1e-9 * std::max(1.0, a.area)) << seed << " " << t;
        }
    }
}

TEST(FullClip, DoubleAgreesWithSweepKernel) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto p = oracle::generate(seed % 2 ? oracle::GeneratorKind::FamilyQ : oracle::GeneratorKind::Staircase,
                                        4 + 2 * (seed % 20), seed);
        EXPECT_NEAR(oracle::kernel_full_clip(p, 0, Mode::Double).area, ortho::kernel_axis_aligned(p).area, 1e-9);
        for (int k = 1; k < 25; ++k) {
            const double t = k * half_pi / 25;
            const auto a = oracle::kernel_full_clip(p, t, Mode::Double);
            const auto b = ortho::kernel_at_theta(p, t);
            ASSERT_EQ(a.empty(), b.empty()) << seed << " " << t;
            EXPECT_NEAR(a.area, b.area, 1e-9 * std::max(1.0, a.area)) << seed << " " << t;
        }
    }
}

TEST(DenseScan, SquareDouble) {
    const auto s = oracle::dense_scan(square(), 0, half_pi, 100, Mode::Double);
    ASSERT_EQ(s.thetas.size(), 100u);
    EXPECT_EQ(s.thetas[0], 0);
    for (double a : s.area) EXPECT_NEAR(a, 1, 1e-12);
}

TEST(DenseScan, Deterministic) {
    const auto a = oracle::dense_scan(lp(), 0, half_pi, 257, Mode::Double, 1);
    const auto b = oracle::dense_scan(lp(), 0, half_pi, 257, Mode::Double, 7);
    EXPECT_EQ(a.area, b.area);
    EXPECT_EQ(a.thetas, b.thetas);
}

TEST(DenseScan, DoubleNotchMatchesIntervals) {
    const auto p = dn();
    const auto iv = intervals::nonempty_intervals(p);
    const auto s = oracle::dense_scan(p, -half_pi, half_pi, 2000, Mode::Single);
    const double step = pi / 2000;
    for (std::size_t i = 0; i < s.thetas.size(); ++i) {
        bool inside = false, near = false;
        for (const auto& a : iv) {
            inside |= s.thetas[i] >= a.lo && s.thetas[i] <= a.hi;
            // Orientations repeat with period pi, so -pi/2 neighbours pi/2.
            for (double e : {a.lo, a.hi}) near |= std::abs(std::remainder(s.thetas[i] - e, pi)) < 2 * step;
        }
        if (!near) EXPECT_EQ(!s.empty[i], inside) << s.thetas[i];
    }
}

TEST(DenseScan, LShapeOptimum) {
    const auto s = oracle::dense_scan(lp(), 0, half_pi, 10000, Mode::Double);
    const double best = *std::max_element(s.area.begin(), s.area.end());
    EXPECT_NEAR(best, ortho::optimize(lp(), ortho::Objective::Area, ortho::Sense::Max).value, 3e-6);
}

TEST(StaircaseVisible, Examples) {
    EXPECT_TRUE(oracle::staircase_visible(square(), {0.2, 0.2}, {0.8, 0.8}, 0, 1.0 / 128));
    EXPECT_FALSE(oracle::staircase_visible(u_shape(), {0.5, 1.5}, {2.5, 1.5}, 0, 1.0 / 128));
    EXPECT_FALSE(oracle::staircase_visible(u_shape(), {0.5, 1.5}, {2.5, 1.5}, 0, 1.0 / 128, Mode::Single));
    EXPECT_TRUE(oracle::staircase_visible(lp(), {1.5, 0.5}, {0.5, 0.5}, pi / 4, 1.0 / 128));
    EXPECT_THROW(oracle::staircase_visible(square(), {2, 2}, {0.5, 0.5}, 0, 0.01), PointOutside);
    const auto path = oracle::staircase_path(lp(), {1.5, 0.5}, {0.5, 0.5}, pi / 4, 1.0 / 64);
    ASSERT_TRUE(path.has_value());
    for (const Point& c : path->cells) EXPECT_EQ(locate(lp(), c), Location::Inside);
}

TEST(StaircaseVisible, KernelPointsSeeEverything) {
    std::mt19937_64 rng(11);
    int misses = 0, checks = 0;
    auto check = [&](const SimplePolygon& p, const KernelRegion& k, double theta, Mode mode) {
        if (k.empty() || k.area < 1e-3 * area(p)) return;
        const Box b = bounding_box(p.vertices());
        const double diam = std::hypot(b.xmax - b.xmin, b.ymax - b.ymin);
        const auto grid = oracle::visibility_grid(p, theta, diam / 512);
        const auto kv = k.polygon->vertices();
        Point c{0, 0};
        for (const Point& v : kv) c = c + v;
        c = (1.0 / static_cast<double>(kv.size())) * c;
        const std::vector<Point> inner_ring(kv.begin(), kv.end());
        Point source = random_inside(inner_ring, rng);
        source = c + 0.8 * (source - c);
        const std::vector<Point> ring(p.vertices().begin(), p.vertices().end());
        for (int t = 0; t < 16; ++t) {
            const Point target = random_inside(ring, rng);
            if (!grid.free_at(source) || !grid.free_at(target)) continue;
            ++checks;
            if (!oracle::staircase_path(grid, source, target, mode)) {
                ++misses;
                ADD_FAILURE() << "theta " << theta << " from (" << source.x << ", " << source.y << ") to (" << target.x
                              << ", " << target.y << ")";
            }
        }
    };
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto p = gen::random_simple(5 + seed % 12, 70 + seed);
        const double t = std::uniform_real_distribution<double>(-1, 1)(rng);
        check(p, steady::kernel_at(p, t), t, Mode::Single);
        const auto q = gen::family_q(8 + 2 * (seed % 8), seed);
        const double u = std::uniform_real_distribution<double>(0.05, 1.5)(rng);
        check(q, ortho::kernel_at_theta(q, u), u, Mode::Double);
    }
    EXPECT_GT(checks, 100);
    EXPECT_EQ(misses, 0);
}

TEST(Generate, Reproducible) {
    using K = oracle::GeneratorKind;
    for (K k : {K::RandomSimple, K::FamilyQ, K::Staircase, K::WithBlockingPair, K::NotInFamily}) {
        const auto a = oracle::generate(k, 12, 7), b = oracle::generate(k, 12, 7);
        EXPECT_EQ(a, b) << oracle::to_string(k);
    }
    const auto s = oracle::generate(K::Staircase, 12, 7);
    EXPECT_EQ(s.size(), 12u);
    EXPECT_TRUE(ortho::is_in_family_Q(s).member);
    EXPECT_TRUE(ortho::find_blocking_pair(ortho::classify(oracle::generate(K::WithBlockingPair, 12, 1))).has_value());
    EXPECT_EQ(oracle::generate(K::RandomSimple, 3, 5).size(), 3u);
}
