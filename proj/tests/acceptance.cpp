// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "polygon_io.hpp"
#include "rotokernel/generators.hpp"
#include "rotokernel/oracle.hpp"
#include "rotokernel/ortho_rotating_kernel.hpp"
#include "rotokernel/rotation_intervals.hpp"
#include "rotokernel/steady_kernel.hpp"
#include "test_support.hpp"

using namespace rotokernel;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Verdict intersection_formulas() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> c(-10, 10), slope(0.1, pi - 0.1), open(0.1, half_pi - 0.1);
    double worst = 0;
    auto track = [&](Point a, std::optional<Point> b) {
        if (!b) worst = INFINITY;
        else worst = std::max({worst, std::abs(a.x - b->x), std::abs(a.y - b->y)});
    };
    const int count = 100000;
    for (int i = 0; i < count; ++i) {
        const Point u{c(rng), c(rng)}, w{c(rng), c(rng)};
        const double y0 = c(rng), x0 = c(rng);
        const double a = slope(rng);
        track(intersect_with_horizontal(u, a, y0), testing::meet(u, a, {0, y0}, 0));
        const double b = normalize_direction(a + half_pi);
        track(intersect_with_vertical(u, b, x0), testing::meet(u, b, {x0, 0}, half_pi));
        const double t = open(rng);
        track(intersect_orthogonal_pair(u, w, t), testing::meet(u, t, w, t + half_pi));
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-12 && secs < 5,
            fmt("max error %.2e over %d instances of each operation, %.2f s", worst, count, secs)};
}

Verdict strip_equals_full_clip() {
    int bad = 0;
    double worst = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto p = gen::random_simple(4 + seed % 37, 7000 + seed);
        const auto a = steady::kernel_at(p, 0);
        const auto b = oracle::kernel_full_clip(p, 0, oracle::Mode::Single);
        if (a.empty() != b.empty()) {
            ++bad;
            continue;
        }
        const double rel = std::abs(a.area - b.area) / std::max(b.area, 1e-300);
        if (!a.empty()) worst = std::max(worst, rel);
        if (!a.empty() && rel > 1e-9) ++bad;
    }
    const SimplePolygon nt({{0, 0}, {2, 1}, {4, 0}, {2, 3}});
    const double nt_area = steady::kernel_at(nt, 0).area;
    const bool nt_ok = std::abs(nt_area - 8.0 / 3) <= 1e-9;
    return {bad == 0 && nt_ok,
            fmt("%d mismatches in 1000 polygons, worst relative area error %.2e, notched triangle area %.12f", bad,
                worst, nt_area)};
}

double distance_to_endpoint(const std::vector<intervals::AngularInterval>& iv, double theta) {
    double d = INFINITY;
    for (const auto& r : iv)
        for (double e : {r.lo, r.hi}) d = std::min(d, std::abs(std::remainder(theta - e, pi)));
    return d;
}

bool inside(const std::vector<intervals::AngularInterval>& iv, double theta) {
    return std::any_of(iv.begin(), iv.end(), [&](const auto& r) { return r.lo <= theta && theta < r.hi; });
}

Verdict scan_agreement(std::size_t& worst_ratio_n, double& worst_ratio) {
    const auto t0 = std::chrono::steady_clock::now();
    const int samples = 2000;
    const double step = pi / samples;
    int disagreements = 0;
    worst_ratio = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 4 + seed % 37;
        const auto p = gen::random_simple(n, 3000 + seed);
        const auto iv = intervals::nonempty_intervals(p);
        const double ratio = static_cast<double>(iv.size()) / static_cast<double>(n);
        if (ratio > worst_ratio) worst_ratio = ratio, worst_ratio_n = n;
        const auto scan = oracle::dense_scan(p, -half_pi, half_pi, samples, oracle::Mode::Single);
        for (int k = 0; k < samples; ++k) {
            const double theta = scan.thetas[k];
            if (distance_to_endpoint(iv, theta) < 2 * step) continue;
            if (!scan.empty[k] != inside(iv, theta)) ++disagreements;
        }
    }
    const double secs = seconds_since(t0);
    return {disagreements == 0 && secs < 300,
            fmt("%d disagreements over 200 polygons x %d angles, %.1f s", disagreements, samples, secs)};
}

Verdict eight_edges() {
    int violations = 0, nonempty = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto p = gen::family_q(4 + 2 * (seed % 30), 9000 + seed);
        for (int k = 1; k <= 50; ++k) {
            const auto kr = ortho::kernel_at_theta(p, k * half_pi / 51);
            if (kr.empty()) continue;
            ++nonempty;
            if (kr.polygon->size() > 8) ++violations;
        }
    }
    return {violations == 0, fmt("%d kernels with more than 8 edges among %d nonempty", violations, nonempty)};
}

Verdict empty_outside_family() {
    int violations = 0, checked = 0;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(1e-6, half_pi - 1e-6);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        for (const auto& p : {gen::with_blocking_pair(12 + 2 * (seed % 10), seed), gen::hooked(12 + 2 * (seed % 10), seed)}) {
            for (int k = 0; k < 50; ++k, ++checked)
                if (!ortho::kernel_at(p, angle(rng)).empty()) ++violations;
        }
    }
    return {violations == 0, fmt("%d nonempty kernels in %d checks", violations, checked)};
}

Verdict optimizer() {
    int bad = 0, interior = 0;
    double worst_area = 0, worst_perimeter = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto p = gen::family_q(4 + 2 * (seed % 20), 11000 + seed);
        const auto scan = oracle::dense_scan(p, 0, half_pi, 10000, oracle::Mode::Double);
        const double best_area = *std::max_element(scan.area.begin(), scan.area.end());
        const double best_perimeter = *std::max_element(scan.perimeter.begin(), scan.perimeter.end());
        const auto a = ortho::optimize(p, ortho::Objective::Area, ortho::Sense::Max);
        const auto b = ortho::optimize(p, ortho::Objective::Perimeter, ortho::Sense::Max);
        const double ea = std::abs(a.value - best_area) / std::max(1.0, area(p));
        const double eb = std::abs(b.value - best_perimeter) / perimeter(p);
        worst_area = std::max(worst_area, ea);
        worst_perimeter = std::max(worst_perimeter, eb);
        if (ea > 1e-6 || eb > 1e-5) ++bad;
        interior += (a.theta_star > 0) + (b.theta_star > 0);
    }
    const SimplePolygon lp({{0, 0}, {2, 0}, {2, 2}, {1, 2}, {1, 1}, {0, 1}});
    double asym = 0;
    for (int k = 1; k < 512; ++k) {
        const double t = k * half_pi / 512;
        asym = std::max(asym, std::abs(ortho::kernel_at(lp, t).area - ortho::kernel_at(lp, half_pi - t).area));
    }
    return {bad == 0 && asym <= 1e-9,
            fmt("%d misses, %d optima off rotation 0; worst scaled gap area %.2e, perimeter %.2e; L asymmetry %.2e",
                bad, interior, worst_area, worst_perimeter, asym)};
}

Verdict linear_time() {
    std::vector<double> secs;
    const std::size_t sizes[] = {100, 1000, 10000, 100000};
    for (std::size_t n : sizes) {
        const auto p = gen::staircase(n, 5);
        double best = INFINITY;
        for (int rep = 0; rep < 3; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto r = ortho::optimize(p, ortho::Objective::Area, ortho::Sense::Max);
            best = std::min(best, seconds_since(t0));
            if (r.empty_for_all_theta) best = INFINITY;
        }
        secs.push_back(best);
    }
    // 2.5 per doubling is 2.5^log2(10), about 21, per tenfold step.
    const double limit = std::pow(2.5, std::log2(10.0));
    double worst = 0;
    for (std::size_t i = 1; i < secs.size(); ++i) worst = std::max(worst, secs[i] / secs[i - 1]);
    return {worst <= limit && secs.back() < 2,
            fmt("times %.4f %.4f %.4f %.4f s, worst tenfold growth %.2f (limit %.1f)", secs[0], secs[1], secs[2],
                secs[3], worst, limit)};
}

double clipped_area(const KernelRegion& a, const KernelRegion& b) {
    std::vector<HalfPlane> hs;
    for (const auto& c : b.constraints) hs.push_back(halfplane(c.line, c.keep));
    double s = 0;
    for (const auto& piece : clip_ring_all({tag_ring(a.polygon->vertices())}, hs)) s += signed_area(untag(piece));
    return s;
}

Verdict containment() {
    int violations = 0, nonempty = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto p = gen::family_q(6 + 2 * (seed % 12), 13000 + seed);
        for (int k = 1; k <= 20; ++k) {
            const double t = k * half_pi / 21;
            const auto both = ortho::kernel_at(p, t);
            if (both.empty()) continue;
            ++nonempty;
            for (double single : {t, t - half_pi}) {
                const auto one = steady::kernel_at(p, single);
                if (one.empty() || std::abs(clipped_area(both, one) - both.area) > 1e-9) ++violations;
            }
        }
    }
    return {violations == 0 && nonempty > 0,
            fmt("%d violations over %d nonempty two-orientation kernels", violations, nonempty)};
}

struct Process {
    int code = -1;
    std::string out;
};

Process run(const std::string& args) {
    const fs::path out = fs::temp_directory_path() / ("rotokernel_acceptance_" + std::to_string(::getpid()));
    const int status = std::system((std::string(ROTOKERNEL_CLI) + " " + args + " > " + out.string() + " 2>/dev/null").c_str());
    Process p{WIFEXITED(status) ? WEXITSTATUS(status) : -1, cli::read_file(out.string())};
    fs::remove(out);
    return p;
}

Verdict determinism() {
    const fs::path dir = fs::temp_directory_path() / ("rotokernel_acceptance_dir_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    int runs = 0, differences = 0;
    for (const char* name : {"square", "nt", "dn", "lp", "plus"}) {
        const std::string f = std::string(ROTOKERNEL_DATA) + "/" + name + ".json";
        const std::string svg = (dir / "figure.svg").string(), csv = (dir / "scan.csv").string();
        const std::vector<std::string> commands{
            "kernel " + f + " --theta 0.3 --set single",
            "kernel " + f + " --theta 0.3 --set double",
            "intervals " + f,
            "optimize " + f + " --objective area --sense max",
            "optimize " + f + " --objective perimeter --sense min",
            "render " + f + " --theta 0.3 --out " + svg,
            "render " + f + " --theta 0.3 --show intervals --out " + svg,
            "oracle scan " + f + " --samples 200 --set single --out " + csv,
            "oracle scan " + f + " --samples 200 --set double",
            "oracle clip " + f + " --theta 0.3 --set double",
        };
        for (const auto& c : commands) {
            const auto a = run(c);
            const std::string art_a = fs::exists(svg) ? cli::read_file(svg) : "";
            const std::string csv_a = fs::exists(csv) ? cli::read_file(csv) : "";
            const auto b = run(c);
            const std::string art_b = fs::exists(svg) ? cli::read_file(svg) : "";
            const std::string csv_b = fs::exists(csv) ? cli::read_file(csv) : "";
            ++runs;
            if (a.code != b.code || a.out != b.out || art_a != art_b || csv_a != csv_b || (a.code != 2 && a.out.empty())) ++differences;
        }
    }
    for (const char* kind : {"random_simple", "family_q", "staircase", "with_blocking_pair", "not_in_family"}) {
        const std::string c = std::string("oracle generate --kind ") + kind + " --n 20 --seed 4";
        ++runs;
        if (run(c).out != run(c).out) ++differences;
    }
    fs::remove_all(dir);
    return {differences == 0, fmt("%d of %d commands differed between two runs", differences, runs)};
}

} // namespace

int main() {
    std::size_t ratio_n = 0;
    double ratio = 0;
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"intersection formulas match a generic solver", intersection_formulas},
        {"strip kernel equals full clip at rotation 0", strip_equals_full_clip},
        {"nonempty intervals agree with a dense scan", [&] { return scan_agreement(ratio_n, ratio); }},
        {"interval count at most 8n",
         [&] {
             return Verdict{ratio <= 8, fmt("largest count/n ratio %.3f (n = %zu)", ratio, ratio_n)};
         }},
        {"two-orientation kernels have at most 8 edges", eight_edges},
        {"blocking pairs and non-family polygons have empty kernels", empty_outside_family},
        {"optimizer matches a dense scan", optimizer},
        {"optimizer runs in linear time", linear_time},
        {"two-orientation kernel lies in both single kernels", containment},
        {"CLI output is deterministic", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        failed += v.pass ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
