#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace rotokernel;
using namespace rotokernel::cli;

namespace {

struct Input {
    std::string path;
    std::string name;
    std::string hash;
    SimplePolygon polygon;
};

Input load(const std::string& path) {
    const std::string bytes = read_file(path);
    const PolygonDocument doc = parse_document(bytes);
    bool reversed = false;
    Input in{path, doc.name, fnv1a_hex(bytes), to_polygon(doc, &reversed)};
    if (reversed) std::cerr << "warning: " << path << " lists its vertices clockwise; using the reversed order\n";
    return in;
}

std::string echo(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

int emit(const std::string& command, const std::optional<Input>& in, const Outcome& o, bool timing,
         std::chrono::steady_clock::time_point start) {
    json report{{"command", command}};
    if (in) report["input"] = {{"path", in->path}, {"name", in->name}, {"hash", in->hash}};
    report["result"] = o.payload;
    if (timing)
        report["wallTimeSeconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << report.dump(2) << '\n';
    return o.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App app{"Kernels of simple polygons under rotated orientation sets"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Add the wall time to the report");

    const std::map<std::string, KernelSet> sets{{"single", KernelSet::Single}, {"double", KernelSet::Double}};
    std::string file, out;
    double theta = 0;
    KernelSet set = KernelSet::Single;
    auto add_set = [&](CLI::App* c) {
        c->add_option("--set", set, "Orientation set: single or double")->transform(CLI::CheckedTransformer(sets));
    };

    auto* kernel = app.add_subcommand("kernel", "Kernel at one rotation");
    kernel->add_option("file", file, "Polygon document")->required();
    kernel->add_option("--theta", theta, "Rotation in radians")->required();
    add_set(kernel);

    auto* intervals = app.add_subcommand("intervals", "Rotations with a nonempty single-orientation kernel");
    intervals->add_option("file", file, "Polygon document")->required();

    ortho::Objective objective = ortho::Objective::Area;
    ortho::Sense sense = ortho::Sense::Max;
    auto* optimize = app.add_subcommand("optimize", "Best rotation of an orthogonal polygon");
    optimize->add_option("file", file, "Polygon document")->required();
    optimize->add_option("--objective", objective, "area or perimeter")
        ->transform(CLI::CheckedTransformer(std::map<std::string, ortho::Objective>{
            {"area", ortho::Objective::Area}, {"perimeter", ortho::Objective::Perimeter}}));
    optimize->add_option("--sense", sense, "max or min")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, ortho::Sense>{{"max", ortho::Sense::Max}, {"min", ortho::Sense::Min}}));

    Show show = Show::Kernel;
    auto* render = app.add_subcommand("render", "SVG figure of the polygon and its kernel");
    render->add_option("file", file, "Polygon document")->required();
    render->add_option("--theta", theta, "Rotation in radians");
    render->add_option("--out", out, "SVG path")->required();
    render->add_option("--show", show, "kernel or intervals")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Show>{{"kernel", Show::Kernel}, {"intervals", Show::Intervals}}));
    add_set(render);

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations");
    oracle_cmd->require_subcommand(1);
    std::size_t samples = 1000;
    std::optional<double> lo, hi;
    auto* scan = oracle_cmd->add_subcommand("scan", "Kernel on a uniform grid of rotations, as CSV");
    scan->add_option("file", file, "Polygon document")->required();
    scan->add_option("--samples", samples, "Grid size")->required();
    scan->add_option("--from", lo, "First rotation (default -pi/2, or 0 for the double set)");
    scan->add_option("--to", hi, "End of the grid, exclusive (default pi/2)");
    scan->add_option("--out", out, "CSV path; the CSV goes to stdout when omitted");
    add_set(scan);

    auto* clip = oracle_cmd->add_subcommand("clip", "Kernel by clipping the polygon with every constraint");
    clip->add_option("file", file, "Polygon document")->required();
    clip->add_option("--theta", theta, "Rotation in radians")->required();
    add_set(clip);

    oracle::GeneratorKind kind = oracle::GeneratorKind::RandomSimple;
    std::size_t n = 12;
    std::uint64_t seed = 1;
    auto* generate = oracle_cmd->add_subcommand("generate", "Random test polygon (ROTOKERNEL_SEED overrides --seed)");
    generate->add_option("--kind", kind, "Generator")
        ->transform(CLI::CheckedTransformer(std::map<std::string, oracle::GeneratorKind>{
            {"random_simple", oracle::GeneratorKind::RandomSimple},
            {"family_q", oracle::GeneratorKind::FamilyQ},
            {"staircase", oracle::GeneratorKind::Staircase},
            {"with_blocking_pair", oracle::GeneratorKind::WithBlockingPair},
            {"not_in_family", oracle::GeneratorKind::NotInFamily}}));
    generate->add_option("--n", n, "Vertex count");
    generate->add_option("--seed", seed, "Seed");
    generate->add_option("--out", out, "Document path; the document goes to stdout when omitted");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : BadInput;
    }

    const std::string command = echo(argc, argv);
    try {
        if (generate->parsed()) {
            const auto p = oracle::generate(kind, n, oracle::seed_or_env(seed));
            const std::string doc = write_document(to_document(p, oracle::to_string(kind)));
            if (out.empty()) {
                std::cout << doc;
                return Nonempty;
            }
            write_file(out, doc);
            Outcome o;
            o.payload = {{"kind", oracle::to_string(kind)}, {"vertices", p.size()}, {"hash", fnv1a_hex(doc)}};
            return emit(command, std::nullopt, o, timing, start);
        }

        const Input in = load(file);
        const SimplePolygon& p = in.polygon;
        if (kernel->parsed()) return emit(command, in, cmd_kernel(p, theta, set), timing, start);
        if (intervals->parsed()) return emit(command, in, cmd_intervals(p), timing, start);
        if (optimize->parsed()) return emit(command, in, cmd_optimize(p, objective, sense), timing, start);
        if (clip->parsed()) return emit(command, in, cmd_oracle_clip(p, theta, set), timing, start);
        if (render->parsed()) {
            Outcome o = cmd_render(p, theta, set, show);
            write_file(out, o.text);
            o.payload["svg"] = out;
            o.payload["svgHash"] = fnv1a_hex(o.text);
            return emit(command, in, o, timing, start);
        }
        const double from = lo.value_or(set == KernelSet::Single ? -half_pi : 0.0);
        const double to = hi.value_or(half_pi);
        Outcome o = cmd_oracle_scan(p, samples, set, from, to);
        if (out.empty()) {
            std::cout << o.text;
            return o.exit_code;
        }
        write_file(out, o.text);
        o.payload["csv"] = out;
        return emit(command, in, o, timing, start);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const NotOrthogonal& e) {
        std::cerr << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Failure;
    }
}
