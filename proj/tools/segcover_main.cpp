// Command-line front end: solve / verify / gen / reduce-vc / compare.
// Exit codes are the machine contract: 0 ok, 1 infeasible, 2 parse or
// class error, 3 node budget exceeded.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "segcover/discrete_pipeline.hpp"
#include "segcover/errors.hpp"
#include "segcover/exact_oracle.hpp"
#include "segcover/generate.hpp"
#include "segcover/instance.hpp"
#include "segcover/ptas.hpp"
#include "segcover/strip_greedy.hpp"
#include "segcover/sweep_cover.hpp"

namespace {

using namespace segcover;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'", 0, 0);
    out << content;
}

struct SolveSettings {
    unsigned k = 2;
    unsigned jobs = 1;
    std::uint64_t node_budget = 10'000'000;
    bool force = false;
    bool trace = false;
};

const std::vector<std::string> kAlgorithms = {
    "greedy-strip", "h1-2approx",  "strip-arb-3approx", "hv1-4approx", "hv1-3approx",
    "hv1-ptas",     "arb-8approx", "arb-6approx",       "discrete-16", "exact"};

Rational min_endpoint_y(const std::vector<Segment>& segments) {
    Rational y = segments.empty() ? Rational(0) : segments[0].left().y;
    for (const Segment& s : segments) {
        y = std::min(y, s.left().y);
        y = std::min(y, s.right().y);
    }
    return y;
}

void require_mode(const Instance& instance, InstanceMode mode, const std::string& alg) {
    if (instance.mode != mode)
        throw InvalidInstanceError("algorithm '" + alg + "' requires a " +
                                   (mode == InstanceMode::Discrete ? "discrete" : "continuous") +
                                   " instance (got " + to_string(instance.class_tag()) + ")");
}

Cover run_algorithm(const std::string& alg, const Instance& instance,
                    const SolveSettings& settings, std::string* trace_out) {
    if (alg == "greedy-strip") {
        require_mode(instance, InstanceMode::Continuous, alg);
        return greedy_strip_cover(StripInstance{min_endpoint_y(instance.segments),
                                                instance.segments});
    }
    if (alg == "h1-2approx") {
        require_mode(instance, InstanceMode::Continuous, alg);
        return h1_two_approx(instance.segments);
    }
    if (alg == "strip-arb-3approx") {
        require_mode(instance, InstanceMode::Continuous, alg);
        return strip_arb_three_approx(StripInstance{min_endpoint_y(instance.segments),
                                                    instance.segments})
            .cover;
    }
    if (alg == "hv1-4approx") {
        require_mode(instance, InstanceMode::Continuous, alg);
        return hv1_four_approx(instance.segments);
    }
    if (alg == "hv1-3approx") {
        require_mode(instance, InstanceMode::Continuous, alg);
        return hv1_three_approx(instance.segments).cover;
    }
    if (alg == "hv1-ptas") {
        require_mode(instance, InstanceMode::Continuous, alg);
        PtasOptions options;
        options.node_budget_per_cell = settings.node_budget;
        options.jobs = settings.jobs;
        return ptas_cover(instance.segments, settings.k, options).cover;
    }
    if (alg == "arb-8approx") {
        require_mode(instance, InstanceMode::Continuous, alg);
        return arb_eight_approx(instance.segments).cover;
    }
    if (alg == "arb-6approx") {
        require_mode(instance, InstanceMode::Continuous, alg);
        return arb_six_approx(instance.segments).cover;
    }
    if (alg == "discrete-16") {
        require_mode(instance, InstanceMode::Discrete, alg);
        const PipelineResult result =
            dcsus_16_approx(DiscreteInstance{instance.segments, instance.squares});
        if (trace_out) *trace_out = format_trace(result.trace);
        return result.cover;
    }
    if (alg == "exact") {
        if (instance.segments.size() > 16 && !settings.force)
            throw InvalidInstanceError(
                "exact oracle refuses more than 16 segments without --force");
        if (instance.mode == InstanceMode::Discrete)
            return exact_discrete(instance.segments, instance.squares, settings.node_budget);
        return exact_continuous(instance.segments, settings.node_budget);
    }
    throw InvalidInstanceError("unknown algorithm '" + alg + "'");
}

int classify_exception(const std::exception& e) {
    if (dynamic_cast<const InfeasibleError*>(&e)) return kExitInfeasible;
    if (dynamic_cast<const BudgetExceededError*>(&e)) return kExitBudget;
    return kExitParse;  // parse, invalid instance, structural
}

int cmd_solve(const std::string& alg, const std::string& input, const std::string& output,
              const SolveSettings& settings, bool with_exact) {
    const Instance instance = parse_instance(read_file(input));
    std::string trace;
    const auto start = std::chrono::steady_clock::now();
    const Cover cover =
        run_algorithm(alg, instance, settings, settings.trace ? &trace : nullptr);
    const auto stop = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(stop - start).count();

    const CoverReport report = verify_cover(instance.segments, cover);
    if (!report.feasible)
        throw StructuralError("solver produced an infeasible cover: " + report.detail);
    write_file(output, serialize_cover(NamedCover{alg, cover}));
    if (settings.trace && !trace.empty()) std::cout << trace;
    std::cout << "alg=" << alg << " digest=" << instance_digest(instance)
              << " size=" << cover.size() << " time_ms=" << ms;
    if (with_exact) {
        const Cover best = run_algorithm("exact", instance, settings, nullptr);
        std::cout << " exact=" << best.size();
        if (best.size() > 0)
            std::cout << " ratio=" << static_cast<double>(cover.size()) / best.size();
    }
    std::cout << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& cover_path) {
    const Instance instance = parse_instance(read_file(instance_path));
    const NamedCover named = parse_cover(read_file(cover_path));
    const CoverReport report = verify_cover(instance.segments, named.cover);
    if (report.feasible) {
        std::cout << "feasible cover of size " << report.cardinality << "\n";
        return kExitOk;
    }
    std::cout << "infeasible: " << report.detail << "\n";
    return kExitInfeasible;
}

int cmd_gen(const std::string& cls_name, std::size_t n, std::uint64_t seed, std::int64_t bbox,
            std::int64_t height, std::int64_t m, const std::string& output) {
    const auto cls = class_tag_from_string(cls_name);
    if (!cls) throw InvalidInstanceError("unknown class '" + cls_name + "'");
    GenOptions options;
    options.bbox = bbox;
    if (height > 0) options.height = height;
    if (m >= 0) options.squares = static_cast<std::size_t>(m);
    const Instance instance = gen_random(*cls, n, seed, options);
    const std::string text = serialize_instance(instance);
    if (output.empty()) std::cout << text;
    else write_file(output, text);
    return kExitOk;
}

int cmd_reduce_vc(const std::string& graph_path, const std::string& output) {
    const GraphInput graph = parse_graph(read_file(graph_path));
    write_file(output, serialize_instance(vertex_cover_reduction(graph)));
    return kExitOk;
}

// Rendering only; exact values never flow back from here.
double to_double(const Rational& v) { return mpq_get_d(v.get_mpq_t()); }

std::string render_svg(const Instance& instance, const Cover* cover) {
    double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    bool first = true;
    auto stretch = [&](double x, double y) {
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    };
    for (const Segment& s : instance.segments) {
        stretch(to_double(s.left().x), to_double(s.left().y));
        stretch(to_double(s.right().x), to_double(s.right().y));
    }
    auto stretch_square = [&](const UnitSquare& t) {
        stretch(to_double(t.x), to_double(t.y));
        stretch(to_double(t.x) + 1, to_double(t.y) + 1);
    };
    for (const UnitSquare& t : instance.squares) stretch_square(t);
    if (cover)
        for (const UnitSquare& t : cover->squares) stretch_square(t);

    const double margin = 0.5;
    const double w = (max_x - min_x) + 2 * margin;
    const double h = (max_y - min_y) + 2 * margin;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 100 * w << "\" height=\""
        << 100 * h << "\" viewBox=\"" << min_x - margin << " " << -(max_y + margin) << " " << w
        << " " << h << "\">\n";
    // Flip y so the y axis points up.
    auto square = [&](const UnitSquare& t, const char* style) {
        out << "  <rect x=\"" << to_double(t.x) << "\" y=\"" << -(to_double(t.y) + 1)
            << "\" width=\"1\" height=\"1\" style=\"" << style << "\"/>\n";
    };
    for (const UnitSquare& t : instance.squares)
        square(t, "fill:none;stroke:#bbbbbb;stroke-width:0.02");
    if (cover)
        for (const UnitSquare& t : cover->squares)
            square(t, "fill:#2b8a3e;fill-opacity:0.15;stroke:#2b8a3e;stroke-width:0.03");
    for (const Segment& s : instance.segments) {
        out << "  <line x1=\"" << to_double(s.left().x) << "\" y1=\"" << -to_double(s.left().y)
            << "\" x2=\"" << to_double(s.right().x) << "\" y2=\"" << -to_double(s.right().y)
            << "\" style=\"stroke:#1c1c1c;stroke-width:0.04;stroke-linecap:round\"/>\n";
        for (const Point* p : {&s.left(), &s.right()})
            out << "  <circle cx=\"" << to_double(p->x) << "\" cy=\"" << -to_double(p->y)
                << "\" r=\"0.06\" style=\"fill:#d9480f\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

int cmd_svg(const std::string& input, const std::string& cover_path, const std::string& output) {
    const Instance instance = parse_instance(read_file(input));
    Cover cover;
    const bool have_cover = !cover_path.empty();
    if (have_cover) cover = parse_cover(read_file(cover_path)).cover;
    write_file(output, render_svg(instance, have_cover ? &cover : nullptr));
    return kExitOk;
}

int cmd_compare(const std::string& algs_csv, const std::string& input, bool with_exact,
                const SolveSettings& settings) {
    const Instance instance = parse_instance(read_file(input));
    std::vector<std::string> algs;
    std::stringstream ss(algs_csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) algs.push_back(item);

    std::size_t exact_size = 0;
    if (with_exact) {
        const Cover best = run_algorithm("exact", instance, settings, nullptr);
        exact_size = best.size();
    }

    std::cout << "alg\tsize\ttime_ms\tratio\n";
    for (const std::string& alg : algs) {
        const auto start = std::chrono::steady_clock::now();
        const Cover cover = run_algorithm(alg, instance, settings, nullptr);
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        const CoverReport report = verify_cover(instance.segments, cover);
        if (!report.feasible)
            throw StructuralError("algorithm '" + alg + "' produced an infeasible cover: " +
                                  report.detail);
        std::cout << alg << "\t" << cover.size() << "\t" << ms << "\t";
        if (with_exact && exact_size > 0)
            std::cout << static_cast<double>(cover.size()) / exact_size;
        std::cout << "\n";
    }
    if (with_exact) std::cout << "exact\t" << exact_size << "\t\t1\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covering line segments with axis-parallel unit squares"};
    app.require_subcommand(1);

    std::string alg, input, output, cover_path, graph_path, algs_csv, cls_name;
    SolveSettings settings;
    bool with_exact = false;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::int64_t bbox = 10, height = 0, squares = -1;

    CLI::App* solve = app.add_subcommand("solve", "Run one algorithm, write a cover file");
    solve->add_option("--alg", alg, "Algorithm")->required()->check(CLI::IsMember(kAlgorithms));
    solve->add_option("--k", settings.k, "Shifting parameter for hv1-ptas");
    solve->add_option("-i,--input", input, "Instance file")->required();
    solve->add_option("-o,--output", output, "Cover file to write")->required();
    solve->add_option("--jobs", settings.jobs, "Worker threads for independent subproblems");
    solve->add_option("--node-budget", settings.node_budget, "Branch-and-bound node budget");
    solve->add_flag("--force", settings.force, "Run the exact oracle past 16 segments");
    solve->add_flag("--trace", settings.trace, "Print the discrete pipeline stage trace");
    solve->add_flag("--exact", with_exact, "Also solve exactly and report the ratio");

    CLI::App* verify = app.add_subcommand("verify", "Check a cover file against an instance");
    verify->add_option("-i,--input", input, "Instance file")->required();
    verify->add_option("-c,--cover", cover_path, "Cover file")->required();

    CLI::App* gen = app.add_subcommand("gen", "Generate a seeded random instance");
    gen->add_option("--class", cls_name, "h1us|h1|hv1|arb|discrete")->required();
    gen->add_option("-n", n, "Segment count")->required();
    gen->add_option("--seed", seed, "PRNG seed")->required();
    gen->add_option("--bbox", bbox, "Box width (coordinates in [0, bbox])");
    gen->add_option("--height", height, "Y extent override");
    gen->add_option("-m,--squares", squares, "Square count for the discrete class");
    gen->add_option("-o,--output", output, "Output file (stdout when omitted)");

    CLI::App* reduce = app.add_subcommand("reduce-vc", "Vertex-cover graph to discrete instance");
    reduce->add_option("-g,--graph", graph_path, "Graph file")->required();
    reduce->add_option("-o,--output", output, "Instance file to write")->required();

    CLI::App* svg = app.add_subcommand("svg", "Render an instance (and optionally a cover) to SVG");
    svg->add_option("-i,--input", input, "Instance file")->required();
    svg->add_option("-c,--cover", cover_path, "Cover file to overlay");
    svg->add_option("-o,--output", output, "SVG file to write")->required();

    CLI::App* compare = app.add_subcommand("compare", "Run several algorithms on one instance");
    compare->add_option("--algs", algs_csv, "Comma-separated algorithm list")->required();
    compare->add_option("-i,--input", input, "Instance file")->required();
    compare->add_flag("--exact", with_exact, "Also solve exactly and report ratios");
    compare->add_option("--k", settings.k, "Shifting parameter for hv1-ptas");
    compare->add_option("--jobs", settings.jobs, "Worker threads");
    compare->add_option("--node-budget", settings.node_budget, "Branch-and-bound node budget");
    compare->add_flag("--force", settings.force, "Run the exact oracle past 16 segments");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(alg, input, output, settings, with_exact);
        if (verify->parsed()) return cmd_verify(input, cover_path);
        if (gen->parsed()) return cmd_gen(cls_name, n, seed, bbox, height, squares, output);
        if (reduce->parsed()) return cmd_reduce_vc(graph_path, output);
        if (svg->parsed()) return cmd_svg(input, cover_path, output);
        if (compare->parsed()) return cmd_compare(algs_csv, input, with_exact, settings);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_exception(e);
    }
    return kExitParse;
}
