// qwalk: continuous-time quantum walks on networks, link-failure sweeps and
// node-affinity reports.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 numerical
// failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qwalk/datasets.hpp"
#include "qwalk/experiments.hpp"
#include "qwalk/report_io.hpp"
#include "qwalk/version.hpp"
#include "qwalk/walk.hpp"

namespace {

using namespace qwalk;

/// Accepts a literal double or "<x>pi" (e.g. "100pi").
double parse_time(const std::string& text) {
    std::string s = text;
    double factor = 1.0;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
        factor = std::numbers::pi;
        s = s.substr(0, s.size() - 2);
        if (s.empty()) s = "1";
    }
    try {
        std::size_t used = 0;
        double value = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(text);
        return value * factor;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--T", "cannot parse time: " + text);
    }
}

struct WalkFlags {
    std::string T_text = "100pi";
    double dt_frac = 1e-3;
    std::string generator = "adjacency";
    std::string initial = "uniform";
    int start = 1;

    void attach(CLI::App* cmd, bool with_generator = true, bool with_initial = true) {
        cmd->add_option("--T", T_text,
                        "total walk time, a literal or e.g. \"100pi\" (default 100pi)");
        cmd->add_option("--dt-frac", dt_frac, "sampling step as a fraction of T")
            ->check(CLI::PositiveNumber);
        if (with_generator)
            cmd->add_option("--generator", generator, "walk generator")
                ->check(CLI::IsMember({"adjacency", "laplacian"}));
        if (with_initial) {
            cmd->add_option("--initial", initial, "initial state")
                ->check(CLI::IsMember({"uniform", "localized"}));
            cmd->add_option("--start", start, "start node for a localized initial state");
        }
    }

    WalkConfig resolve() const {
        WalkConfig cfg;
        cfg.T = parse_time(T_text);
        cfg.dt = dt_frac * cfg.T;
        cfg.generator =
            generator == "laplacian" ? GeneratorKind::Laplacian : GeneratorKind::Adjacency;
        cfg.initial = initial == "localized" ? InitialState::localized(start)
                                             : InitialState::uniform();
        cfg.validate();
        return cfg;
    }
};

struct InputFlags {
    std::string dataset;
    std::string input_path;

    void attach(CLI::App* cmd) {
        auto* ds = cmd->add_option("--dataset", dataset, "built-in dataset")
                       ->check(CLI::IsMember({"karate"}));
        cmd->add_option("--input", input_path, "edge-list file to load")->excludes(ds);
    }

    LabeledNetwork load() const {
        if (!dataset.empty()) return karate_club();
        if (!input_path.empty()) return load_edge_list(input_path);
        throw CLI::RequiredError("--dataset or --input");
    }

    std::string describe() const { return !dataset.empty() ? dataset : input_path; }
};

RunManifest make_manifest(const std::string& command, const InputFlags& input,
                          const WalkConfig& cfg) {
    RunManifest m;
    m.command = command;
    m.tool_version = kToolVersion;
    m.parameters["input"] = input.describe();
    m.parameters["T"] = format_csv_number(cfg.T);
    m.parameters["dt"] = format_csv_number(cfg.dt);
    m.parameters["generator"] =
        cfg.generator == GeneratorKind::Adjacency ? "adjacency" : "laplacian";
    if (cfg.initial.kind == InitialState::Kind::Uniform) {
        m.parameters["initial"] = "uniform";
    } else {
        m.parameters["initial"] = "localized";
        m.parameters["start"] = std::to_string(cfg.initial.node);
    }
    return m;
}

void write_manifest_sidecar(const std::filesystem::path& path, RunManifest& manifest,
                            std::chrono::steady_clock::time_point begin) {
    manifest.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    write_file_atomic(path, manifest.to_json_full().dump(2) + "\n");
}

int run_centrality(const InputFlags& input, const WalkFlags& walk,
                   const std::string& output, const std::string& format) {
    auto begin = std::chrono::steady_clock::now();
    LabeledNetwork net = input.load();
    WalkConfig cfg = walk.resolve();
    CentralityReport report = centrality_population_report(net.graph, cfg);
    RunManifest manifest = make_manifest("centrality", input, cfg);

    if (format == "json") {
        write_file_atomic(output, centrality_json(report, manifest).dump(2) + "\n");
    } else {
        write_file_atomic(output, centrality_csv(report));
    }
    write_manifest_sidecar(output + ".manifest.json", manifest, begin);

    if (report.spearman_rho)
        std::cerr << "spearman_rho " << format_csv_number(*report.spearman_rho) << "\n";
    else
        std::cerr << "spearman_rho undefined (constant ranks)\n";
    return 0;
}

int run_sweep(const InputFlags& input, const WalkFlags& walk, const std::string& out_dir,
              int jobs) {
    auto begin = std::chrono::steady_clock::now();
    LabeledNetwork net = input.load();
    WalkConfig cfg = walk.resolve();
    SweepResult sweep = edge_removal_sweep(net.graph, cfg, jobs);
    RunManifest manifest = make_manifest("sweep", input, cfg);

    std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    write_file_atomic(dir / "baseline.csv", sweep_baseline_csv(sweep));
    write_file_atomic(dir / "deltas.csv", sweep_deltas_csv(sweep));
    write_file_atomic(dir / "signs.csv", sweep_signs_csv(sweep));
    write_file_atomic(dir / "sweep.json", sweep_json(sweep, manifest).dump(2) + "\n");
    write_manifest_sidecar(dir / "manifest.json", manifest, begin);

    std::cerr << "swept " << sweep.edge_count() << " edges over " << sweep.node_count()
              << " nodes\n";
    return 0;
}

int run_affinity(const InputFlags& input, const WalkFlags& walk,
                 const std::string& from_sweep, const std::string& out_csv,
                 const std::string& out_svg, int jobs) {
    auto begin = std::chrono::steady_clock::now();
    Matrix alpha;
    RunManifest manifest;
    if (!from_sweep.empty()) {
        std::ifstream in(from_sweep);
        if (!in) throw io_error("cannot open sweep document: " + from_sweep);
        nlohmann::json doc = nlohmann::json::parse(in, nullptr, true, true);
        alpha = affinity_from_signs(signs_from_sweep_json(doc));
        manifest.command = "affinity";
        manifest.tool_version = kToolVersion;
        manifest.parameters["from_sweep"] = from_sweep;
    } else {
        LabeledNetwork net = input.load();
        WalkConfig cfg = walk.resolve();
        alpha = affinity(edge_removal_sweep(net.graph, cfg, jobs));
        manifest = make_manifest("affinity", input, cfg);
    }

    write_file_atomic(out_csv, affinity_csv(alpha));
    if (!out_svg.empty()) write_file_atomic(out_svg, affinity_svg(alpha));
    write_manifest_sidecar(out_csv + ".manifest.json", manifest, begin);
    return 0;
}

int run_compare(const InputFlags& input, const std::string& T_text, double dt_frac,
                int start, const std::string& output) {
    auto begin = std::chrono::steady_clock::now();
    LabeledNetwork net = input.load();
    double T = parse_time(T_text);
    double dt = dt_frac * T;
    if (start < 1 || start > net.graph.node_count())
        throw CLI::ValidationError("--start", "start node out of range");
    GeneratorComparison cmp = compare_generators(net.graph, start, T, dt);

    RunManifest manifest;
    manifest.command = "compare";
    manifest.tool_version = kToolVersion;
    manifest.parameters["input"] = input.describe();
    manifest.parameters["T"] = format_csv_number(T);
    manifest.parameters["dt"] = format_csv_number(dt);
    manifest.parameters["start"] = std::to_string(start);

    write_file_atomic(output, compare_csv(cmp));
    write_manifest_sidecar(output + ".manifest.json", manifest, begin);
    std::cerr << "max_gap " << format_csv_number(cmp.max_gap) << "\n";
    return 0;
}

int run_generate(int communities, int size, double p_in, double p_out, std::uint64_t seed,
                 const std::string& output, const std::string& labels_out) {
    auto begin = std::chrono::steady_clock::now();
    GeneratorParams params{communities, size, p_in, p_out, seed};
    LabeledNetwork net = planted_partition(params);

    std::ostringstream edges;
    write_edge_list_text(edges, net.graph);
    write_file_atomic(output, edges.str());

    std::string labels_path = labels_out.empty() ? output + ".labels" : labels_out;
    std::ostringstream labels;
    write_labels_text(labels, *net.labels);
    write_file_atomic(labels_path, labels.str());

    RunManifest manifest;
    manifest.command = "generate";
    manifest.tool_version = kToolVersion;
    manifest.parameters["communities"] = std::to_string(communities);
    manifest.parameters["size"] = std::to_string(size);
    manifest.parameters["p_in"] = format_csv_number(p_in);
    manifest.parameters["p_out"] = format_csv_number(p_out);
    manifest.parameters["seed"] = std::to_string(seed);
    write_manifest_sidecar(output + ".manifest.json", manifest, begin);

    if (!net.connected)
        std::cerr << "warning: generated graph is disconnected after 100 reseeds\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous-time quantum walks on networks"};
    app.set_version_flag("--version", qwalk::kToolVersion);
    app.require_subcommand(1);

    // centrality
    auto* centrality = app.add_subcommand(
        "centrality", "degree centrality vs time-averaged population per node");
    InputFlags centrality_input;
    WalkFlags centrality_walk;
    std::string centrality_out = "centrality.csv";
    std::string centrality_format = "csv";
    centrality_input.attach(centrality);
    centrality_walk.attach(centrality, /*with_generator=*/false, /*with_initial=*/false);
    centrality->add_option("-o,--output", centrality_out, "output file");
    centrality->add_option("--format", centrality_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // sweep
    auto* sweep = app.add_subcommand("sweep",
                                     "recompute populations after each single-edge removal");
    InputFlags sweep_input;
    WalkFlags sweep_walk;
    std::string sweep_dir = "sweep_out";
    int sweep_jobs = 1;
    sweep_input.attach(sweep);
    sweep_walk.attach(sweep);
    sweep->add_option("-o,--output-dir", sweep_dir, "output directory");
    sweep->add_option("--jobs", sweep_jobs, "parallel workers (output is identical for any value)")
        ->check(CLI::PositiveNumber);

    // affinity
    auto* affinity_cmd =
        app.add_subcommand("affinity", "node-affinity matrix from flow signs");
    InputFlags affinity_input;
    WalkFlags affinity_walk;
    std::string affinity_from, affinity_out = "affinity.csv", affinity_svg_out;
    int affinity_jobs = 1;
    affinity_input.attach(affinity_cmd);
    affinity_walk.attach(affinity_cmd);
    affinity_cmd->add_option("--from-sweep", affinity_from,
                             "reuse the signs of an existing sweep.json");
    affinity_cmd->add_option("-o,--output", affinity_out, "CSV output");
    affinity_cmd->add_option("--svg", affinity_svg_out, "also render an SVG heatmap here");
    affinity_cmd->add_option("--jobs", affinity_jobs, "parallel workers")
        ->check(CLI::PositiveNumber);

    // compare
    auto* compare =
        app.add_subcommand("compare", "adjacency vs Laplacian walk from a localized start");
    InputFlags compare_input;
    std::string compare_T = "100pi";
    double compare_dt_frac = 1e-3;
    int compare_start = 1;
    std::string compare_out = "compare.csv";
    compare_input.attach(compare);
    compare->add_option("--T", compare_T, "total walk time");
    compare->add_option("--dt-frac", compare_dt_frac, "sampling step as a fraction of T")
        ->check(CLI::PositiveNumber);
    compare->add_option("--start", compare_start, "localized start node");
    compare->add_option("-o,--output", compare_out, "output file");

    // generate
    auto* generate = app.add_subcommand("generate", "seeded planted-partition benchmark graph");
    int gen_c = 2, gen_size = 10;
    double gen_pin = 0.5, gen_pout = 0.05;
    std::uint64_t gen_seed = 0;
    std::string gen_out = "generated.edges", gen_labels;
    generate->add_option("-c,--communities", gen_c, "community count");
    generate->add_option("-s,--size", gen_size, "nodes per community");
    generate->add_option("--pin", gen_pin, "intra-community edge probability");
    generate->add_option("--pout", gen_pout, "inter-community edge probability");
    generate->add_option("--seed", gen_seed, "64-bit seed");
    generate->add_option("-o,--output", gen_out, "edge-list output file");
    generate->add_option("--labels", gen_labels, "labels sidecar (default <output>.labels)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return 1;
    }

    try {
        if (centrality->parsed())
            return run_centrality(centrality_input, centrality_walk, centrality_out,
                                  centrality_format);
        if (sweep->parsed()) return run_sweep(sweep_input, sweep_walk, sweep_dir, sweep_jobs);
        if (affinity_cmd->parsed())
            return run_affinity(affinity_input, affinity_walk, affinity_from, affinity_out,
                                affinity_svg_out, affinity_jobs);
        if (compare->parsed())
            return run_compare(compare_input, compare_T, compare_dt_frac, compare_start,
                               compare_out);
        if (generate->parsed())
            return run_generate(gen_c, gen_size, gen_pin, gen_pout, gen_seed, gen_out,
                                gen_labels);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const qwalk::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qwalk::numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
