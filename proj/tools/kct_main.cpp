#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kct/borders.hpp"
#include "kct/emit.hpp"
#include "kct/io.hpp"
#include "kct/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using kct::GraphBundle;
using ordered_json = nlohmann::ordered_json;

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw kct::InputError("cannot write " + path);
    out << text;
    if (!out) throw kct::InputError("write failed for " + path);
}

std::vector<std::string> split_tokens(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

ordered_json id_label_list(const GraphBundle& b, const std::vector<kct::VertexId>& vs) {
    auto arr = ordered_json::array();
    for (auto v : vs) {
        ordered_json j;
        j["id"] = b.ext_ids[static_cast<std::size_t>(v)];
        j["label"] = b.graph.vertex(v).label;
        arr.push_back(std::move(j));
    }
    return arr;
}

kct::Solution voronoi_solution(const kct::RoadGraph& g, const kct::DistanceMatrix& dm,
                               const std::vector<kct::VertexId>& centers) {
    kct::Solution sol;
    sol.partition = kct::voronoi_partition(dm, centers);
    for (const auto& tu : sol.partition.tus) sol.centers.push_back(tu.center);
    sol.R = sol.partition.partition_radius;
    sol.min_radius = kct::radius_stats(sol.partition).min;
    sol.stage_trace.push_back({"voronoi", sol.R});
    sol.constraint_ok = kct::check_center_constraint(g, sol.partition).all_ok;
    sol.start_vertex = sol.centers.front();
    return sol;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"territorial division of road graphs by constrained k-center"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (overrides the KCT_THREADS environment variable)");

    std::string data_dir, out_path;
    // solve / sweep knobs
    int k = 1, k_min = 1, k_max = 1, hop_n = 5;
    std::string seed_vertex_token;
    bool balance = false, unconstrained = false;
    std::uint64_t rng_seed = 0;
    long long budget = 100000000LL;
    std::string centers_csv, method_str = "rng", solution_path, border_method_str;
    // render knobs
    int width_px = 1000, height_px = 0;
    bool labels = false;
    // gen knobs
    int gen_n = 100;
    double gen_density = 1.64, gen_side = 400.0;
    std::string gen_wmin = "0.5", gen_wmax = "20.0";
    std::uint64_t gen_seed = 1;

    auto add_data = [&data_dir](CLI::App* cmd) {
        cmd->add_option("--data", data_dir, "bundle directory (vertices.csv, edges.csv)")
            ->required();
    };
    auto add_out = [&out_path](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output path (default: stdout)");
    };

    auto* c_stats = app.add_subcommand("stats", "metric and weight statistics of the graph");
    add_data(c_stats);
    add_out(c_stats);

    auto* c_project = app.add_subcommand("project", "fit the plane and cache planar.csv");
    add_data(c_project);

    auto* c_solve = app.add_subcommand("solve", "run the full partitioning pipeline");
    add_data(c_solve);
    add_out(c_solve);
    c_solve->add_option("--k", k, "number of territorial units")->required();
    c_solve->add_option("--seed-vertex", seed_vertex_token, "greedy start vertex (label or id)");
    c_solve->add_option("--n", hop_n, "local search hop radius (1..30)");
    c_solve->add_flag("--balance", balance, "raise the smallest radius after minimizing R");
    c_solve->add_option("--rng-seed", rng_seed, "seed for the random start vertex");

    auto* c_voronoi = app.add_subcommand("voronoi", "partition around preselected centers");
    add_data(c_voronoi);
    add_out(c_voronoi);
    c_voronoi->add_option("--centers", centers_csv, "comma-separated labels or ids")->required();

    auto* c_exact = app.add_subcommand("exact", "exhaustive optimum over all k-subsets");
    add_data(c_exact);
    add_out(c_exact);
    c_exact->add_option("--k", k, "number of territorial units")->required();
    c_exact->add_flag("--unconstrained", unconstrained, "skip the center constraint");
    c_exact->add_option("--budget", budget, "refuse above this many subsets");

    auto* c_sweep = app.add_subcommand("sweep", "solve across a range of k");
    add_data(c_sweep);
    add_out(c_sweep);
    c_sweep->add_option("--k-min", k_min, "first k")->required();
    c_sweep->add_option("--k-max", k_max, "last k")->required();
    c_sweep->add_option("--n", hop_n, "local search hop radius (1..30)");
    c_sweep->add_flag("--balance", balance, "balance step per k");
    c_sweep->add_option("--seed-vertex", seed_vertex_token, "greedy start vertex (label or id)");
    c_sweep->add_option("--rng-seed", rng_seed, "seed for the random start vertex");

    auto* c_borders = app.add_subcommand("borders", "border sketch GeoJSON for a solution");
    add_data(c_borders);
    add_out(c_borders);
    c_borders->add_option("--method", method_str, "rng or mst")
        ->check(CLI::IsMember({"rng", "mst"}))
        ->required();
    c_borders->add_option("--solution", solution_path, "solution JSON from solve")->required();

    auto* c_render = app.add_subcommand("render", "deterministic SVG map");
    add_data(c_render);
    add_out(c_render);
    c_render->add_option("--solution", solution_path, "color territorial units from this solution");
    c_render->add_option("--border-method", border_method_str, "overlay borders: rng or mst")
        ->check(CLI::IsMember({"rng", "mst"}));
    c_render->add_option("--width", width_px, "canvas width in px");
    c_render->add_option("--height", height_px, "canvas height in px (default: keep aspect)");
    c_render->add_flag("--labels", labels, "draw vertex labels");

    auto* c_gen = app.add_subcommand("gen", "generate a random connected road graph");
    c_gen->add_option("--out", out_path, "bundle directory to write")->required();
    c_gen->add_option("--n", gen_n, "vertex count")->required();
    c_gen->add_option("--density", gen_density, "target edges per vertex");
    c_gen->add_option("--wmin", gen_wmin, "minimum edge weight, minutes");
    c_gen->add_option("--wmax", gen_wmax, "maximum edge weight, minutes");
    c_gen->add_option("--side", gen_side, "square side, km");
    c_gen->add_option("--seed", gen_seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

#ifdef _OPENMP
    {
        int t = threads;
        if (t <= 0) {
            if (const char* env = std::getenv("KCT_THREADS")) t = std::atoi(env);
        }
        if (t > 0) omp_set_num_threads(t);
    }
#else
    (void)threads;
#endif

    try {
        if (c_stats->parsed()) {
            auto b = kct::load_bundle_dir(data_dir);
            const auto dm = kct::all_pairs(b.graph);
            const auto ms = kct::metric_summary(dm);
            const auto st = kct::graph_stats(b.graph, dm);
            ordered_json j;
            j["vertices"] = b.graph.vertex_count();
            j["edges"] = b.graph.edge_count();
            j["radius_minutes"] = kct::to_minutes(ms.radius);
            j["diameter_minutes"] = kct::to_minutes(ms.diameter);
            j["center"] = id_label_list(b, ms.center);
            j["periphery"] = id_label_list(b, ms.periphery);
            j["median"] = id_label_list(b, ms.median);
            j["edge_weight"] = {{"min_minutes", kct::to_minutes(st.edge_weight_min)},
                                {"max_minutes", kct::to_minutes(st.edge_weight_max)},
                                {"mean_minutes", st.edge_weight_mean_minutes},
                                {"stddev_minutes", st.edge_weight_stddev_minutes}};
            j["degree_histogram"] = st.degree_histogram;
            j["path_weight"] = {{"mean_minutes", st.path_weight_mean_minutes},
                                {"stddev_minutes", st.path_weight_stddev_minutes},
                                {"mode_minutes", st.path_weight_mode_minutes}};
            write_out(out_path, j.dump(2) + "\n");
        } else if (c_project->parsed()) {
            auto b = kct::load_bundle_dir(data_dir);
            const auto& frame = kct::project_bundle(b);
            namespace fs = std::filesystem;
            const auto path = (fs::path(data_dir) / "planar.csv").string();
            std::ofstream out(path, std::ios::binary);
            if (!out) throw kct::InputError("cannot write " + path);
            out << kct::emit_planar_csv(b);
            ordered_json j;
            j["vertices"] = b.graph.vertex_count();
            j["rms_residual_km"] = frame.rms_residual_km;
            j["planar_csv"] = path;
            std::cout << j.dump(2) << "\n";
        } else if (c_solve->parsed()) {
            auto b = kct::load_bundle_dir(data_dir);
            const auto dm = kct::all_pairs(b.graph);
            kct::SolverConfig cfg;
            cfg.k = k;
            cfg.neighborhood_n = hop_n;
            cfg.balance = balance;
            cfg.rng_seed = rng_seed;
            if (!seed_vertex_token.empty()) cfg.seed_vertex = kct::resolve_vertex(b, seed_vertex_token);
            const auto sol = kct::solve(b.graph, dm, cfg);
            std::cerr << "start vertex: " << b.graph.vertex(sol.start_vertex).label << " (id "
                      << b.ext_ids[static_cast<std::size_t>(sol.start_vertex)] << ")\n";
            if (!sol.converged) std::cerr << "warning: an iteration cap was hit\n";
            write_out(out_path, kct::emit_solution(sol, b));
        } else if (c_voronoi->parsed()) {
            auto b = kct::load_bundle_dir(data_dir);
            const auto dm = kct::all_pairs(b.graph);
            std::vector<kct::VertexId> centers;
            for (const auto& tok : split_tokens(centers_csv))
                centers.push_back(kct::resolve_vertex(b, tok));
            write_out(out_path, kct::emit_solution(voronoi_solution(b.graph, dm, centers), b));
        } else if (c_exact->parsed()) {
            auto b = kct::load_bundle_dir(data_dir);
            const auto dm = kct::all_pairs(b.graph);
            const auto res = kct::exact_solver(b.graph, dm, k, !unconstrained, budget);
            write_out(out_path, kct::emit_exact(res, k, !unconstrained, b));
        } else if (c_sweep->parsed()) {
            auto b = kct::load_bundle_dir(data_dir);
            const auto dm = kct::all_pairs(b.graph);
            kct::SolverConfig cfg;
            cfg.neighborhood_n = hop_n;
            cfg.balance = balance;
            cfg.rng_seed = rng_seed;
            if (!seed_vertex_token.empty()) cfg.seed_vertex = kct::resolve_vertex(b, seed_vertex_token);
            std::vector<int> bumps;
            const auto rows = kct::sweep(b.graph, dm, k_min, k_max, cfg, &bumps);
            for (const auto& r : rows)
                if (!r.error.empty())
                    std::cerr << "warning: k=" << r.k << " failed: " << r.error << "\n";
            for (int bk : bumps) std::cerr << "warning: R increased at k=" << bk << "\n";
            write_out(out_path, kct::emit_sweep_csv(rows, b));
        } else if (c_borders->parsed()) {
            auto b = kct::load_bundle_dir(data_dir);
            kct::project_bundle(b);  // frame + consistent planar coordinates
            const auto dm = kct::all_pairs(b.graph);
            std::ifstream in(solution_path, std::ios::binary);
            if (!in) throw kct::InputError("cannot open " + solution_path);
            std::string text((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
            const auto parsed = kct::parse_solution(text);
            const auto part = kct::partition_from_parsed(parsed, b, dm);
            const auto method =
                method_str == "mst" ? kct::BorderMethod::MST : kct::BorderMethod::RNG;
            const auto sketch = kct::border_sketch(b.graph, part, method);
            write_out(out_path, kct::emit_geojson(b, &part, &sketch));
        } else if (c_render->parsed()) {
            auto b = kct::load_bundle_dir(data_dir);
            bool have_planar = true;
            for (kct::VertexId v = 0; v < b.graph.vertex_count(); ++v)
                have_planar = have_planar && b.graph.vertex(v).planar.has_value();
            if (!have_planar || !border_method_str.empty()) kct::project_bundle(b);
            std::optional<kct::CenteredPartition> part;
            std::optional<kct::BorderSketch> sketch;
            if (!solution_path.empty()) {
                const auto dm = kct::all_pairs(b.graph);
                std::ifstream in(solution_path, std::ios::binary);
                if (!in) throw kct::InputError("cannot open " + solution_path);
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                part = kct::partition_from_parsed(kct::parse_solution(text), b, dm);
                if (!border_method_str.empty()) {
                    const auto method = border_method_str == "mst" ? kct::BorderMethod::MST
                                                                   : kct::BorderMethod::RNG;
                    sketch = kct::border_sketch(b.graph, *part, method);
                }
            } else if (!border_method_str.empty()) {
                throw kct::InputError("--border-method needs --solution");
            }
            kct::RenderSpec spec;
            spec.width_px = width_px;
            spec.height_px = height_px;
            spec.labels = labels;
            write_out(out_path, kct::render_svg(b, part ? &*part : nullptr,
                                                sketch ? &*sketch : nullptr, spec));
        } else if (c_gen->parsed()) {
            kct::GenConfig cfg;
            cfg.n = gen_n;
            cfg.density = gen_density;
            cfg.weight_min = kct::parse_minutes_exact(gen_wmin);
            cfg.weight_max = kct::parse_minutes_exact(gen_wmax);
            cfg.side_km = gen_side;
            cfg.seed = gen_seed;
            const auto b = kct::gen_random_graph(cfg);
            kct::save_bundle(b, out_path);
            ordered_json j;
            j["vertices"] = b.graph.vertex_count();
            j["edges"] = b.graph.edge_count();
            j["dir"] = out_path;
            std::cout << j.dump(2) << "\n";
        }
    } catch (const kct::BudgetError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
