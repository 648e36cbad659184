// Acceptance gate. Each criterion prints one [PASS]/[FAIL] line; the exit
// code is the number of failed criteria. Runs the installed CLI binary for
// the scale pipeline (path injected as KCT_BIN at compile time).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "kct/borders.hpp"
#include "kct/emit.hpp"
#include "kct/io.hpp"
#include "kct/solver.hpp"
#include "oracles.hpp"

using namespace kct;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] A%d %s: %s\n", ok ? "PASS" : "FAIL", idx, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

std::vector<VertexId> random_centers(std::mt19937_64& rng, int n, int k) {
    std::set<VertexId> cs;
    while (static_cast<int>(cs.size()) < k)
        cs.insert(static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n)));
    return {cs.begin(), cs.end()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// shared tallies fed by several criteria
long long g_dr_checked = 0;  // graphs passing the d <= 2r scan
long long g_dr_bad = 0;

void scan_diameter_bound(const DistanceMatrix& dm) {
    const MetricSummary ms = metric_summary(dm);
    ++g_dr_checked;
    if (ms.diameter > 2 * ms.radius) ++g_dr_bad;
}

// ---------------------------------------------------------------- A1

void a1_voronoi_dominance() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    long long partitions = 0, violations = 0;
    const int graphs = 50;
    for (int gi = 0; gi < graphs; ++gi) {
        const int n = 4 + static_cast<int>(rng() % 9);  // at most 12 vertices
        RoadGraph g = fixtures::random_connected(rng, n, static_cast<int>(rng() % n));
        DistanceMatrix dm = all_pairs(g);
        scan_diameter_bound(dm);
        const int k = 1 + static_cast<int>(rng() % std::min(4, n));
        auto cs = random_centers(rng, n, k);
        const dist_t voronoi_r = voronoi_partition(dm, cs).partition_radius;
        for (int rep = 0; rep < 1000; ++rep) {
            // random centered partition over the same centers
            dist_t alt_r = 0;
            for (int v = 0; v < n; ++v) {
                const auto it = std::find(cs.begin(), cs.end(), static_cast<VertexId>(v));
                const std::size_t slot = it != cs.end()
                                             ? static_cast<std::size_t>(it - cs.begin())
                                             : static_cast<std::size_t>(rng() % cs.size());
                alt_r = std::max(alt_r, dm.at(static_cast<VertexId>(v), cs[slot]));
            }
            ++partitions;
            if (voronoi_r > alt_r) ++violations;
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << graphs << " graphs, " << partitions << " alternative partitions, " << violations
      << " violations, " << fmt_secs(secs);
    report(1, "voronoi radius dominance", violations == 0 && secs < 60.0, d.str());
}

// ---------------------------------------------------------------- A2 + data for A3/A4

struct HeuristicRun {
    RoadGraph graph;
    DistanceMatrix dm;
    Solution solution;
};

std::vector<HeuristicRun> g_runs;  // reused by A3/A4 scans

void a2_oracle_equivalence() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(202);
    const int instances = 100;
    int matched = 0, bounded = 0, done = 0;
    while (done < instances) {
        const int n = 6 + static_cast<int>(rng() % 15);  // up to 20 vertices
        RoadGraph g = fixtures::random_connected(rng, n, static_cast<int>(rng() % n));
        DistanceMatrix dm = all_pairs(g);
        const int k = 1 + done % 3;
        ExactResult opt;
        try {
            opt = exact_solver(g, dm, k, true);
        } catch (const MetricError&) {
            continue;  // no feasible placement at this k; draw another instance
        }
        SolverConfig cfg;
        cfg.k = k;
        cfg.seed_vertex = 0;
        Solution s = solve(g, dm, cfg);
        if (s.R <= 2 * opt.R) ++bounded;
        if (s.R == opt.R) ++matched;
        scan_diameter_bound(dm);
        g_runs.push_back({std::move(g), std::move(dm), std::move(s)});
        ++done;
    }
    const double secs = seconds_since(t0);
    const double ratio = static_cast<double>(matched) / instances;
    std::ostringstream d;
    d << instances << " instances, 2x bound " << bounded << "/" << instances
      << ", exact match " << matched << "/" << instances << " (" << static_cast<int>(ratio * 100)
      << "%), " << fmt_secs(secs);
    report(2, "heuristic vs exhaustive optimum", bounded == instances && ratio >= 0.70 && secs < 300.0,
           d.str());
}

// ---------------------------------------------------------------- A3

void a3_k1_identity() {
    std::mt19937_64 rng(303);
    long long checked = 0, bad = 0;
    auto probe = [&](const RoadGraph& g, const DistanceMatrix& dm) {
        const MetricSummary ms = metric_summary(dm);
        SolverConfig cfg;
        cfg.k = 1;
        cfg.rng_seed = rng();
        const Solution s = solve(g, dm, cfg);
        ++checked;
        const bool in_center = std::binary_search(ms.center.begin(), ms.center.end(),
                                                  s.centers.at(0));
        if (!in_center || s.R != ms.radius) ++bad;
    };
    for (const RoadGraph& g : {fixtures::p5(), fixtures::p4(), fixtures::p3w(), fixtures::k3(),
                               fixtures::star5(), fixtures::grid3()})
        probe(g, all_pairs(g));
    for (const auto& run : g_runs) probe(run.graph, run.dm);
    std::ostringstream d;
    d << checked << " graphs, " << bad << " mismatches";
    report(3, "k=1 returns the metric center", bad == 0, d.str());
}

// ---------------------------------------------------------------- A4

void a4_monotone_fixpoint() {
    std::mt19937_64 rng(404);
    long long traces = 0, trace_bad = 0, passes = 0, pass_bad = 0, not_converged = 0;

    auto check_trace = [&](const std::vector<dist_t>& tr) {
        ++traces;
        for (std::size_t i = 1; i < tr.size(); ++i)
            if (tr[i] > tr[i - 1]) {
                ++trace_bad;
                return;
            }
    };

    for (int trial = 0; trial < 120; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 26);
        RoadGraph g = fixtures::random_connected(rng, n, static_cast<int>(rng() % n));
        DistanceMatrix dm = all_pairs(g);
        const int k = 1 + static_cast<int>(rng() % std::min(5, n));
        auto cs = random_centers(rng, n, k);

        FixpointResult fp = shift_recompute_fixpoint(g, dm, cs);
        check_trace(fp.radius_trace);
        if (!fp.converged) ++not_converged;

        // local search acceptances must strictly shrink R
        LocalSearchDetail detail;
        local_search(g, dm, cs, 3, Objective::MIN_MAX_RADIUS, &detail);
        dist_t prev = voronoi_partition(dm, cs).partition_radius;
        for (dist_t r : detail.pass_radii) {
            ++passes;
            if (r >= prev) ++pass_bad;
            prev = r;
        }
        check_trace(detail.fixpoint.radius_trace);
        if (!detail.fixpoint.converged) ++not_converged;
    }
    // the solve runs from A2 contribute their stage traces as well
    for (const auto& run : g_runs) {
        const auto& st = run.solution.stage_trace;
        ++traces;
        for (std::size_t i = 1; i < st.size(); ++i) {
            if (st[i].stage == "balance") continue;  // balance tracks min, R is pinned
            if (st[i].radius > st[i - 1].radius) {
                ++trace_bad;
                break;
            }
        }
        if (!run.solution.converged) ++not_converged;
    }
    std::ostringstream d;
    d << traces << " traces (" << trace_bad << " rising), " << passes << " improving passes ("
      << pass_bad << " flat), " << not_converged << " convergence failures";
    report(4, "fixpoint monotonicity", trace_bad == 0 && pass_bad == 0 && not_converged == 0,
           d.str());
}

// ---------------------------------------------------------------- A5

void a5_diameter_bound() {
    // extend the tally gathered by A1/A2 with generated road graphs
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        GenConfig cfg;
        cfg.n = 400;
        cfg.density = 1.64;
        cfg.seed = seed;
        GraphBundle b = gen_random_graph(cfg);
        scan_diameter_bound(all_pairs(b.graph));
    }
    std::ostringstream d;
    d << g_dr_checked << " graphs, " << g_dr_bad << " violations";
    report(5, "diameter at most twice the radius", g_dr_bad == 0 && g_dr_checked >= 150, d.str());
}

// ---------------------------------------------------------------- A6

void a6_cell_connectivity() {
    std::mt19937_64 rng(606);
    long long cells = 0, disconnected = 0, radius_mismatch = 0;
    const int graphs = 100;
    for (int gi = 0; gi < graphs; ++gi) {
        const int n = 6 + static_cast<int>(rng() % 35);
        RoadGraph g = fixtures::random_connected(rng, n, static_cast<int>(rng() % (2 * n)));
        DistanceMatrix dm = all_pairs(g);
        auto cs = random_centers(rng, n, 1 + static_cast<int>(rng() % std::min(6, n)));
        CenteredPartition p = voronoi_partition(dm, cs);
        for (std::size_t t = 0; t < p.tus.size(); ++t) {
            ++cells;
            auto sub = induced_subgraph(g, p.tus[t].members);
            if (!is_connected(sub.graph)) {
                ++disconnected;
                continue;
            }
            DistanceMatrix sdm = all_pairs_serial(sub.graph);
            const auto& m = p.tus[t].members;
            const VertexId local = static_cast<VertexId>(
                std::lower_bound(m.begin(), m.end(), p.tus[t].center) - m.begin());
            if (eccentricity(sdm, local) != p.radii[t]) ++radius_mismatch;
        }
    }
    std::ostringstream d;
    d << graphs << " graphs, " << cells << " cells, " << disconnected << " disconnected, "
      << radius_mismatch << " radius mismatches";
    report(6, "cells connected with matching radii", disconnected == 0 && radius_mismatch == 0,
           d.str());
}

// ---------------------------------------------------------------- A7

struct FixtureTable {
    long long checks = 0;
    long long bad = 0;
    std::string first_fail;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++bad;
            if (first_fail.empty()) first_fail = what;
        }
    }
};

void a7_fixture_table() {
    FixtureTable t;

    {  // unit path metrics, against path enumeration
        RoadGraph g = fixtures::p5();
        oracle::Matrix ref = oracle::all_pairs(g);
        DistanceMatrix dm = all_pairs(g);
        bool same = true;
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                same = same && dm.at(i, j) == ref[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        t.expect(same, "p5 distance matrix");
        MetricSummary ms = metric_summary(dm);
        t.expect(ms.radius == 20 && ms.diameter == 40, "p5 radius/diameter");
        t.expect(ms.center == std::vector<VertexId>{2}, "p5 center");
        t.expect(ms.periphery == std::vector<VertexId>{0, 4}, "p5 periphery");
        t.expect(ms.median == std::vector<VertexId>{2}, "p5 median");

        CenteredPartition p = voronoi_partition(dm, std::vector<VertexId>{0, 4});
        t.expect(p.tus[0].members == std::vector<VertexId>{0, 1, 2} &&
                     p.tus[1].members == std::vector<VertexId>{3, 4},
                 "p5 voronoi cells");
        t.expect(p.radii == std::vector<dist_t>{20, 10}, "p5 voronoi radii");
        t.expect(oracle::partition_radius(ref, {0, 4}) == p.partition_radius,
                 "p5 voronoi radius vs oracle");

        CenteredPartition tie = voronoi_partition(dm, std::vector<VertexId>{0, 2});
        t.expect(tie.tus[0].members == std::vector<VertexId>{0, 1}, "p5 tie to smaller id");

        t.expect(tu_radius(dm, {{0, 1, 2}, 0}) == 20 && tu_radius(dm, {{0, 1, 2}, 1}) == 10,
                 "p5 tu radius");
        t.expect(oracle::center_set(g, {0, 1, 2}) == std::vector<VertexId>{1},
                 "p5 induced center via paths");
        CenteredPartition off = centered_partition(
            dm, {CenteredTU{{0, 1, 2}, 0}, CenteredTU{{3, 4}, 4}});
        ConstraintReport cr = check_center_constraint(g, off);
        t.expect(!cr.tu_ok[0] && cr.tu_ok[1], "p5 constraint checks");

        t.expect(shift_centers(g, dm, std::vector<VertexId>{0, 4}) ==
                     std::vector<VertexId>{1, 4},
                 "p5 shift");
        FixpointResult fp = shift_recompute_fixpoint(g, dm, std::vector<VertexId>{0, 4});
        t.expect(fp.radius_trace == std::vector<dist_t>{20, 10} && fp.converged, "p5 fixpoint");

        t.expect(greedy_farthest_first(dm, 2, 0) == std::vector<VertexId>{0, 4},
                 "p5 greedy k=2");
        t.expect(greedy_farthest_first(dm, 3, 0) == std::vector<VertexId>{0, 2, 4},
                 "p5 greedy k=3");
        t.expect(local_search(g, dm, std::vector<VertexId>{0, 4}, 2) ==
                     std::vector<VertexId>{1, 4},
                 "p5 local search");

        SolverConfig c1;
        c1.k = 1;
        c1.seed_vertex = 0;
        t.expect(solve(g, dm, c1).centers == std::vector<VertexId>{2}, "p5 solve k=1");
        SolverConfig c2;
        c2.k = 2;
        c2.seed_vertex = 0;
        t.expect(solve(g, dm, c2).R == 10, "p5 solve k=2");
        SolverConfig c5;
        c5.k = 5;
        c5.seed_vertex = 0;
        t.expect(solve(g, dm, c5).R == 0, "p5 solve k=5");

        auto want1 = oracle::best_center_set(g, ref, 1, true);
        ExactResult e1 = exact_solver(g, dm, 1, true);
        t.expect(want1 && e1.centers == want1->centers && e1.R == want1->radius &&
                     e1.centers == std::vector<VertexId>{2} && e1.R == 20,
                 "p5 exact k=1");
        auto want2 = oracle::best_center_set(g, ref, 2, true);
        ExactResult e2 = exact_solver(g, dm, 2, true);
        t.expect(want2 && e2.centers == want2->centers && e2.R == want2->radius && e2.R == 10,
                 "p5 exact k=2");

        SolverConfig sc;
        sc.seed_vertex = 0;
        auto rows = sweep(g, dm, 1, 5, sc);
        std::vector<dist_t> col;
        for (const auto& r : rows) col.push_back(r.R);
        t.expect(col == std::vector<dist_t>{20, 10, 10, 10, 0}, "p5 sweep column");
    }

    {  // short path: balance trades nothing away and lifts the minimum
        RoadGraph g = fixtures::p4();
        DistanceMatrix dm = all_pairs(g);
        auto cs = balance_min_radius(g, dm, std::vector<VertexId>{1, 3}, 2);
        CenteredPartition p = voronoi_partition(dm, cs);
        t.expect(p.radii == std::vector<dist_t>{10, 10} && p.partition_radius == 10,
                 "p4 balance radii");
        t.expect(oracle::centers_well_placed(g, oracle::all_pairs(g), cs), "p4 balance placed");
    }

    {  // triangle distances and the unconstrained optimum
        RoadGraph g = fixtures::k3();
        oracle::Matrix ref = oracle::all_pairs(g);
        DistanceMatrix dm = all_pairs(g);
        t.expect(dm.at(0, 1) == 10 && dm.at(1, 2) == 20 && dm.at(0, 2) == 30, "k3 matrix");
        auto want = oracle::best_center_set(g, ref, 2, false);
        ExactResult e = exact_solver(g, dm, 2, false);
        t.expect(want && e.centers == want->centers && e.R == want->radius &&
                     e.centers == std::vector<VertexId>{0, 2} && e.R == 10,
                 "k3 exact k=2");
    }

    {  // weighted path stats
        RoadGraph g = fixtures::p3w();
        StatsReport st = graph_stats(g, all_pairs(g));
        t.expect(st.edge_weight_min == 10 && st.edge_weight_max == 50 &&
                     std::abs(st.edge_weight_mean_minutes - 3.0) < 1e-12,
                 "p3w edge stats");
        t.expect(std::abs(st.path_weight_mean_minutes - 4.0) < 1e-12 &&
                     st.path_weight_mode_minutes == 1,
                 "p3w path stats");
    }

    {  // star: the hub is the unique center
        RoadGraph g = fixtures::star5();
        DistanceMatrix dm = all_pairs(g);
        SolverConfig c;
        c.k = 1;
        c.seed_vertex = 1;
        Solution s = solve(g, dm, c);
        t.expect(s.centers == std::vector<VertexId>{0} && s.R == 10, "star solve k=1");
        t.expect(oracle::center_set(g, {0, 1, 2, 3, 4}) == std::vector<VertexId>{0},
                 "star center via paths");
    }

    {  // geometry fixtures
        std::vector<PlanarPoint> square = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        auto rng_lib = rng(square).segments;
        auto rng_ref = oracle::rng_edges(square);
        t.expect(rng_lib == rng_ref && rng_lib.size() == 4, "square rng");
        auto mst_lib = euclidean_mst(square);
        t.expect(std::abs(3.0 - oracle::mst_total_length(square)) < 1e-12 &&
                     mst_lib.segments.size() == 3,
                 "square mst");
        std::vector<PlanarPoint> line = {{0, 0}, {1, 0}, {2, 0}};
        t.expect(rng(line).segments == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}},
                 "collinear rng");

        RoadGraph g = fixtures::grid3();
        DistanceMatrix dm = all_pairs(g);
        CenteredPartition p = centered_partition(
            dm, {CenteredTU{{0, 1, 3, 4, 6, 7}, 4}, CenteredTU{{2, 5, 8}, 5}});
        auto mids = midpoints(cross_edges(g, p), g);
        bool mid_ok = mids.size() == 3;
        for (const auto& m : mids) mid_ok = mid_ok && std::abs(m.x_km - 1.5) < 1e-12;
        t.expect(mid_ok, "grid cut midpoints");
        for (BorderMethod method : {BorderMethod::RNG, BorderMethod::MST}) {
            BorderSketch sk = border_sketch(g, p, method);
            t.expect(sk.pairs.size() == 1 && sk.pairs[0].sketch.segments.size() == 2,
                     "grid border sketch");
        }
    }

    std::ostringstream d;
    d << t.checks << " fixture checks, " << t.bad << " mismatches";
    if (!t.first_fail.empty()) d << " (first: " << t.first_fail << ")";
    report(7, "fixture table vs oracle", t.bad == 0, d.str());
}

// ---------------------------------------------------------------- A8

bool run_cmd(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    if (rc != 0) std::fprintf(stderr, "command failed (%d): %s\n", rc, cmd.c_str());
    return rc == 0;
}

void a8_scale_pipeline() {
    namespace fs = std::filesystem;
    const std::string bin = KCT_BIN;
    const fs::path work = fs::temp_directory_path() / "kct_acceptance_scale";
    fs::remove_all(work);
    fs::create_directories(work);
    const std::string data = (work / "data").string();
    const std::string sol = (work / "solution.json").string();
    const std::string geo = (work / "borders.geojson").string();
    const std::string svg = (work / "map.svg").string();

    bool ok = run_cmd(bin + " gen --out '" + data + "' --n 1067 --density 1.64 --seed 42 >/dev/null");

    const auto t0 = Clock::now();
    ok = ok && run_cmd(bin + " project --data '" + data + "' >/dev/null");
    ok = ok && run_cmd(bin + " solve --data '" + data +
                       "' --k 15 --balance --rng-seed 7 --out '" + sol + "' 2>/dev/null");
    ok = ok && run_cmd(bin + " borders --data '" + data + "' --solution '" + sol +
                       "' --method rng --out '" + geo + "'");
    ok = ok && run_cmd(bin + " render --data '" + data + "' --solution '" + sol +
                       "' --border-method rng --out '" + svg + "'");
    const double secs = seconds_since(t0);

    std::string detail;
    if (ok) {
        try {
            // JSON: strict solution schema, constraint honored
            ParsedSolution ps = parse_solution(read_file(sol));
            if (ps.k != 15 || ps.tus.size() != 15) throw InputError("wrong k in solution");
            if (!ps.constraint_ok) throw InputError("constraint_ok is false");
            std::size_t members = 0;
            for (const auto& tu : ps.tus) members += tu.members.size();
            if (members != 1067) throw InputError("solution does not cover the graph");

            // CSV: the cached bundle (with planar.csv) reloads strictly
            GraphBundle b = load_bundle_dir(data);
            if (b.graph.vertex_count() != 1067) throw InputError("bad vertex count");
            if (b.graph.edge_count() != 1750) throw InputError("bad edge count");  // 1.64 * 1067
            for (VertexId v = 0; v < 1067; ++v)
                if (!b.graph.vertex(v).planar) throw InputError("planar.csv incomplete");

            // GeoJSON structure
            auto gj = nlohmann::json::parse(read_file(geo));
            if (gj.at("type") != "FeatureCollection") throw InputError("not a FeatureCollection");
            std::size_t points = 0, roads = 0, borders = 0;
            for (const auto& f : gj.at("features")) {
                if (f.at("type") != "Feature") throw InputError("feature without type");
                const auto& gtype = f.at("geometry").at("type");
                if (gtype == "Point") ++points;
                else if (f.at("properties").at("layer") == "road") ++roads;
                else if (f.at("properties").at("layer") == "border") ++borders;
                else throw InputError("unexpected feature");
            }
            if (points != 1067 || roads != 1750) throw InputError("wrong feature counts");
            if (borders == 0) throw InputError("no border segments at k=15");

            // SVG structure
            const std::string image = read_file(svg);
            if (image.rfind("<svg", 0) != 0 || image.find("</svg>") == std::string::npos)
                throw InputError("not an svg document");
            std::size_t circles = 0, pos = 0;
            while ((pos = image.find("<circle", pos)) != std::string::npos) {
                ++circles;
                pos += 7;
            }
            if (circles != 1067) throw InputError("wrong circle count");

            std::ostringstream d;
            d << "n=1067 m=1750, R=" << ps.R_minutes << " min, " << borders
              << " border segments, " << fmt_secs(secs);
            detail = d.str();
            ok = secs < 120.0;
            if (!ok) detail += " (over the 120s limit)";
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("output validation failed: ") + e.what();
        }
    } else {
        detail = "pipeline command failed";
    }
    report(8, "scale pipeline", ok, detail);
    fs::remove_all(work);
}

// ---------------------------------------------------------------- A9

void a9_geometry() {
    std::mt19937_64 rng_src(909);
    long long sets = 0, rng_bad = 0, mst_bad = 0, order_bad = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng_src() % 7);  // at most 8 points
        auto pts = fixtures::random_points(rng_src, n);
        ++sets;

        GeomGraph r = rng(pts);
        if (r.segments != oracle::rng_edges(pts)) ++rng_bad;

        GeomGraph t = euclidean_mst(pts);
        double t_len = 0.0, r_len = 0.0;
        for (const auto& [i, j] : t.segments)
            t_len += oracle::segment_length(pts[static_cast<std::size_t>(i)],
                                            pts[static_cast<std::size_t>(j)]);
        for (const auto& [i, j] : r.segments)
            r_len += oracle::segment_length(pts[static_cast<std::size_t>(i)],
                                            pts[static_cast<std::size_t>(j)]);
        if (std::abs(t_len - oracle::mst_total_length(pts)) > 1e-9 * std::max(1.0, t_len))
            ++mst_bad;
        if (t_len > r_len + 1e-9) ++order_bad;
    }

    // isometry on coplanar clouds
    long long pairs = 0, iso_bad = 0;
    std::uniform_real_distribution<double> span(-80.0, 80.0);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec3 base{3000.0 + span(rng_src), 2500.0, 4200.0};
        const Vec3 e1 = normalized({1.0, 0.3 + 0.01 * trial, -0.6});
        const Vec3 e2 = normalized(cross(e1, base));
        std::vector<Vec3> cloud;
        for (int i = 0; i < 12; ++i)
            cloud.push_back(base + span(rng_src) * e1 + span(rng_src) * e2);
        PlanarFrame f = fit_plane(cloud);
        auto flat = project(cloud, f);
        for (std::size_t i = 0; i < cloud.size(); ++i)
            for (std::size_t j = i + 1; j < cloud.size(); ++j) {
                const double d3 = norm(cloud[i] - cloud[j]);
                const double d2 =
                    std::hypot(flat[i].x_km - flat[j].x_km, flat[i].y_km - flat[j].y_km);
                ++pairs;
                if (std::abs(d3 - d2) > 1e-9 * std::max(1.0, d3)) ++iso_bad;
            }
    }

    std::ostringstream d;
    d << sets << " point sets (" << rng_bad << " rng, " << mst_bad << " mst, " << order_bad
      << " ordering), " << pairs << " projected pairs (" << iso_bad << " off)";
    report(9, "geometry vs brute force", rng_bad + mst_bad + order_bad + iso_bad == 0, d.str());
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    a1_voronoi_dominance();
    a2_oracle_equivalence();
    a3_k1_identity();
    a4_monotone_fixpoint();
    a5_diameter_bound();
    a6_cell_connectivity();
    a7_fixture_table();
    a8_scale_pipeline();
    a9_geometry();
    std::printf("%d/9 criteria passed in %s\n", 9 - g_failures, fmt_secs(seconds_since(t0)).c_str());
    return g_failures;
}
