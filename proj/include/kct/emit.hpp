#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kct/borders.hpp"
#include "kct/io.hpp"
#include "kct/solver.hpp"

namespace kct {

// Solution document with a fixed key order: k, R_minutes, min_radius,
// mean_radius, stddev_radius, centers, tus, stage_trace, constraint_ok.
// All radii are decimal minutes with one fractional digit. Vertex ids are
// the file-level ids.
std::string emit_solution(const Solution& sol, const GraphBundle& b);

struct ParsedSolution {
    int k = 0;
    double R_minutes = 0.0;
    double min_radius = 0.0;
    double mean_radius = 0.0;
    double stddev_radius = 0.0;
    std::vector<std::pair<std::int64_t, std::string>> centers;  // (id, label)
    struct Tu {
        std::int64_t center = 0;
        std::vector<std::int64_t> members;
        double radius_minutes = 0.0;
    };
    std::vector<Tu> tus;
    std::vector<std::pair<std::string, double>> stage_trace;  // (stage, R_minutes)
    bool constraint_ok = false;
};

// Strict inverse of emit_solution. Throws InputError on malformed input.
ParsedSolution parse_solution(const std::string& text);

// Rebuilds the partition a parsed solution describes, against this bundle.
CenteredPartition partition_from_parsed(const ParsedSolution& ps, const GraphBundle& b,
                                        const DistanceMatrix& dm);

// Header k,R_minutes,min_radius_minutes,mean_radius_minutes,
// stddev_radius_minutes,centers with one data line per successful row;
// centers are semicolon-joined labels, quoted when needed.
std::string emit_sweep_csv(std::span<const SweepRow> rows, const GraphBundle& b);

// FeatureCollection: one Point per vertex with {label, tu_index,
// is_center}, one LineString per road edge (layer "road") and per border
// segment (layer "border"). Border midpoints are lifted back to the
// sphere through the bundle's projection frame.
std::string emit_geojson(const GraphBundle& b, const CenteredPartition* p,
                         const BorderSketch* borders);

std::string emit_exact(const ExactResult& res, int k, bool constrained, const GraphBundle& b);

struct RenderSpec {
    int width_px = 1000;
    int height_px = 0;  // 0 derives the height from the data aspect ratio
    std::vector<std::string> palette = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                        "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                                        "#9c755f", "#bab0ac", "#1170aa", "#a3cce9"};
    bool edges = true;
    bool centers = true;  // emphasize center vertices
    bool borders = true;
    bool labels = false;
};

// Deterministic SVG: one circle per vertex (centers drawn larger with an
// outline), one line per road edge, border segments as paths in their own
// group. viewBox is the data bounding box plus a 5% margin.
std::string render_svg(const GraphBundle& b, const CenteredPartition* p,
                       const BorderSketch* borders, const RenderSpec& spec = {});

}  // namespace kct
