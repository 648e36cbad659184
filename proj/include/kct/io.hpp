#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kct/geo.hpp"
#include "kct/graph.hpp"

namespace kct {

// A road graph plus the bookkeeping to map between file-level vertex ids
// and the dense internal ids.
struct GraphBundle {
    RoadGraph graph;
    std::vector<std::int64_t> ext_ids;           // internal id -> file id
    std::map<std::int64_t, VertexId> by_ext_id;  // file id -> internal id
    std::optional<PlanarFrame> frame;            // set once projected
};

// Parsers working on raw CSV text; the *_file wrappers add path context.
// vertices: `id,label,lat_deg,lon_deg`; edges: `u,v,minutes` (0.1-minute
// resolution); planar: `id,x_km,y_km`. Header rows are mandatory.
GraphBundle load_graph_text(const std::string& vertices_csv, const std::string& edges_csv,
                            const std::string& vertices_name = "vertices.csv",
                            const std::string& edges_name = "edges.csv");
GraphBundle load_graph(const std::string& vertices_path, const std::string& edges_path);

void apply_planar_text(GraphBundle& b, const std::string& planar_csv,
                       const std::string& name = "planar.csv");

// Loads vertices.csv + edges.csv from a directory, plus planar.csv when
// present.
GraphBundle load_bundle_dir(const std::string& dir);

std::string emit_vertices_csv(const GraphBundle& b);
std::string emit_edges_csv(const GraphBundle& b);
std::string emit_planar_csv(const GraphBundle& b);  // requires planar coords

// Writes vertices.csv and edges.csv into `dir` (created if missing), and
// planar.csv when the bundle has planar coordinates.
void save_bundle(const GraphBundle& b, const std::string& dir);

// Fits the best plane through the vertices' ECEF positions, stores the
// frame on the bundle, and fills every vertex's planar coordinates.
const PlanarFrame& project_bundle(GraphBundle& b);

// Resolves a user-supplied vertex token: exact label match first, then a
// numeric file id. Throws InputError when neither applies.
VertexId resolve_vertex(const GraphBundle& b, const std::string& token);

struct GenConfig {
    int n = 100;
    double density = 1.64;    // target edges per vertex
    dist_t weight_min = 5;    // tenths of a minute
    dist_t weight_max = 200;  // tenths of a minute
    double side_km = 400.0;   // square side the points fall in
    double lat0_deg = 56.0;   // square midpoint on the sphere
    double lon0_deg = 22.0;
    std::uint64_t seed = 1;
};

// Random geometric graph: uniform points in a square, a random attachment
// spanning tree for connectivity, then nearest-neighbor edges in distance
// order until the density target is met. Fully determined by the seed.
GraphBundle gen_random_graph(const GenConfig& cfg);

// Small CSV helpers shared by the emitters (RFC 4180 quoting).
std::string csv_field(const std::string& s);
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace kct
