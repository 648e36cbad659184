#include "kct/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace kct {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("write failed for " + path);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    if (text.size() >= 3 && text.compare(0, 3, "\xef\xbb\xbf") == 0) pos = 3;  // UTF-8 BOM
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    for (auto& l : lines)
        if (!l.empty() && l.back() == '\r') l.pop_back();
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

[[noreturn]] void fail_at(const std::string& name, std::size_t line_no, const std::string& what) {
    throw InputError(name + " line " + std::to_string(line_no) + ": " + what);
}

double parse_double(const std::string& name, std::size_t line_no, const std::string& field,
                    const char* what) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty())
        fail_at(name, line_no, std::string("bad ") + what + " '" + field + "'");
    return value;
}

std::int64_t parse_id(const std::string& name, std::size_t line_no, const std::string& field) {
    std::int64_t value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || field.empty())
        fail_at(name, line_no, "bad id '" + field + "'");
    return value;
}

std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

void expect_header(const std::vector<std::string>& lines, const std::string& name,
                   const std::string& expected) {
    if (lines.empty()) throw InputError(name + ": empty file, expected header " + expected);
    if (lines[0] != expected)
        fail_at(name, 1, "expected header '" + expected + "', got '" + lines[0] + "'");
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

GraphBundle load_graph_text(const std::string& vertices_csv, const std::string& edges_csv,
                            const std::string& vertices_name, const std::string& edges_name) {
    GraphBundle b;
    const auto vlines = split_lines(vertices_csv);
    expect_header(vlines, vertices_name, "id,label,lat_deg,lon_deg");
    std::vector<Vertex> verts;
    for (std::size_t i = 1; i < vlines.size(); ++i) {
        if (vlines[i].empty()) continue;
        const auto f = split_csv_line(vlines[i]);
        if (f.size() != 4)
            fail_at(vertices_name, i + 1, "expected 4 fields, got " + std::to_string(f.size()));
        const std::int64_t ext = parse_id(vertices_name, i + 1, f[0]);
        if (b.by_ext_id.count(ext))
            fail_at(vertices_name, i + 1, "duplicate vertex id " + std::to_string(ext));
        const double lat = parse_double(vertices_name, i + 1, f[2], "latitude");
        const double lon = parse_double(vertices_name, i + 1, f[3], "longitude");
        if (lat < -90.0 || lat > 90.0) fail_at(vertices_name, i + 1, "latitude out of range");
        if (lon < -180.0 || lon > 180.0) fail_at(vertices_name, i + 1, "longitude out of range");
        Vertex v;
        v.id = static_cast<VertexId>(verts.size());
        v.label = f[1];
        v.geo = GeoPoint{lat, lon};
        b.by_ext_id[ext] = v.id;
        b.ext_ids.push_back(ext);
        verts.push_back(std::move(v));
    }
    if (verts.empty()) throw InputError(vertices_name + ": no vertices");

    const auto elines = split_lines(edges_csv);
    expect_header(elines, edges_name, "u,v,minutes");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < elines.size(); ++i) {
        if (elines[i].empty()) continue;
        const auto f = split_csv_line(elines[i]);
        if (f.size() != 3)
            fail_at(edges_name, i + 1, "expected 3 fields, got " + std::to_string(f.size()));
        const std::int64_t ue = parse_id(edges_name, i + 1, f[0]);
        const std::int64_t ve = parse_id(edges_name, i + 1, f[1]);
        const auto iu = b.by_ext_id.find(ue);
        if (iu == b.by_ext_id.end())
            fail_at(edges_name, i + 1, "unknown vertex id " + std::to_string(ue));
        const auto iv = b.by_ext_id.find(ve);
        if (iv == b.by_ext_id.end())
            fail_at(edges_name, i + 1, "unknown vertex id " + std::to_string(ve));
        dist_t w = 0;
        try {
            w = parse_minutes_exact(f[2]);
        } catch (const InputError& e) {
            fail_at(edges_name, i + 1, e.what());
        }
        if (w <= 0) fail_at(edges_name, i + 1, "nonpositive weight " + f[2]);
        edges.push_back({iu->second, iv->second, w});
    }
    try {
        b.graph = RoadGraph::build(std::move(verts), edges);
    } catch (const InputError& e) {
        throw InputError(edges_name + ": " + e.what());
    }
    const auto lost = find_unreachable(b.graph, 0);
    if (lost) {
        const auto& v = b.graph.vertex(*lost);
        throw InputError("graph is disconnected: vertex '" + v.label + "' (id " +
                         std::to_string(b.ext_ids[static_cast<std::size_t>(*lost)]) +
                         ") is unreachable from '" + b.graph.vertex(0).label + "'");
    }
    return b;
}

GraphBundle load_graph(const std::string& vertices_path, const std::string& edges_path) {
    return load_graph_text(read_file(vertices_path), read_file(edges_path), vertices_path,
                           edges_path);
}

void apply_planar_text(GraphBundle& b, const std::string& planar_csv, const std::string& name) {
    const auto lines = split_lines(planar_csv);
    expect_header(lines, name, "id,x_km,y_km");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto f = split_csv_line(lines[i]);
        if (f.size() != 3)
            fail_at(name, i + 1, "expected 3 fields, got " + std::to_string(f.size()));
        const std::int64_t ext = parse_id(name, i + 1, f[0]);
        const auto it = b.by_ext_id.find(ext);
        if (it == b.by_ext_id.end()) fail_at(name, i + 1, "unknown vertex id " + f[0]);
        const double x = parse_double(name, i + 1, f[1], "x_km");
        const double y = parse_double(name, i + 1, f[2], "y_km");
        b.graph.set_planar(it->second, PlanarPoint{x, y});
    }
}

GraphBundle load_bundle_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    auto b = load_graph((fs::path(dir) / "vertices.csv").string(),
                        (fs::path(dir) / "edges.csv").string());
    const auto planar = fs::path(dir) / "planar.csv";
    if (fs::exists(planar)) apply_planar_text(b, read_file(planar.string()), planar.string());
    return b;
}

std::string emit_vertices_csv(const GraphBundle& b) {
    std::string out = "id,label,lat_deg,lon_deg\n";
    for (VertexId v = 0; v < b.graph.vertex_count(); ++v) {
        const auto& vx = b.graph.vertex(v);
        if (!vx.geo) throw InputError("vertex " + vx.label + " has no geo coordinates");
        out += std::to_string(b.ext_ids[static_cast<std::size_t>(v)]) + "," +
               csv_field(vx.label) + "," + fmt_double(vx.geo->lat_deg) + "," +
               fmt_double(vx.geo->lon_deg) + "\n";
    }
    return out;
}

std::string emit_edges_csv(const GraphBundle& b) {
    std::string out = "u,v,minutes\n";
    for (const auto& e : b.graph.edges()) {
        out += std::to_string(b.ext_ids[static_cast<std::size_t>(e.u)]) + "," +
               std::to_string(b.ext_ids[static_cast<std::size_t>(e.v)]) + "," +
               minutes_str(e.weight) + "\n";
    }
    return out;
}

std::string emit_planar_csv(const GraphBundle& b) {
    std::string out = "id,x_km,y_km\n";
    for (VertexId v = 0; v < b.graph.vertex_count(); ++v) {
        const auto& vx = b.graph.vertex(v);
        if (!vx.planar) throw InputError("vertex " + vx.label + " has no planar coordinates");
        out += std::to_string(b.ext_ids[static_cast<std::size_t>(v)]) + "," +
               fmt_double(vx.planar->x_km) + "," + fmt_double(vx.planar->y_km) + "\n";
    }
    return out;
}

void save_bundle(const GraphBundle& b, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create directory " + dir + ": " + ec.message());
    write_file((fs::path(dir) / "vertices.csv").string(), emit_vertices_csv(b));
    write_file((fs::path(dir) / "edges.csv").string(), emit_edges_csv(b));
    bool all_planar = true;
    for (VertexId v = 0; v < b.graph.vertex_count() && all_planar; ++v)
        all_planar = b.graph.vertex(v).planar.has_value();
    if (all_planar && b.graph.vertex_count() > 0)
        write_file((fs::path(dir) / "planar.csv").string(), emit_planar_csv(b));
}

const PlanarFrame& project_bundle(GraphBundle& b) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(b.graph.vertex_count()));
    for (VertexId v = 0; v < b.graph.vertex_count(); ++v) {
        const auto& vx = b.graph.vertex(v);
        if (!vx.geo) throw InputError("vertex " + vx.label + " has no geo coordinates");
        pts.push_back(to_ecef(*vx.geo));
    }
    b.frame = fit_plane(pts);
    const auto planar = project(pts, *b.frame);
    for (VertexId v = 0; v < b.graph.vertex_count(); ++v)
        b.graph.set_planar(v, planar[static_cast<std::size_t>(v)]);
    return *b.frame;
}

VertexId resolve_vertex(const GraphBundle& b, const std::string& token) {
    VertexId found = -1;
    for (VertexId v = 0; v < b.graph.vertex_count(); ++v) {
        if (b.graph.vertex(v).label == token) {
            if (found >= 0) throw InputError("ambiguous vertex label '" + token + "'");
            found = v;
        }
    }
    if (found >= 0) return found;
    std::int64_t ext = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, ext);
    if (ec == std::errc() && ptr == last && !token.empty()) {
        const auto it = b.by_ext_id.find(ext);
        if (it != b.by_ext_id.end()) return it->second;
    }
    throw InputError("no vertex with label or id '" + token + "'");
}

GraphBundle gen_random_graph(const GenConfig& cfg) {
    if (cfg.n < 1) throw InputError("n must be at least 1");
    if (cfg.weight_min < 1 || cfg.weight_max < cfg.weight_min)
        throw InputError("bad weight range");
    if (cfg.density < 0.0) throw InputError("density must be nonnegative");
    if (cfg.side_km <= 0.0) throw InputError("side_km must be positive");
    const int n = cfg.n;
    std::mt19937_64 rng(cfg.seed);
    const auto u01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    std::vector<PlanarPoint> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) {
        p.x_km = u01() * cfg.side_km;
        p.y_km = u01() * cfg.side_km;
    }

    // random attachment tree keeps everything connected
    std::set<std::pair<int, int>> chosen;
    for (int i = 1; i < n; ++i) {
        const int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
        chosen.insert({std::min(parent, i), std::max(parent, i)});
    }

    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    const long long target =
        std::min(max_edges, std::max<long long>(n - 1, std::llround(cfg.density * n)));

    if (static_cast<long long>(chosen.size()) < target) {
        const auto d2 = [&pts](int a, int b) {
            const double dx = pts[a].x_km - pts[b].x_km;
            const double dy = pts[a].y_km - pts[b].y_km;
            return dx * dx + dy * dy;
        };
        const int kk = std::min(n - 1, std::max(3, static_cast<int>(std::ceil(2.0 * cfg.density)) + 2));
        std::set<std::tuple<double, int, int>> pool;
        std::vector<std::pair<double, int>> near;
        for (int i = 0; i < n; ++i) {
            near.clear();
            for (int j = 0; j < n; ++j)
                if (j != i) near.emplace_back(d2(i, j), j);
            std::partial_sort(near.begin(), near.begin() + kk, near.end());
            for (int t = 0; t < kk; ++t) {
                const int j = near[static_cast<std::size_t>(t)].second;
                pool.insert({near[static_cast<std::size_t>(t)].first, std::min(i, j),
                             std::max(i, j)});
            }
        }
        for (const auto& [d, a, bb] : pool) {
            (void)d;
            if (static_cast<long long>(chosen.size()) >= target) break;
            chosen.insert({a, bb});
        }
    }

    std::vector<Edge> edges;
    edges.reserve(chosen.size());
    const std::uint64_t span = static_cast<std::uint64_t>(cfg.weight_max - cfg.weight_min) + 1;
    for (const auto& [a, bb] : chosen) {
        const dist_t w = cfg.weight_min + static_cast<dist_t>(rng() % span);
        edges.push_back({a, bb, w});
    }

    const double km_per_deg = kEarthRadiusKm * kPi / 180.0;
    const double lat0_rad = cfg.lat0_deg * kPi / 180.0;
    GraphBundle b;
    std::vector<Vertex> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& v = verts[static_cast<std::size_t>(i)];
        v.id = i;
        v.label = "v" + std::to_string(i);
        const double lat = cfg.lat0_deg + (pts[static_cast<std::size_t>(i)].y_km - cfg.side_km / 2.0) / km_per_deg;
        const double lon = cfg.lon0_deg + (pts[static_cast<std::size_t>(i)].x_km - cfg.side_km / 2.0) /
                                              (km_per_deg * std::cos(lat0_rad));
        if (lat < -90.0 || lat > 90.0 || lon < -180.0 || lon > 180.0)
            throw InputError("side_km too large for the chosen square midpoint");
        v.geo = GeoPoint{lat, lon};
        b.ext_ids.push_back(i);
        b.by_ext_id[i] = i;
    }
    b.graph = RoadGraph::build(std::move(verts), edges);
    return b;
}

}  // namespace kct
