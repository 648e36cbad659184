#include "kct/emit.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace kct {

namespace {

using ordered_json = nlohmann::ordered_json;

// one fractional digit, e.g. 4.35 -> 4.4 (half away from zero)
double round1(double x) { return std::llround(x * 10.0) / 10.0; }

std::string fmt1(double x) { return minutes_str(std::llround(x * 10.0)); }

ordered_json id_label(const GraphBundle& b, VertexId v) {
    ordered_json j;
    j["id"] = b.ext_ids[static_cast<std::size_t>(v)];
    j["label"] = b.graph.vertex(v).label;
    return j;
}

}  // namespace

std::string emit_solution(const Solution& sol, const GraphBundle& b) {
    const auto st = radius_stats(sol.partition);
    ordered_json j;
    j["k"] = static_cast<int>(sol.centers.size());
    j["R_minutes"] = to_minutes(sol.R);
    j["min_radius"] = to_minutes(sol.min_radius);
    j["mean_radius"] = round1(st.mean_minutes);
    j["stddev_radius"] = round1(st.stddev_minutes);
    auto centers = ordered_json::array();
    for (VertexId c : sol.centers) centers.push_back(id_label(b, c));
    j["centers"] = std::move(centers);
    auto tus = ordered_json::array();
    for (std::size_t t = 0; t < sol.partition.tus.size(); ++t) {
        const auto& tu = sol.partition.tus[t];
        ordered_json tj;
        tj["center"] = b.ext_ids[static_cast<std::size_t>(tu.center)];
        auto members = ordered_json::array();
        for (VertexId m : tu.members) members.push_back(b.ext_ids[static_cast<std::size_t>(m)]);
        tj["members"] = std::move(members);
        tj["radius"] = to_minutes(sol.partition.radii[t]);
        tus.push_back(std::move(tj));
    }
    j["tus"] = std::move(tus);
    auto trace = ordered_json::array();
    for (const auto& s : sol.stage_trace) {
        ordered_json sj;
        sj["stage"] = s.stage;
        sj["R_minutes"] = to_minutes(s.radius);
        trace.push_back(std::move(sj));
    }
    j["stage_trace"] = std::move(trace);
    j["constraint_ok"] = sol.constraint_ok;
    return j.dump(2) + "\n";
}

ParsedSolution parse_solution(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad solution document: ") + e.what());
    }
    try {
        ParsedSolution ps;
        ps.k = j.at("k").get<int>();
        ps.R_minutes = j.at("R_minutes").get<double>();
        ps.min_radius = j.at("min_radius").get<double>();
        ps.mean_radius = j.at("mean_radius").get<double>();
        ps.stddev_radius = j.at("stddev_radius").get<double>();
        for (const auto& c : j.at("centers"))
            ps.centers.emplace_back(c.at("id").get<std::int64_t>(),
                                    c.at("label").get<std::string>());
        for (const auto& t : j.at("tus")) {
            ParsedSolution::Tu tu;
            tu.center = t.at("center").get<std::int64_t>();
            for (const auto& m : t.at("members")) tu.members.push_back(m.get<std::int64_t>());
            tu.radius_minutes = t.at("radius").get<double>();
            ps.tus.push_back(std::move(tu));
        }
        for (const auto& s : j.at("stage_trace"))
            ps.stage_trace.emplace_back(s.at("stage").get<std::string>(),
                                        s.at("R_minutes").get<double>());
        ps.constraint_ok = j.at("constraint_ok").get<bool>();
        return ps;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad solution document: ") + e.what());
    }
}

CenteredPartition partition_from_parsed(const ParsedSolution& ps, const GraphBundle& b,
                                        const DistanceMatrix& dm) {
    std::vector<CenteredTU> tus;
    tus.reserve(ps.tus.size());
    for (const auto& t : ps.tus) {
        CenteredTU tu;
        const auto ic = b.by_ext_id.find(t.center);
        if (ic == b.by_ext_id.end())
            throw InputError("solution refers to unknown vertex id " + std::to_string(t.center));
        tu.center = ic->second;
        for (std::int64_t m : t.members) {
            const auto im = b.by_ext_id.find(m);
            if (im == b.by_ext_id.end())
                throw InputError("solution refers to unknown vertex id " + std::to_string(m));
            tu.members.push_back(im->second);
        }
        tus.push_back(std::move(tu));
    }
    return centered_partition(dm, std::move(tus));
}

std::string emit_sweep_csv(std::span<const SweepRow> rows, const GraphBundle& b) {
    std::string out =
        "k,R_minutes,min_radius_minutes,mean_radius_minutes,stddev_radius_minutes,centers\n";
    for (const auto& r : rows) {
        if (!r.error.empty()) continue;
        std::string labels;
        for (std::size_t i = 0; i < r.centers.size(); ++i) {
            if (i) labels += ";";
            labels += b.graph.vertex(r.centers[i]).label;
        }
        out += std::to_string(r.k) + "," + minutes_str(r.R) + "," + minutes_str(r.min_radius) +
               "," + fmt1(r.mean_radius_minutes) + "," + fmt1(r.stddev_radius_minutes) + "," +
               csv_field(labels) + "\n";
    }
    return out;
}

std::string emit_geojson(const GraphBundle& b, const CenteredPartition* p,
                         const BorderSketch* borders) {
    ordered_json features = ordered_json::array();
    for (VertexId v = 0; v < b.graph.vertex_count(); ++v) {
        const auto& vx = b.graph.vertex(v);
        if (!vx.geo) throw InputError("vertex " + vx.label + " has no geo coordinates");
        ordered_json f;
        f["type"] = "Feature";
        f["geometry"] = {{"type", "Point"},
                         {"coordinates", {vx.geo->lon_deg, vx.geo->lat_deg}}};
        ordered_json props;
        props["label"] = vx.label;
        const int tu = p ? p->tu_of[v] : -1;
        props["tu_index"] = tu;
        props["is_center"] = p && tu >= 0 && p->tus[static_cast<std::size_t>(tu)].center == v;
        f["properties"] = std::move(props);
        features.push_back(std::move(f));
    }
    for (const auto& e : b.graph.edges()) {
        const auto& gu = *b.graph.vertex(e.u).geo;
        const auto& gv = *b.graph.vertex(e.v).geo;
        ordered_json f;
        f["type"] = "Feature";
        f["geometry"] = {{"type", "LineString"},
                         {"coordinates",
                          {{gu.lon_deg, gu.lat_deg}, {gv.lon_deg, gv.lat_deg}}}};
        f["properties"] = {{"layer", "road"}, {"minutes", to_minutes(e.weight)}};
        features.push_back(std::move(f));
    }
    if (borders) {
        if (!b.frame)
            throw InputError("no projection frame on the bundle; run the projection first");
        for (const auto& pr : borders->pairs) {
            for (const auto& [i, j] : pr.sketch.segments) {
                const auto ga = to_geo(b.frame->unproject(pr.sketch.points[static_cast<std::size_t>(i)]));
                const auto gb = to_geo(b.frame->unproject(pr.sketch.points[static_cast<std::size_t>(j)]));
                ordered_json f;
                f["type"] = "Feature";
                f["geometry"] = {{"type", "LineString"},
                                 {"coordinates",
                                  {{ga.lon_deg, ga.lat_deg}, {gb.lon_deg, gb.lat_deg}}}};
                f["properties"] = {{"layer", "border"}, {"tu_a", pr.tu_a}, {"tu_b", pr.tu_b}};
                features.push_back(std::move(f));
            }
        }
    }
    ordered_json j;
    j["type"] = "FeatureCollection";
    j["features"] = std::move(features);
    return j.dump(2) + "\n";
}

std::string emit_exact(const ExactResult& res, int k, bool constrained, const GraphBundle& b) {
    ordered_json j;
    j["k"] = k;
    j["constrained"] = constrained;
    j["R_minutes"] = to_minutes(res.R);
    auto centers = ordered_json::array();
    for (VertexId c : res.centers) centers.push_back(id_label(b, c));
    j["centers"] = std::move(centers);
    j["subsets_checked"] = res.subsets_checked;
    return j.dump(2) + "\n";
}

}  // namespace kct
