#include <algorithm>
#include <cmath>
#include <cstdio>

#include "kct/emit.hpp"

namespace kct {

namespace {

std::string f3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const GraphBundle& b, const CenteredPartition* p,
                       const BorderSketch* borders, const RenderSpec& spec) {
    const VertexId n = b.graph.vertex_count();
    std::vector<PlanarPoint> pts(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        const auto& vx = b.graph.vertex(v);
        if (!vx.planar)
            throw InputError("vertex " + vx.label +
                             " has no planar coordinates; run the projection first");
        pts[static_cast<std::size_t>(v)] = *vx.planar;
    }
    double minx = pts[0].x_km, maxx = pts[0].x_km, miny = pts[0].y_km, maxy = pts[0].y_km;
    for (const auto& q : pts) {
        minx = std::min(minx, q.x_km);
        maxx = std::max(maxx, q.x_km);
        miny = std::min(miny, q.y_km);
        maxy = std::max(maxy, q.y_km);
    }
    double span = std::max(maxx - minx, maxy - miny);
    if (span <= 0.0) span = 1.0;
    const double margin = 0.05 * span;
    const auto fy = [&](double y) { return maxy - y; };  // map orientation, north up
    const double x0 = minx - margin;
    const double y0 = -margin;
    const double w = (maxx - minx) + 2.0 * margin;
    const double h = (maxy - miny) + 2.0 * margin;
    const int width_px = spec.width_px;
    const int height_px =
        spec.height_px > 0 ? spec.height_px
                           : std::max(1, static_cast<int>(std::llround(width_px * h / w)));

    const double dot_r = span * 0.012;
    const double center_r = dot_r * 1.8;
    const double edge_w = span * 0.004;
    const double border_w = span * 0.006;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width_px) + "\" height=\"" + std::to_string(height_px) +
                      "\" viewBox=\"" + f3(x0) + " " + f3(y0) + " " + f3(w) + " " + f3(h) +
                      "\">\n";

    if (spec.edges && b.graph.edge_count() > 0) {
        svg += "<g stroke=\"#888888\" stroke-width=\"" + f3(edge_w) +
               "\" stroke-linecap=\"round\">\n";
        for (const auto& e : b.graph.edges()) {
            const auto& a = pts[static_cast<std::size_t>(e.u)];
            const auto& c = pts[static_cast<std::size_t>(e.v)];
            svg += "<line x1=\"" + f3(a.x_km) + "\" y1=\"" + f3(fy(a.y_km)) + "\" x2=\"" +
                   f3(c.x_km) + "\" y2=\"" + f3(fy(c.y_km)) + "\"/>\n";
        }
        svg += "</g>\n";
    }

    std::size_t border_segments = 0;
    if (borders)
        for (const auto& pr : borders->pairs) border_segments += pr.sketch.segments.size();
    if (spec.borders && border_segments > 0) {
        svg += "<g class=\"borders\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" +
               f3(border_w) + "\" stroke-linecap=\"round\">\n";
        for (const auto& pr : borders->pairs) {
            for (const auto& [i, j] : pr.sketch.segments) {
                const auto& a = pr.sketch.points[static_cast<std::size_t>(i)];
                const auto& c = pr.sketch.points[static_cast<std::size_t>(j)];
                svg += "<path d=\"M " + f3(a.x_km) + " " + f3(fy(a.y_km)) + " L " + f3(c.x_km) +
                       " " + f3(fy(c.y_km)) + "\"/>\n";
            }
        }
        svg += "</g>\n";
    }

    for (VertexId v = 0; v < n; ++v) {
        const int tu = p ? p->tu_of[v] : -1;
        std::string fill = "#555555";
        if (tu >= 0 && !spec.palette.empty())
            fill = spec.palette[static_cast<std::size_t>(tu) % spec.palette.size()];
        const bool is_center =
            spec.centers && p && tu >= 0 && p->tus[static_cast<std::size_t>(tu)].center == v;
        const auto& q = pts[static_cast<std::size_t>(v)];
        svg += "<circle cx=\"" + f3(q.x_km) + "\" cy=\"" + f3(fy(q.y_km)) + "\" r=\"" +
               f3(is_center ? center_r : dot_r) + "\" fill=\"" + fill + "\"";
        if (is_center) svg += " stroke=\"#000000\" stroke-width=\"" + f3(edge_w) + "\"";
        svg += "/>\n";
    }

    if (spec.labels) {
        const double fs = span * 0.025;
        svg += "<g font-family=\"sans-serif\" font-size=\"" + f3(fs) + "\" fill=\"#111111\">\n";
        for (VertexId v = 0; v < n; ++v) {
            const auto& q = pts[static_cast<std::size_t>(v)];
            svg += "<text x=\"" + f3(q.x_km + 1.2 * dot_r) + "\" y=\"" +
                   f3(fy(q.y_km) - 1.2 * dot_r) + "\">" + xml_escape(b.graph.vertex(v).label) +
                   "</text>\n";
        }
        svg += "</g>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace kct
