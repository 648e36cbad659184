#include "kct/geo.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace kct {

namespace {
constexpr double kDegToRad = 3.14159265358979323846 / 180.0;
constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;
}  // namespace

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& a) {
    const double n = norm(a);
    return {a.x / n, a.y / n, a.z / n};
}

Vec3 to_ecef(const GeoPoint& p, double earth_radius_km) {
    if (!(p.lat_deg >= -90.0 && p.lat_deg <= 90.0))
        throw InputError("latitude out of range: " + std::to_string(p.lat_deg));
    if (!(p.lon_deg >= -180.0 && p.lon_deg <= 180.0))
        throw InputError("longitude out of range: " + std::to_string(p.lon_deg));
    const double lat = p.lat_deg * kDegToRad;
    const double lon = p.lon_deg * kDegToRad;
    return {earth_radius_km * std::cos(lat) * std::cos(lon),
            earth_radius_km * std::cos(lat) * std::sin(lon),
            earth_radius_km * std::sin(lat)};
}

GeoPoint to_geo(const Vec3& p) {
    const double r = norm(p);
    if (r == 0.0) throw GeometryError("cannot map the origin to the sphere");
    return {std::asin(p.z / r) * kRadToDeg, std::atan2(p.y, p.x) * kRadToDeg};
}

double great_circle_km(const GeoPoint& a, const GeoPoint& b, double earth_radius_km) {
    const Vec3 u = normalized(to_ecef(a, 1.0));
    const Vec3 v = normalized(to_ecef(b, 1.0));
    return earth_radius_km * std::atan2(norm(cross(u, v)), dot(u, v));
}

PlanarFrame fit_plane(std::span<const Vec3> points) {
    if (points.size() < 3)
        throw GeometryError("plane fit needs at least 3 points, got " +
                            std::to_string(points.size()));

    // accumulate in a canonical order so a permuted input yields the exact
    // same frame (floating-point sums are order sensitive)
    std::vector<Vec3> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const Vec3& a, const Vec3& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    });

    Vec3 centroid{};
    for (const Vec3& p : sorted) centroid = centroid + p;
    centroid = (1.0 / static_cast<double>(sorted.size())) * centroid;

    Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
    for (const Vec3& p : sorted) {
        const Vec3 d = p - centroid;
        Eigen::Vector3d e(d.x, d.y, d.z);
        cov += e * e.transpose();
    }

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
    const Eigen::Vector3d evals = eig.eigenvalues();  // ascending
    // collinear (or coincident) cloud: the two smallest variances vanish
    if (evals(1) <= 1e-12 * std::max(evals(2), 1e-300))
        throw GeometryError("plane fit is degenerate: points are collinear");

    Eigen::Vector3d n = eig.eigenvectors().col(0);  // least variance
    Vec3 normal{n(0), n(1), n(2)};
    // orient away from the Earth center so maps are not mirrored
    const double out = dot(normal, centroid);
    if (out < 0.0) normal = -1.0 * normal;
    if (out == 0.0) {
        double m = normal.x;
        if (std::abs(normal.y) > std::abs(m)) m = normal.y;
        if (std::abs(normal.z) > std::abs(m)) m = normal.z;
        if (m < 0.0) normal = -1.0 * normal;
    }

    // in-plane x axis: local east at the centroid, projected into the plane
    const Vec3 east{-centroid.y, centroid.x, 0.0};
    Vec3 u = east - dot(east, normal) * normal;
    if (norm(u) < 1e-9 * std::max(norm(centroid), 1.0)) {
        // east undefined (centroid on the polar axis) or orthogonal to the
        // plane; fall back to a fixed axis
        for (const Vec3 axis : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
            u = axis - dot(axis, normal) * normal;
            if (norm(u) > 1e-6) break;
        }
    }
    u = normalized(u);
    const Vec3 v = cross(normal, u);

    double sq_sum = 0.0;
    for (const Vec3& p : sorted) {
        const double h = dot(p - centroid, normal);
        sq_sum += h * h;
    }

    PlanarFrame frame;
    frame.origin = centroid;
    frame.axis_u = u;
    frame.axis_v = v;
    frame.normal = normal;
    frame.rms_residual_km = std::sqrt(sq_sum / static_cast<double>(sorted.size()));
    return frame;
}

std::vector<PlanarPoint> project(std::span<const Vec3> points, const PlanarFrame& frame) {
    std::vector<PlanarPoint> out;
    out.reserve(points.size());
    for (const Vec3& p : points) out.push_back(frame.project(p));
    return out;
}

}  // namespace kct
